#include "ggs/stabchain.hpp"

#include "ggs/errors.hpp"

namespace ggs {

StabChain::StabChain(unsigned degree) : degree_(degree) {}

void StabChain::seed_base(const std::vector<unsigned>& points) {
  if (!gens_.empty())
    throw usage_error("seed_base must precede generator insertion");
  for (unsigned pt : points)
    new_level(pt);
}

void StabChain::new_level(unsigned base_point) {
  Level lvl;
  lvl.base_point = base_point;
  lvl.orbit_pos.assign(degree_, -1);
  lvl.orbit.push_back(base_point);
  lvl.orbit_pos[base_point] = 0;
  lvl.transversal.push_back(Permutation::identity(degree_));
  lvl.inv_transversal.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(lvl));
}

std::pair<Permutation, std::size_t> StabChain::sift_from(Permutation g,
                                                         std::size_t start) const {
  for (std::size_t m = start; m < levels_.size(); ++m) {
    const Level& lvl = levels_[m];
    unsigned x = g[lvl.base_point];
    if (x == lvl.base_point)
      continue;
    int pos = lvl.orbit_pos[x];
    if (pos < 0)
      return {std::move(g), m};
    g = g * lvl.inv_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

Permutation StabChain::sift(const Permutation& g) const {
  return sift_from(g, 0).first;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw usage_error("permutation degree does not match chain");
  return sift_from(g, 0).first.is_identity();
}

bool StabChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw usage_error("permutation degree does not match chain");
  auto [residue, level] = sift_from(g, 0);
  if (residue.is_identity())
    return false;
  if (level == levels_.size()) {
    unsigned moved = degree_;
    for (unsigned x = 0; x < degree_; ++x)
      if (residue[x] != x) {
        moved = x;
        break;
      }
    new_level(moved);
  }
  add_strong_generator(residue, 0, level);
  for (std::size_t m = level + 1; m-- > 0;)
    complete_level(m);
  return true;
}

void StabChain::add_strong_generator(const Permutation& g, std::size_t lo,
                                     std::size_t hi) {
  gens_.push_back(StrongGen{g, lo, hi});
  std::size_t id = gens_.size() - 1;
  for (std::size_t m = lo; m <= hi; ++m) {
    levels_[m].gen_ids.push_back(id);
    extend_orbit(m, g);
  }
}

void StabChain::maybe_add_orbit_point(Level& lvl, std::size_t from_index,
                                      const Permutation& gen) {
  unsigned y = gen[lvl.orbit[from_index]];
  if (lvl.orbit_pos[y] >= 0)
    return;
  lvl.orbit_pos[y] = static_cast<int>(lvl.orbit.size());
  lvl.orbit.push_back(y);
  Permutation u = lvl.transversal[from_index] * gen;
  lvl.inv_transversal.push_back(u.inverse());
  lvl.transversal.push_back(std::move(u));
}

void StabChain::extend_orbit(std::size_t level, const Permutation& gen) {
  Level& lvl = levels_[level];
  std::size_t old_size = lvl.orbit.size();
  for (std::size_t i = 0; i < old_size; ++i)
    maybe_add_orbit_point(lvl, i, gen);
  // close newly reached points under the whole generator list
  for (std::size_t i = old_size; i < lvl.orbit.size(); ++i)
    for (std::size_t gid : lvl.gen_ids)
      maybe_add_orbit_point(lvl, i, gens_[gid].perm);
}

void StabChain::complete_level(std::size_t level) {
  // Deeper-level insertions below reallocate levels_ and gens_, so the
  // level is re-read by index on every iteration.
  const std::size_t n_orbit = levels_[level].orbit.size();
  const std::size_t n_gens = levels_[level].gen_ids.size();
  const std::size_t done_orbit = levels_[level].done_orbit;
  const std::size_t done_gens = levels_[level].done_gens;
  for (std::size_t i = 0; i < n_orbit; ++i) {
    for (std::size_t j = 0; j < n_gens; ++j) {
      if (i < done_orbit && j < done_gens)
        continue; // already verified
      Permutation schreier;
      {
        const Level& lvl = levels_[level];
        const Permutation& s = gens_[lvl.gen_ids[j]].perm;
        unsigned target = s[lvl.orbit[i]];
        int pos = lvl.orbit_pos[target];
        schreier = lvl.transversal[i] * s *
                   lvl.inv_transversal[static_cast<std::size_t>(pos)];
      }
      if (schreier.is_identity())
        continue;
      auto [residue, stick] = sift_from(std::move(schreier), level + 1);
      if (residue.is_identity())
        continue;
      if (stick == levels_.size()) {
        unsigned moved = degree_;
        for (unsigned x = 0; x < degree_; ++x)
          if (residue[x] != x) {
            moved = x;
            break;
          }
        new_level(moved);
      }
      add_strong_generator(residue, level + 1, stick);
      for (std::size_t m = stick + 1; m-- > level + 1;)
        complete_level(m);
    }
  }
  levels_[level].done_orbit = n_orbit;
  levels_[level].done_gens = n_gens;
}

BigNat StabChain::order() const {
  BigNat n(1);
  for (const Level& lvl : levels_)
    n *= static_cast<std::uint32_t>(lvl.orbit.size());
  return n;
}

std::vector<std::uint32_t> StabChain::orbit_sizes() const {
  std::vector<std::uint32_t> sizes;
  sizes.reserve(levels_.size());
  for (const Level& lvl : levels_)
    sizes.push_back(static_cast<std::uint32_t>(lvl.orbit.size()));
  return sizes;
}

std::vector<Permutation> StabChain::strong_generators_from(std::size_t k) const {
  std::vector<Permutation> out;
  for (const StrongGen& g : gens_)
    if (g.lo <= k && k <= g.hi)
      out.push_back(g.perm);
  return out;
}

} // namespace ggs
