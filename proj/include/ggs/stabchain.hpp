#ifndef GGS_STABCHAIN_HPP
#define GGS_STABCHAIN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ggs/bignat.hpp"
#include "ggs/perm.hpp"

namespace ggs {

// Deterministic incremental Schreier-Sims stabilizer chain. Generators are
// inserted one at a time; after every insertion the full Schreier condition
// is restored, so order and membership queries are always exact. New base
// points are chosen as the smallest moved point, which for congruence
// quotients is the lexicographically first vertex.
class StabChain {
public:
  explicit StabChain(unsigned degree);

  // Pre-creates one chain level per given point, in order, before any
  // generator is inserted. Used to force a base prefix (e.g. the block
  // points of a level action) so that a tail of the chain is the wanted
  // pointwise stabilizer.
  void seed_base(const std::vector<unsigned>& points);

  // Inserts g into the group; returns false if it was already a member.
  bool extend(const Permutation& g);

  bool contains(const Permutation& g) const;
  Permutation sift(const Permutation& g) const; // residue after full sift

  unsigned degree() const { return degree_; }
  std::size_t base_length() const { return levels_.size(); }
  unsigned base_point(std::size_t level) const { return levels_[level].base_point; }

  BigNat order() const;
  std::vector<std::uint32_t> orbit_sizes() const;

  // Strong generators of the pointwise stabilizer of the first k base
  // points; k = 0 gives a strong generating set of the whole group.
  std::vector<Permutation> strong_generators_from(std::size_t k) const;

private:
  struct StrongGen {
    Permutation perm;
    std::size_t lo, hi; // member of S_m exactly for lo <= m <= hi
  };

  struct Level {
    unsigned base_point;
    std::vector<std::size_t> gen_ids;
    std::vector<unsigned> orbit; // BFS order, orbit[0] = base_point
    std::vector<int> orbit_pos;  // point -> index in orbit, -1 outside
    std::vector<Permutation> transversal;     // u with base^u = orbit[i]
    std::vector<Permutation> inv_transversal;
    std::size_t done_orbit = 0, done_gens = 0; // verified Schreier rectangle
  };

  std::pair<Permutation, std::size_t> sift_from(Permutation g,
                                                std::size_t start) const;
  void new_level(unsigned base_point);
  void add_strong_generator(const Permutation& g, std::size_t lo, std::size_t hi);
  void extend_orbit(std::size_t level, const Permutation& gen);
  void maybe_add_orbit_point(Level& lvl, std::size_t from_index,
                             const Permutation& gen);
  void complete_level(std::size_t level);

  unsigned degree_;
  std::vector<StrongGen> gens_;
  std::vector<Level> levels_;
};

} // namespace ggs

#endif
