#include "ggs/permgroup.hpp"

#include <deque>
#include <string>

#include "ggs/errors.hpp"

namespace ggs {

PermutationGroup::PermutationGroup(unsigned degree,
                                   std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw usage_error("generator degree does not match group degree");
}

PermutationGroup::PermutationGroup(unsigned degree,
                                   std::vector<Permutation> generators,
                                   std::shared_ptr<StabChain> chain)
    : degree_(degree), gens_(std::move(generators)), chain_(std::move(chain)) {}

PermutationGroup PermutationGroup::trivial(unsigned degree) {
  return PermutationGroup(degree, {});
}

void PermutationGroup::ensure_chain() const {
  if (chain_)
    return;
  auto chain = std::make_shared<StabChain>(degree_);
  for (const auto& g : gens_)
    chain->extend(g);
  chain_ = std::move(chain);
}

BigNat PermutationGroup::order() const {
  ensure_chain();
  return chain_->order();
}

unsigned PermutationGroup::order_log(unsigned p) const {
  auto log = order().log_exact(p);
  if (!log)
    throw theorem_violation("group order " + order().to_string() +
                            " is not a power of " + std::to_string(p));
  return *log;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw usage_error("permutation degree does not match group degree");
  ensure_chain();
  return chain_->contains(g);
}

std::vector<std::uint32_t> PermutationGroup::chain_orbit_sizes() const {
  ensure_chain();
  return chain_->orbit_sizes();
}

bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g) {
  for (const auto& gen : h.generators())
    if (!g.contains(gen))
      return false;
  return true;
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

BigNat group_order(const PermutationGroup& g) { return g.order(); }

PermutationGroup normal_closure(const PermutationGroup& ambient,
                                const std::vector<Permutation>& seed) {
  auto chain = std::make_shared<StabChain>(ambient.degree());
  std::vector<Permutation> kept;
  std::deque<Permutation> pending;
  for (const auto& s : seed) {
    if (!ambient.contains(s))
      throw usage_error("normal closure seed lies outside the ambient group");
    if (chain->extend(s)) {
      kept.push_back(s);
      pending.push_back(s);
    }
  }
  while (!pending.empty()) {
    Permutation cur = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : ambient.generators()) {
      Permutation conj = cur.conjugate(g);
      if (chain->extend(conj)) {
        kept.push_back(conj);
        pending.push_back(std::move(conj));
      }
    }
  }
  return PermutationGroup(ambient.degree(), std::move(kept), std::move(chain));
}

PermutationGroup commutator_subgroup(const PermutationGroup& h,
                                     const PermutationGroup& k,
                                     const PermutationGroup& ambient) {
  std::vector<Permutation> comms;
  for (const auto& x : h.generators())
    for (const auto& y : k.generators())
      comms.push_back(commutator(x, y));
  return normal_closure(ambient, comms);
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& g,
                                             unsigned n_max) {
  std::vector<PermutationGroup> series{g};
  for (unsigned n = 1; n <= n_max; ++n) {
    const PermutationGroup& prev = series.back();
    if (prev.generators().empty()) {
      series.push_back(prev); // stabilized at the trivial group
      continue;
    }
    PermutationGroup next = commutator_subgroup(prev, prev, prev);
    if (next.order() == prev.order()) {
      series.push_back(prev);
      continue;
    }
    series.push_back(std::move(next));
  }
  return series;
}

PermutationGroup lower_central(const PermutationGroup& g, unsigned k) {
  if (k < 2)
    throw usage_error("lower central series starts at k = 2");
  PermutationGroup term = commutator_subgroup(g, g, g);
  for (unsigned j = 3; j <= k; ++j)
    term = commutator_subgroup(term, g, g);
  return term;
}

namespace {

unsigned power_of(unsigned p, unsigned n) {
  unsigned r = 1;
  for (unsigned i = 0; i < n; ++i)
    r *= p;
  return r;
}

// Extends a leaf permutation to the disjoint union of the p^k level-k
// vertices (first) and the leaves (shifted by p^k).
Permutation extend_with_blocks(const Permutation& g, unsigned blocks,
                               unsigned block_size) {
  unsigned degree = g.degree();
  std::vector<unsigned> images(blocks + degree);
  for (unsigned v = 0; v < blocks; ++v) {
    unsigned target = g[v * block_size] / block_size;
    for (unsigned j = 0; j < block_size; ++j)
      if (g[v * block_size + j] / block_size != target)
        throw usage_error("group does not preserve the level blocks");
    images[v] = target;
  }
  for (unsigned x = 0; x < degree; ++x)
    images[blocks + x] = blocks + g[x];
  return Permutation(std::move(images));
}

} // namespace

PermutationGroup level_stabilizer(const PermutationGroup& g, unsigned p,
                                  unsigned n_total, unsigned k) {
  if (g.degree() != power_of(p, n_total))
    throw usage_error("group degree is not p^n_total");
  if (k > n_total)
    throw usage_error("stabilizer level exceeds the ambient level");
  if (k == 0)
    return g;
  unsigned blocks = power_of(p, k);
  unsigned block_size = g.degree() / blocks;

  StabChain chain(blocks + g.degree());
  std::vector<unsigned> forced(blocks);
  for (unsigned v = 0; v < blocks; ++v)
    forced[v] = v;
  chain.seed_base(forced);
  for (const auto& gen : g.generators())
    chain.extend(extend_with_blocks(gen, blocks, block_size));

  std::vector<Permutation> kernel_gens;
  for (const auto& sg : chain.strong_generators_from(blocks)) {
    std::vector<unsigned> images(g.degree());
    for (unsigned x = 0; x < g.degree(); ++x)
      images[x] = sg[blocks + x] - blocks;
    Permutation restricted(std::move(images));
    if (!restricted.is_identity())
      kernel_gens.push_back(std::move(restricted));
  }
  return PermutationGroup(g.degree(), std::move(kernel_gens));
}

PermutationGroup power_subgroup_mod(const PermutationGroup& h,
                                    const PermutationGroup& n,
                                    const PermutationGroup& ambient,
                                    unsigned p) {
  if (!is_subgroup(n, h))
    throw usage_error("power_subgroup_mod requires N <= H");
  for (const auto& x : h.generators())
    for (const auto& y : h.generators())
      if (!n.contains(commutator(x, y)))
        throw usage_error("power_subgroup_mod requires H/N abelian");
  (void)ambient;
  std::vector<Permutation> gens = n.generators();
  for (const auto& x : h.generators()) {
    Permutation xp = Permutation::identity(h.degree());
    for (unsigned i = 0; i < p; ++i)
      xp = xp * x;
    gens.push_back(std::move(xp));
  }
  return PermutationGroup(h.degree(), std::move(gens));
}

BigNat subgroup_index(const PermutationGroup& g, const PermutationGroup& h) {
  if (!is_subgroup(h, g))
    throw usage_error("subgroup_index: H is not contained in G");
  BigNat index = g.order();
  for (std::uint32_t s : h.chain_orbit_sizes()) {
    if (index.div_small(s) != 0)
      throw theorem_violation("subgroup order does not divide group order");
  }
  return index;
}

unsigned subgroup_index_log(const PermutationGroup& g,
                            const PermutationGroup& h, unsigned p) {
  auto log = subgroup_index(g, h).log_exact(p);
  if (!log)
    throw theorem_violation("subgroup index is not a power of " +
                            std::to_string(p));
  return *log;
}

Permutation restrict_to_subtree(const Permutation& g, unsigned p, unsigned x) {
  unsigned block_size = g.degree() / p;
  std::vector<unsigned> images(block_size);
  for (unsigned j = 0; j < block_size; ++j) {
    unsigned img = g[x * block_size + j];
    if (img / block_size != x)
      throw usage_error("element does not stabilize the subtree");
    images[j] = img - x * block_size;
  }
  return Permutation(std::move(images));
}

Permutation embed_in_subtree(const Permutation& h, unsigned p, unsigned x) {
  unsigned block_size = h.degree();
  std::vector<unsigned> images(p * block_size);
  for (unsigned v = 0; v < p * block_size; ++v)
    images[v] = v;
  for (unsigned j = 0; j < block_size; ++j)
    images[x * block_size + j] = x * block_size + h[j];
  return Permutation(std::move(images));
}

PermutationGroup subtree_product(const PermutationGroup& factor, unsigned p) {
  std::vector<Permutation> gens;
  for (unsigned x = 0; x < p; ++x)
    for (const auto& g : factor.generators())
      gens.push_back(embed_in_subtree(g, p, x));
  return PermutationGroup(factor.degree() * p, std::move(gens));
}

} // namespace ggs
