#ifndef GGS_PERMGROUP_HPP
#define GGS_PERMGROUP_HPP

#include <memory>
#include <vector>

#include "ggs/bignat.hpp"
#include "ggs/perm.hpp"
#include "ggs/stabchain.hpp"

namespace ggs {

// Finite permutation group given by generators, with a stabilizer chain
// built lazily on the first order or membership query. Internally mutable
// until the chain exists; frozen and freely shareable afterwards. A single
// group must not be queried from two threads before its chain is built.
class PermutationGroup {
public:
  PermutationGroup(unsigned degree, std::vector<Permutation> generators);
  static PermutationGroup trivial(unsigned degree);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  BigNat order() const;
  // log_p of the order; theorem_violation if the order is not a p-power
  // (every congruence-quotient subgroup in this project is).
  unsigned order_log(unsigned p) const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order().is_one(); }

  std::vector<std::uint32_t> chain_orbit_sizes() const;

private:
  PermutationGroup(unsigned degree, std::vector<Permutation> generators,
                   std::shared_ptr<StabChain> chain);
  void ensure_chain() const;

  unsigned degree_;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<StabChain> chain_;

  friend PermutationGroup normal_closure(const PermutationGroup&,
                                         const std::vector<Permutation>&);
};

// True if every generator of h sifts to the identity in g's chain.
bool is_subgroup(const PermutationGroup& h, const PermutationGroup& g);
bool same_group(const PermutationGroup& a, const PermutationGroup& b);

BigNat group_order(const PermutationGroup& g);

// Smallest normal subgroup of `ambient` containing `seed`: breadth-first
// closure under conjugation by the ambient generators, with every candidate
// sifted against the growing chain before insertion.
PermutationGroup normal_closure(const PermutationGroup& ambient,
                                const std::vector<Permutation>& seed);

// [h, k] for h, k normal in ambient: the normal closure of the pairwise
// generator commutators.
PermutationGroup commutator_subgroup(const PermutationGroup& h,
                                     const PermutationGroup& k,
                                     const PermutationGroup& ambient);

// G = G^(0), G^(1), ...; always returns n_max + 1 terms, repeating the
// stable term once the series stops descending.
std::vector<PermutationGroup> derived_series(const PermutationGroup& g,
                                             unsigned n_max);

// gamma_k with gamma_2 = [G, G], gamma_{j+1} = [gamma_j, G]; k >= 2.
PermutationGroup lower_central(const PermutationGroup& g, unsigned k);

// Kernel of the action induced on level k of the p-regular tree, for a
// group acting on the p^n_total leaves. Realized by a chain over the
// disjoint union of the level-k vertices and the leaves whose base starts
// with all level-k points; the stabilizer of that base prefix is the
// kernel.
PermutationGroup level_stabilizer(const PermutationGroup& g, unsigned p,
                                  unsigned n_total, unsigned k);

// <N, h^p for h in gens(H)> for N <= H with H/N abelian; under that
// hypothesis this equals the subgroup generated by N and all p-th powers
// of H. The abelian hypothesis is verified on generators.
PermutationGroup power_subgroup_mod(const PermutationGroup& h,
                                    const PermutationGroup& n,
                                    const PermutationGroup& ambient,
                                    unsigned p);

// |G| / |H| for H <= G (membership of generators is verified).
BigNat subgroup_index(const PermutationGroup& g, const PermutationGroup& h);
unsigned subgroup_index_log(const PermutationGroup& g,
                            const PermutationGroup& h, unsigned p);

// Permutation of a subtree: the action of g (which must map block x to
// itself... callers restrict stabilizing elements) on the block of leaves
// below first-level vertex x.
Permutation restrict_to_subtree(const Permutation& g, unsigned p, unsigned x);
// Embeds a permutation of one subtree's leaves into the full degree.
Permutation embed_in_subtree(const Permutation& h, unsigned p, unsigned x);

// Direct product of p copies of `factor`, the x-th copy acting on the
// leaves below first-level vertex x.
PermutationGroup subtree_product(const PermutationGroup& factor, unsigned p);

} // namespace ggs

#endif
