#ifndef GGS_CIRCULANT_HPP
#define GGS_CIRCULANT_HPP

#include <vector>

#include "ggs/fp.hpp"
#include "ggs/tuples.hpp"

namespace ggs {

// Element of F_p^p indexed by the alphabet X = {0, ..., p-1}; carries the
// vector of first-level local actions of a stabilizing tree automorphism.
struct LevelVector {
  unsigned p;
  std::vector<unsigned> coords; // length exactly p

  LevelVector(unsigned prime, std::vector<unsigned> c);
  bool operator==(const LevelVector& other) const {
    return p == other.p && coords == other.coords;
  }
};

// n x n matrix whose rows are the cyclic shifts of d.
FpMatrix circulant_matrix(unsigned p, const std::vector<unsigned>& d);

// Rank of the circulant matrix of d, computed as n - m where m is the
// multiplicity of 1 as a root of E_d = sum d_i X^i, by repeated exact
// division by (X - 1). Zero vector has rank 0. Works for any length n.
unsigned koenig_rados_rank(unsigned p, const std::vector<unsigned>& d);
unsigned koenig_rados_rank(const LevelVector& d);

// Remainders (R_1, ..., R_p) extracted by iterated Euclidean division of
// E_d by (X - 1), starting with R_p. R_p = sum d_i, R_{p-1} = sum i d_i,
// R_{p-2} = sum C(i,2) d_i.
std::vector<unsigned> remainder_map(const LevelVector& d);

// Closed binomial form R_i(d) = sum_j C(j, p-i) d_j; cross-check oracle
// for remainder_map.
std::vector<unsigned> remainder_map_binomial(const LevelVector& d);

struct CirculantProfile {
  LevelVector vector;
  std::vector<unsigned> r_values; // (R_1, ..., R_p)
  unsigned dim;                   // largest i with R_i != 0, or 0
};

CirculantProfile circulant_profile(const LevelVector& d);

// Largest i with R_i(E_d) != 0; equals koenig_rados_rank(d).
unsigned circulant_dim(const LevelVector& d);

// Dimension of the circulant space spanned by a set: the invariant
// subspaces form a flag, so this is the maximum of the members' dims.
unsigned circulant_dim_of_set(const std::vector<LevelVector>& ds);

// Membership in the i-dimensional flag subspace {d : dim Circ(d) <= i}.
bool flag_member(const LevelVector& d, unsigned i);

// Cyclic shift by one position (coordinate x picks up coordinate x-1).
LevelVector cyclic_shift(const LevelVector& d);

// Local actions of the directed generator: (0, e_1, ..., e_{p-1}).
LevelVector local_action_b(const DefiningTuple& e);

// Local actions of c = [b, a]: (e_{p-1}, -e_1, e'_2, ..., e'_{p-1}).
LevelVector local_action_c(const DefiningTuple& e);

// Rank t of the circulant matrix of (0, e); drives the stabilizer index
// formula and always lies in {2, ..., p}.
unsigned stabilizer_rank(const DefiningTuple& e);

// Vector of c-exponents of the sections of [c, c_i] modulo the third
// lower-central term, for i in {1, ..., (p-1)/2}. These vectors generate
// the circulant space representing the second derived subgroup.
LevelVector commutator_action_vector(const DefiningTuple& e, unsigned i);

// p minus the dimension of the circulant space spanned by all the
// commutator action vectors; computed from the vectors, not from the
// tuple predicates.
unsigned second_derived_codim(const DefiningTuple& e);

} // namespace ggs

#endif
