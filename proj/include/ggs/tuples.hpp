#ifndef GGS_TUPLES_HPP
#define GGS_TUPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ggs/fp.hpp"

namespace ggs {

// Defining tuple e = (e_1, ..., e_{p-1}) of a GGS-group. Non-constant by
// construction; constant tuples are rejected with usage_error. Entries are
// stored 1-based to match the usual indexing, slot 0 is unused.
class DefiningTuple {
public:
  DefiningTuple(unsigned p, const std::vector<unsigned>& entries);

  unsigned p() const { return p_; }
  // e_i for i in {1, ..., p-1}.
  unsigned at(unsigned i) const { return e_[i]; }
  // The p-1 entries without the padding slot.
  std::vector<unsigned> values() const {
    return std::vector<unsigned>(e_.begin() + 1, e_.end());
  }

  bool operator==(const DefiningTuple& other) const {
    return p_ == other.p_ && e_ == other.e_;
  }

private:
  unsigned p_;
  std::vector<unsigned> e_; // size p, slot 0 unused
};

// First or second difference tuple. Entries are indexed from `lo` up to
// p-1; the second difference of a tuple over F_3 is empty (lo = 3 > 2).
class DifferenceTuple {
public:
  enum class Kind { first, second };

  DifferenceTuple(unsigned p, Kind kind, const std::vector<unsigned>& padded);

  unsigned p() const { return p_; }
  Kind kind() const { return kind_; }
  unsigned lo() const { return kind_ == Kind::first ? 2u : 3u; }
  unsigned hi() const { return p_ - 1; }
  bool empty() const { return lo() > hi(); }
  std::size_t size() const { return empty() ? 0 : hi() - lo() + 1; }

  unsigned at(unsigned i) const { return e_[i]; }
  std::vector<unsigned> values() const;

private:
  unsigned p_;
  Kind kind_;
  std::vector<unsigned> e_; // size p, slots below lo() unused
};

// e'_i = e_{i-1} - e_i for i in {2, ..., p-1}.
DifferenceTuple first_difference(const DefiningTuple& e);
// e''_i = e'_{i-1} - e'_i for i in {3, ..., p-1}; empty when p = 3.
DifferenceTuple second_difference(const DefiningTuple& e);

// Symmetry means e_i = e_{p-i}; for a first difference, e'_i = e'_{p+1-i};
// for a second difference, e''_i = e''_{p+2-i}. Empty tuples are symmetric.
bool is_symmetric(const DefiningTuple& e);
bool is_symmetric(const DifferenceTuple& t);

// All entries equal; empty and single-entry tuples count as constant.
bool is_constant(const DifferenceTuple& t);

// The three binary invariants controlling every index formula.
struct TupleClass {
  unsigned sym_e;       // sym(e)
  unsigned con_eprime;  // con(e')
  unsigned sym_esecond; // sym(e'')
  unsigned class_value; // con(e') + sym(e'') - sym(e), always in {0, 1, 2}

  bool operator==(const TupleClass& other) const {
    return sym_e == other.sym_e && con_eprime == other.con_eprime &&
           sym_esecond == other.sym_esecond && class_value == other.class_value;
  }
};

// Evaluates the three predicates. Checks that a symmetric tuple has a
// symmetric second difference and throws theorem_violation otherwise.
TupleClass classify(const DefiningTuple& e);

// Matrix whose right kernel is exactly the symmetric tuples, one row per
// index pair (i, p-i).
FpMatrix symmetry_matrix(unsigned p);
// Matrix whose right kernel is exactly the tuples with symmetric second
// difference, one row per pair of second-difference indices.
FpMatrix second_symmetry_matrix(unsigned p);
// Row-reduced companion of second_symmetry_matrix with the same row space:
// row i carries 1 at i, 2i and -2i at the two middle positions, -1 at p-i.
FpMatrix second_symmetry_matrix_reduced(unsigned p);

enum class SymmetryKernel { direct, second };

// Kernel-membership form of the symmetry predicates; must agree with
// is_symmetric on e resp. on second_difference(e).
bool symmetry_via_kernel(const DefiningTuple& e, SymmetryKernel which);

// For tuples with symmetric second difference the linear relation
// 2(e_{p-1} - e_1) + (e_2 - e_{p-2}) = 0 must hold.
enum class RelationCheck { holds, not_applicable };
RelationCheck symmetry_linear_relation(const DefiningTuple& e);

struct IsomorphismWitness {
  unsigned lambda; // nonzero index scaling
  unsigned mu;     // nonzero value scaling
};

// Two tuples over the same prime define isomorphic groups iff there are
// nonzero lambda, mu with e_i = mu * d_{lambda*i} for all i. Exhaustive
// search over the (p-1)^2 candidate pairs, mu-major.
std::optional<IsomorphismWitness> are_isomorphic(const DefiningTuple& e,
                                                 const DefiningTuple& d);

struct NormalForms {
  DefiningTuple form_a; // isomorphic tuple with first entry 1
  IsomorphismWitness witness_a;
  DefiningTuple form_b; // isomorphic tuple with some difference entry 1
  IsomorphismWitness witness_b;
};

NormalForms normal_forms(const DefiningTuple& e);

// Textual form "p=5 e=1,0,0,1"; parse accepts an optional comma after the
// prime and '#' comments.
std::string format_tuple(const DefiningTuple& e);
DefiningTuple parse_tuple_line(const std::string& line);

// Every tuple of length p-1 over F_p with at least two distinct entries,
// in lexicographic order. 6 tuples for p = 3, 620 for p = 5.
std::vector<DefiningTuple> all_nonconstant_tuples(unsigned p);

} // namespace ggs

#endif
