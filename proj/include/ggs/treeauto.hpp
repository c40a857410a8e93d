#ifndef GGS_TREEAUTO_HPP
#define GGS_TREEAUTO_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggs/perm.hpp"
#include "ggs/tuples.hpp"

namespace ggs {

// Vertex of the p-regular rooted tree: a digit string over {0, ..., p-1}.
// The empty string is the root.
struct Vertex {
  std::vector<unsigned> digits;
};

Vertex parse_vertex(unsigned p, const std::string& text);

// Word in the rooted generator a and the directed generator b of the
// GGS-group defined by a tuple. Stored freely reduced as written: adjacent
// letters use distinct generators and exponents are canonical in
// {1, ..., p-1}. Sections are computed on demand by letter rewriting, so a
// word never materializes a portrait.
class TreeWord {
public:
  struct Letter {
    char gen;     // 'a' or 'b'
    unsigned exp; // 1 .. p-1
  };

  static TreeWord identity(std::shared_ptr<const DefiningTuple> tuple);
  static TreeWord generator_a(std::shared_ptr<const DefiningTuple> tuple);
  static TreeWord generator_b(std::shared_ptr<const DefiningTuple> tuple);
  // c = [b, a], the normal generator of the derived subgroup.
  static TreeWord commutator_c(std::shared_ptr<const DefiningTuple> tuple);

  // Parses whitespace-separated letters "a", "b" with optional ^k
  // exponents (any integer, reduced mod p), e.g. "b a^2 b^-1 a".
  static TreeWord parse(std::shared_ptr<const DefiningTuple> tuple,
                        const std::string& text);

  unsigned p() const { return tuple_->p(); }
  const DefiningTuple& tuple() const { return *tuple_; }
  std::shared_ptr<const DefiningTuple> tuple_ptr() const { return tuple_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool trivial_word() const { return letters_.empty(); }
  std::size_t syllables() const { return letters_.size(); }

  TreeWord operator*(const TreeWord& other) const;
  TreeWord inverse() const;
  TreeWord pow(long long k) const;
  TreeWord conjugate(const TreeWord& by) const; // by^-1 * this * by

  std::string str() const;

private:
  TreeWord(std::shared_ptr<const DefiningTuple> tuple,
           std::vector<Letter> letters);
  void append_reduced(char gen, long long exp);

  std::shared_ptr<const DefiningTuple> tuple_;
  std::vector<Letter> letters_;

  friend TreeWord section(const TreeWord& w, unsigned x);
};

// Exponent k such that w acts on the first level as a^k.
unsigned root_action(const TreeWord& w);

// Section w|_x at a first-level vertex, by the syllable-collapse
// rewriting: a-letters steer the inspected position, b-letters emit either
// b (at position 0) or the prescribed power of a.
TreeWord section(const TreeWord& w, unsigned x);
TreeWord section(const TreeWord& w, const Vertex& v);

// The p first-level sections of a stabilizing word, in alphabet order.
// Throws usage_error naming the root action if w does not stabilize.
std::vector<TreeWord> first_level_sections(const TreeWord& w);

// w^(a^i); the sections of the result are those of w shifted by a^{-i}.
TreeWord conjugate_by_a_power(const TreeWord& w, long long i);

// c_i = c^(a^i).
TreeWord commutator_c_conjugate(std::shared_ptr<const DefiningTuple> tuple,
                                unsigned i);

// Sum of b-exponents mod p; a homomorphism, and invariant across words
// representing the same automorphism.
unsigned b_exponent(const TreeWord& w);

// Element of the nucleus <a> u <b>.
struct NucleusElement {
  enum class Kind { power_of_a, power_of_b };
  Kind kind;
  unsigned exponent; // 0 means the identity
};

struct ContractionResult {
  bool contracted;
  unsigned level; // first level where all sections are nucleus elements
  std::optional<NucleusElement> element; // set when level == 0
};

// Walks levels until every section is a pure generator power, or the
// depth budget runs out. Budget 0 means the default 2 + syllable count,
// which always suffices because each section step shrinks syllables.
ContractionResult contract(const TreeWord& w, unsigned depth_budget = 0);

// Decides equality of the represented automorphisms by contracting the
// difference word; terminates because the group is contracting.
bool equal(const TreeWord& w1, const TreeWord& w2);
bool is_identity(const TreeWord& w);

// Permutation induced on the p^n level-n vertices in lexicographic order.
Permutation level_permutation(const TreeWord& w, unsigned n);

} // namespace ggs

#endif
