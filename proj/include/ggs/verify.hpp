#ifndef GGS_VERIFY_HPP
#define GGS_VERIFY_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ggs/formulas.hpp"
#include "ggs/permgroup.hpp"
#include "ggs/treeauto.hpp"
#include "ggs/tuples.hpp"

namespace ggs {

enum class Check {
  derived,
  stabilizers,
  branching,
  small_quotients,
  local_laws,
  g2_structure,
};

std::string check_name(Check c);
Check parse_check(const std::string& name);
std::set<Check> all_checks();

struct CheckRecord {
  std::string name;      // stable identifier, e.g. "derived n=2"
  std::string statement; // what is being compared
  std::string predicted;
  std::string computed;
  std::string verdict; // "pass", "fail" or "skipped"
  double millis = 0.0;
};

struct VerificationReport {
  DefiningTuple tuple;
  unsigned level;
  std::vector<CheckRecord> records;

  bool all_pass() const;
};

// Builds and caches the congruence quotients of one GGS-group together
// with their distinguished subgroups. Owned by a single thread.
class QuotientLab {
public:
  explicit QuotientLab(const DefiningTuple& e);

  unsigned p() const { return tuple_->p(); }
  const DefiningTuple& tuple() const { return *tuple_; }
  std::shared_ptr<const DefiningTuple> tuple_ptr() const { return tuple_; }

  const PermutationGroup& quotient(unsigned level);
  Permutation word_perm(const TreeWord& w, unsigned level);
  Permutation gen_a(unsigned level);
  Permutation gen_b(unsigned level);
  Permutation gen_c(unsigned level); // image of [b, a]

  // n-th derived subgroup of the level quotient (n = 0 is the quotient).
  const PermutationGroup& derived_term(unsigned level, unsigned n);
  const PermutationGroup& gamma3(unsigned level);
  // Kernel of the induced action on level k.
  const PermutationGroup& level_kernel(unsigned level, unsigned k);
  const PermutationGroup& stab1_derived(unsigned level);
  const PermutationGroup& gamma3_stab1(unsigned level);

private:
  std::shared_ptr<const DefiningTuple> tuple_;
  std::map<unsigned, PermutationGroup> quotients_;
  std::map<unsigned, std::vector<PermutationGroup>> derived_;
  std::map<unsigned, PermutationGroup> gamma3_;
  std::map<std::pair<unsigned, unsigned>, PermutationGroup> kernels_;
  std::map<unsigned, PermutationGroup> stab1_derived_;
  std::map<unsigned, PermutationGroup> gamma3_stab1_;
};

// Brute-forces log_p |Q : Q^(n)| in the level quotient and compares with
// the closed form. Requires level >= n+1 (level >= 2 for n = 1): the
// kernel of the quotient map is then contained in the n-th derived
// subgroup, making the quotient index exact. When level > n+1 that
// containment is itself checked inside the quotient.
CheckRecord verify_derived(QuotientLab& lab, unsigned n, unsigned level);

// Compares brute-forced stabilizer-kernel indices with the closed form
// for k = 1..level, and checks |Q_level| = |Q_k| * |kernel| for each k.
std::vector<CheckRecord> verify_stabilizers(QuotientLab& lab, unsigned level);

// Subtree-restriction checks: psi(gamma3(Stab(1))) = gamma3 x ... x gamma3,
// [G'^p : psi(Stab(1)')] = p^sym, [Stab(1)', G'] = gamma3(Stab(1)),
// psi of the higher derived subgroups as products, and Stab(2) <= gamma3.
// Runs at level 4 for p = 3 and level 3 otherwise.
std::vector<CheckRecord> verify_branching(QuotientLab& lab);

// Level-3 checks: |Q:Q'| = p^2 elementary abelian, Heisenberg quotient of
// order p^3 and exponent p, |Q:Stab(1)'| = p^(p+1), generator p-th powers
// in Q'.
std::vector<CheckRecord> verify_small_quotients(QuotientLab& lab);

// Iterated local laws L_k (generated mod the previous term by commutators
// and p-th powers) coincide with the derived series for k <= n_max, and
// p-th powers of Q' lie in Q''.
std::vector<CheckRecord> verify_local_laws(QuotientLab& lab, unsigned n_max);

// The image of Q'' in (Q'/gamma3)^p is the flag subspace of codimension
// con(e') + sym(e'') - sym(e); also reports whether the variant with
// con(e) would disagree.
CheckRecord verify_g2_structure(QuotientLab& lab);

// Fills the brute-force columns of an IndexReport from a level-3 quotient
// (plus the level-4 product check for p = 3).
void fill_lattice_brute(QuotientLab& lab, IndexReport& report);

struct SweepOptions {
  unsigned p = 3;
  unsigned level = 3;
  std::set<Check> checks = all_checks();
  unsigned sample = 0; // 0 = exhaustive
  unsigned seed = 1;
  unsigned threads = 0; // 0 = hardware concurrency
};

// Runs the selected checks over all non-constant tuples (or a seeded
// sample), distributing tuples across worker threads. Reports come back
// in tuple order regardless of completion order.
std::vector<VerificationReport> sweep(const SweepOptions& options);
std::vector<VerificationReport> sweep_corpus(
    const std::vector<DefiningTuple>& tuples, const SweepOptions& options);

VerificationReport run_checks(const DefiningTuple& e, unsigned level,
                              const std::set<Check>& checks,
                              unsigned derived_n_max = 0);

} // namespace ggs

#endif
