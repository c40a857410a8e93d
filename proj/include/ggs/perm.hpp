#ifndef GGS_PERM_HPP
#define GGS_PERM_HPP

#include <cstddef>
#include <vector>

namespace ggs {

// Permutation of {0, ..., degree-1}. Products compose left to right:
// (g * h) maps x to h(g(x)), matching the right action x^g on tree
// vertices.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(unsigned degree); // identity
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }
  // Cycle (start start+1 ... start+len-1) embedded in the identity.
  static Permutation cycle(unsigned degree, const std::vector<unsigned>& points);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned x) const { return images_[x]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& other) const; // apply *this first
  Permutation inverse() const;
  Permutation conjugate(const Permutation& by) const; // by^-1 * *this * by

  bool operator==(const Permutation& other) const {
    return images_ == other.images_;
  }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

private:
  std::vector<unsigned> images_;
};

Permutation commutator(const Permutation& g, const Permutation& h);

} // namespace ggs

#endif
