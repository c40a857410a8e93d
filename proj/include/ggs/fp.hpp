#ifndef GGS_FP_HPP
#define GGS_FP_HPP

#include <cstddef>
#include <vector>

namespace ggs {

bool is_odd_prime(unsigned p);

// Arithmetic context for the prime field F_p. Scalars are canonical
// residues in {0, ..., p-1}; all arithmetic is exact.
class Fp {
public:
  explicit Fp(unsigned p); // throws usage_error unless p is an odd prime

  unsigned p() const { return p_; }

  // Canonical residue of an arbitrary integer.
  unsigned reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<unsigned>(r < 0 ? r + p_ : r);
  }

  unsigned add(unsigned a, unsigned b) const { return (a + b) % p_; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p_ - b) % p_; }
  unsigned neg(unsigned a) const { return a == 0 ? 0 : p_ - a; }
  unsigned mul(unsigned a, unsigned b) const {
    return static_cast<unsigned>((static_cast<unsigned long long>(a) * b) % p_);
  }
  unsigned pow(unsigned a, unsigned long long k) const;
  unsigned inv(unsigned a) const; // a != 0

private:
  unsigned p_;
};

// Dense matrix over F_p. Sizes in this project never exceed a few times p,
// so no sparsity machinery.
class FpMatrix {
public:
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols); // zero matrix
  static FpMatrix identity(unsigned p, std::size_t n);
  static FpMatrix from_rows(unsigned p,
                            const std::vector<std::vector<unsigned>>& rows);

  unsigned p() const { return field_.p(); }
  const Fp& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  unsigned at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, unsigned v) { data_[r * cols_ + c] = v % p(); }

  // Matrix times column vector.
  std::vector<unsigned> apply(const std::vector<unsigned>& v) const;

  bool operator==(const FpMatrix& other) const;

private:
  Fp field_;
  std::size_t rows_, cols_;
  std::vector<unsigned> data_;
};

// Reduced row echelon form (Gauss-Jordan); preserves the row space.
FpMatrix row_reduce(const FpMatrix& m);

// Number of nonzero rows after row reduction.
std::size_t rank(const FpMatrix& m);

// Basis of the right kernel {v : m v = 0}; size = cols - rank.
std::vector<std::vector<unsigned>> kernel_basis(const FpMatrix& m);

// True if v lies in the span of the given vectors (all mod p).
bool in_span(unsigned p, const std::vector<std::vector<unsigned>>& basis,
             const std::vector<unsigned>& v);

// C(n, k) mod p via Lucas reduction; 0 for k > n.
unsigned binomial_mod(unsigned long long n, unsigned long long k, unsigned p);

} // namespace ggs

#endif
