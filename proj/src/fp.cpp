#include "ggs/fp.hpp"

#include <string>

#include "ggs/errors.hpp"

namespace ggs {

bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0)
    return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

Fp::Fp(unsigned p) : p_(p) {
  if (!is_odd_prime(p))
    throw usage_error("modulus " + std::to_string(p) + " is not an odd prime");
}

unsigned Fp::pow(unsigned a, unsigned long long k) const {
  unsigned r = 1 % p_;
  unsigned base = a % p_;
  while (k > 0) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

unsigned Fp::inv(unsigned a) const {
  if (a % p_ == 0)
    throw usage_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p,
                             const std::vector<std::vector<unsigned>>& rows) {
  if (rows.empty())
    return FpMatrix(p, 0, 0);
  FpMatrix m(p, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw usage_error("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

std::vector<unsigned> FpMatrix::apply(const std::vector<unsigned>& v) const {
  if (v.size() != cols_)
    throw usage_error("matrix-vector size mismatch");
  std::vector<unsigned> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = field_.add(acc, field_.mul(at(r, c), v[c] % p()));
    out[r] = acc;
  }
  return out;
}

bool FpMatrix::operator==(const FpMatrix& other) const {
  return p() == other.p() && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

FpMatrix row_reduce(const FpMatrix& m) {
  FpMatrix r = m;
  const Fp& f = r.field();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < r.rows() && r.at(pivot, col) == 0)
      ++pivot;
    if (pivot == r.rows())
      continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < r.cols(); ++c) {
        unsigned t = r.at(lead, c);
        r.set(lead, c, r.at(pivot, c));
        r.set(pivot, c, t);
      }
    unsigned scale = f.inv(r.at(lead, col));
    for (std::size_t c = 0; c < r.cols(); ++c)
      r.set(lead, c, f.mul(scale, r.at(lead, c)));
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == lead || r.at(row, col) == 0)
        continue;
      unsigned factor = r.at(row, col);
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.set(row, c, f.sub(r.at(row, c), f.mul(factor, r.at(lead, c))));
    }
    ++lead;
  }
  return r;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix r = row_reduce(m);
  std::size_t n = 0;
  for (std::size_t row = 0; row < r.rows(); ++row) {
    bool nonzero = false;
    for (std::size_t c = 0; c < r.cols(); ++c)
      if (r.at(row, c) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero)
      ++n;
  }
  return n;
}

std::vector<std::vector<unsigned>> kernel_basis(const FpMatrix& m) {
  FpMatrix r = row_reduce(m);
  const Fp& f = r.field();
  const std::size_t cols = r.cols();

  // pivot_of[c] = row with leading 1 in column c, or -1 if c is free.
  std::vector<long> pivot_of(cols, -1);
  for (std::size_t row = 0; row < r.rows(); ++row) {
    for (std::size_t c = 0; c < cols; ++c)
      if (r.at(row, c) != 0) {
        pivot_of[c] = static_cast<long>(row);
        break;
      }
  }

  std::vector<std::vector<unsigned>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of[free] != -1)
      continue;
    std::vector<unsigned> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of[c] != -1)
        v[c] = f.neg(r.at(static_cast<std::size_t>(pivot_of[c]), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(unsigned p, const std::vector<std::vector<unsigned>>& basis,
             const std::vector<unsigned>& v) {
  std::vector<std::vector<unsigned>> rows = basis;
  std::size_t base_rank = basis.empty() ? 0 : rank(FpMatrix::from_rows(p, basis));
  rows.push_back(v);
  return rank(FpMatrix::from_rows(p, rows)) == base_rank;
}

unsigned binomial_mod(unsigned long long n, unsigned long long k, unsigned p) {
  Fp f(p);
  if (k > n)
    return 0;
  // Lucas: reduce digit by digit base p, small cases by Pascal walk.
  unsigned result = 1;
  while (n > 0 || k > 0) {
    unsigned nd = static_cast<unsigned>(n % p);
    unsigned kd = static_cast<unsigned>(k % p);
    if (kd > nd)
      return 0;
    unsigned c = 1;
    for (unsigned i = 0; i < kd; ++i)
      c = f.mul(f.mul(c, nd - i), f.inv(i + 1));
    result = f.mul(result, c);
    n /= p;
    k /= p;
  }
  return result;
}

} // namespace ggs
