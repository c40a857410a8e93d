#include "ggs/circulant.hpp"

#include <algorithm>

#include "ggs/errors.hpp"

namespace ggs {

LevelVector::LevelVector(unsigned prime, std::vector<unsigned> c)
    : p(prime), coords(std::move(c)) {
  if (coords.size() != p)
    throw usage_error("level vector must have length p");
  for (auto& v : coords)
    v %= p;
}

FpMatrix circulant_matrix(unsigned p, const std::vector<unsigned>& d) {
  const std::size_t n = d.size();
  FpMatrix m(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.set(r, c, d[(c + n - r) % n]);
  return m;
}

namespace {

bool all_zero(const std::vector<unsigned>& v) {
  return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
}

// One synthetic division step by (X - 1): returns the remainder Q(1) and
// replaces q by the quotient (one coefficient shorter).
unsigned divide_by_x_minus_one(const Fp& f, std::vector<unsigned>& q) {
  unsigned rem = 0;
  for (unsigned c : q)
    rem = f.add(rem, c);
  std::vector<unsigned> quot(q.size() - 1, 0);
  for (std::size_t k = q.size() - 1; k-- > 0;)
    quot[k] = k + 1 == q.size() - 1 ? q[k + 1] : f.add(q[k + 1], quot[k + 1]);
  q = std::move(quot);
  return rem;
}

} // namespace

unsigned koenig_rados_rank(unsigned p, const std::vector<unsigned>& d) {
  Fp f(p);
  if (all_zero(d))
    return 0;
  std::vector<unsigned> q = d;
  for (auto& c : q)
    c %= p;
  unsigned n = static_cast<unsigned>(d.size());
  unsigned multiplicity = 0;
  while (!q.empty() && divide_by_x_minus_one(f, q) == 0)
    ++multiplicity;
  return n - multiplicity;
}

unsigned koenig_rados_rank(const LevelVector& d) {
  return koenig_rados_rank(d.p, d.coords);
}

std::vector<unsigned> remainder_map(const LevelVector& d) {
  Fp f(d.p);
  std::vector<unsigned> q = d.coords;
  std::vector<unsigned> r(d.p, 0);
  for (unsigned i = d.p; i >= 1; --i)
    r[i - 1] = divide_by_x_minus_one(f, q);
  return r;
}

std::vector<unsigned> remainder_map_binomial(const LevelVector& d) {
  Fp f(d.p);
  std::vector<unsigned> r(d.p, 0);
  for (unsigned i = 1; i <= d.p; ++i) {
    unsigned acc = 0;
    for (unsigned j = 0; j < d.p; ++j)
      acc = f.add(acc, f.mul(binomial_mod(j, d.p - i, d.p), d.coords[j]));
    r[i - 1] = acc;
  }
  return r;
}

CirculantProfile circulant_profile(const LevelVector& d) {
  std::vector<unsigned> r = remainder_map(d);
  unsigned dim = 0;
  for (unsigned i = d.p; i >= 1; --i)
    if (r[i - 1] != 0) {
      dim = i;
      break;
    }
  return CirculantProfile{d, std::move(r), dim};
}

unsigned circulant_dim(const LevelVector& d) { return circulant_profile(d).dim; }

unsigned circulant_dim_of_set(const std::vector<LevelVector>& ds) {
  unsigned dim = 0;
  for (const auto& d : ds)
    dim = std::max(dim, circulant_dim(d));
  return dim;
}

bool flag_member(const LevelVector& d, unsigned i) {
  if (i > d.p)
    throw usage_error("flag index exceeds p");
  return circulant_dim(d) <= i;
}

LevelVector cyclic_shift(const LevelVector& d) {
  std::vector<unsigned> c(d.p);
  for (unsigned x = 0; x < d.p; ++x)
    c[x] = d.coords[(x + d.p - 1) % d.p];
  return LevelVector(d.p, c);
}

LevelVector local_action_b(const DefiningTuple& e) {
  std::vector<unsigned> c(e.p(), 0);
  for (unsigned i = 1; i < e.p(); ++i)
    c[i] = e.at(i);
  return LevelVector(e.p(), c);
}

LevelVector local_action_c(const DefiningTuple& e) {
  Fp f(e.p());
  DifferenceTuple ep = first_difference(e);
  std::vector<unsigned> c(e.p(), 0);
  c[0] = e.at(e.p() - 1);
  c[1] = f.neg(e.at(1));
  for (unsigned x = 2; x < e.p(); ++x)
    c[x] = ep.at(x);
  return LevelVector(e.p(), c);
}

unsigned stabilizer_rank(const DefiningTuple& e) {
  unsigned t = koenig_rados_rank(local_action_b(e));
  if (t < 2 || t > e.p())
    throw theorem_violation("stabilizer rank " + std::to_string(t) +
                            " out of range for " + format_tuple(e));
  return t;
}

LevelVector commutator_action_vector(const DefiningTuple& e, unsigned i) {
  unsigned p = e.p();
  if (i < 1 || i > (p - 1) / 2)
    throw usage_error("commutator index must lie in {1, ..., (p-1)/2}");
  Fp f(p);
  DifferenceTuple ep = first_difference(e);
  std::vector<unsigned> c(p, 0);
  if (i == 1) {
    c[0] = f.neg(ep.at(p - 1));
    c[1] = f.sub(e.at(p - 1), e.at(1));
    c[2] = f.neg(ep.at(2));
    return LevelVector(p, c);
  }
  c[0] = f.neg(ep.at(p - i));
  c[1] = ep.at(p - i + 1);
  c[i] = ep.at(i);
  c[i + 1] = f.neg(ep.at(i + 1));
  return LevelVector(p, c);
}

unsigned second_derived_codim(const DefiningTuple& e) {
  std::vector<LevelVector> ds;
  for (unsigned i = 1; i <= (e.p() - 1) / 2; ++i)
    ds.push_back(commutator_action_vector(e, i));
  return e.p() - circulant_dim_of_set(ds);
}

} // namespace ggs
