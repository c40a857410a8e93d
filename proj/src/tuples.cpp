#include "ggs/tuples.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ggs/errors.hpp"

namespace ggs {

DefiningTuple::DefiningTuple(unsigned p, const std::vector<unsigned>& entries)
    : p_(p), e_(p, 0) {
  Fp f(p);
  if (entries.size() != p - 1)
    throw usage_error("defining tuple must have length p-1 = " +
                      std::to_string(p - 1) + ", got " +
                      std::to_string(entries.size()));
  for (unsigned i = 1; i < p; ++i)
    e_[i] = entries[i - 1] % p;
  bool constant = true;
  for (unsigned i = 2; i < p; ++i)
    if (e_[i] != e_[1])
      constant = false;
  if (constant)
    throw usage_error("constant defining tuples are excluded");
}

DifferenceTuple::DifferenceTuple(unsigned p, Kind kind,
                                 const std::vector<unsigned>& padded)
    : p_(p), kind_(kind), e_(padded) {
  if (padded.size() != p)
    throw usage_error("difference tuple storage must have size p");
}

std::vector<unsigned> DifferenceTuple::values() const {
  if (empty())
    return {};
  return std::vector<unsigned>(e_.begin() + lo(), e_.end());
}

DifferenceTuple first_difference(const DefiningTuple& e) {
  Fp f(e.p());
  std::vector<unsigned> d(e.p(), 0);
  for (unsigned i = 2; i < e.p(); ++i)
    d[i] = f.sub(e.at(i - 1), e.at(i));
  return DifferenceTuple(e.p(), DifferenceTuple::Kind::first, d);
}

DifferenceTuple second_difference(const DefiningTuple& e) {
  Fp f(e.p());
  DifferenceTuple ep = first_difference(e);
  std::vector<unsigned> d(e.p(), 0);
  for (unsigned i = 3; i < e.p(); ++i)
    d[i] = f.sub(ep.at(i - 1), ep.at(i));
  return DifferenceTuple(e.p(), DifferenceTuple::Kind::second, d);
}

bool is_symmetric(const DefiningTuple& e) {
  for (unsigned i = 1; i < e.p(); ++i)
    if (e.at(i) != e.at(e.p() - i))
      return false;
  return true;
}

bool is_symmetric(const DifferenceTuple& t) {
  // Index reversal pairs i with p+1-i on a first difference and with
  // p+2-i on a second difference.
  unsigned mirror = t.kind() == DifferenceTuple::Kind::first ? t.p() + 1 : t.p() + 2;
  for (unsigned i = t.lo(); i <= t.hi(); ++i)
    if (t.at(i) != t.at(mirror - i))
      return false;
  return true;
}

bool is_constant(const DifferenceTuple& t) {
  for (unsigned i = t.lo(); i <= t.hi(); ++i)
    if (t.at(i) != t.at(t.lo()))
      return false;
  return true;
}

TupleClass classify(const DefiningTuple& e) {
  TupleClass c{};
  c.sym_e = is_symmetric(e) ? 1 : 0;
  c.con_eprime = is_constant(first_difference(e)) ? 1 : 0;
  c.sym_esecond = is_symmetric(second_difference(e)) ? 1 : 0;
  if (c.sym_e == 1 && c.sym_esecond == 0)
    throw theorem_violation(
        "symmetric tuple with non-symmetric second difference: " +
        format_tuple(e));
  c.class_value = c.con_eprime + c.sym_esecond - c.sym_e;
  return c;
}

FpMatrix symmetry_matrix(unsigned p) {
  Fp f(p);
  std::size_t rows = (p - 1) / 2;
  FpMatrix m(p, rows, p - 1);
  for (unsigned i = 1; i <= rows; ++i) {
    m.set(i - 1, i - 1, 1);
    m.set(i - 1, (p - i) - 1, f.neg(1));
  }
  return m;
}

FpMatrix second_symmetry_matrix(unsigned p) {
  Fp f(p);
  if (p == 3)
    return FpMatrix(p, 0, p - 1);
  // Row for each j in {3, ..., (p+1)/2}: coefficients of
  // e''_j - e''_{p+2-j} as a linear form in e, where
  // e''_i = e_{i-2} - 2 e_{i-1} + e_i.
  std::size_t rows = (p - 3) / 2;
  FpMatrix m(p, rows, p - 1);
  auto bump = [&](FpMatrix& mat, std::size_t r, unsigned idx, long long coeff) {
    mat.set(r, idx - 1, f.add(mat.at(r, idx - 1), f.reduce(coeff)));
  };
  for (unsigned j = 3; j <= (p + 1) / 2; ++j) {
    std::size_t r = j - 3;
    bump(m, r, j - 2, 1);
    bump(m, r, j - 1, -2);
    bump(m, r, j, 1);
    unsigned k = p + 2 - j;
    bump(m, r, k - 2, -1);
    bump(m, r, k - 1, 2);
    bump(m, r, k, -1);
  }
  return m;
}

FpMatrix second_symmetry_matrix_reduced(unsigned p) {
  Fp f(p);
  if (p == 3)
    return FpMatrix(p, 0, p - 1);
  std::size_t rows = (p - 3) / 2;
  FpMatrix m(p, rows, p - 1);
  for (unsigned i = 1; i <= rows; ++i) {
    std::size_t r = i - 1;
    m.set(r, i - 1, 1);
    m.set(r, (p - 1) / 2 - 1, f.reduce(2ll * i));
    m.set(r, (p + 1) / 2 - 1, f.reduce(-2ll * i));
    m.set(r, (p - i) - 1, f.neg(1));
  }
  return m;
}

bool symmetry_via_kernel(const DefiningTuple& e, SymmetryKernel which) {
  FpMatrix m = which == SymmetryKernel::direct ? symmetry_matrix(e.p())
                                               : second_symmetry_matrix(e.p());
  std::vector<unsigned> image = m.apply(e.values());
  return std::all_of(image.begin(), image.end(),
                     [](unsigned v) { return v == 0; });
}

RelationCheck symmetry_linear_relation(const DefiningTuple& e) {
  if (!is_symmetric(second_difference(e)))
    return RelationCheck::not_applicable;
  Fp f(e.p());
  unsigned p = e.p();
  unsigned lhs = f.add(f.mul(2, f.sub(e.at(p - 1), e.at(1))),
                       f.sub(e.at(2), e.at(p - 2)));
  if (lhs != 0)
    throw theorem_violation("linear relation fails on " + format_tuple(e) +
                            " although its second difference is symmetric");
  return RelationCheck::holds;
}

std::optional<IsomorphismWitness> are_isomorphic(const DefiningTuple& e,
                                                 const DefiningTuple& d) {
  if (e.p() != d.p())
    throw usage_error("isomorphism test requires equal primes");
  Fp f(e.p());
  unsigned p = e.p();
  for (unsigned mu = 1; mu < p; ++mu) {
    for (unsigned lambda = 1; lambda < p; ++lambda) {
      bool ok = true;
      for (unsigned i = 1; i < p && ok; ++i)
        ok = e.at(i) == f.mul(mu, d.at(f.mul(lambda, i)));
      if (ok)
        return IsomorphismWitness{lambda, mu};
    }
  }
  return std::nullopt;
}

namespace {

// The tuple with entries mu * e_{lambda * i}; isomorphic to e by
// construction, with witness recovered through are_isomorphic.
DefiningTuple transformed(const DefiningTuple& e, unsigned lambda, unsigned mu) {
  Fp f(e.p());
  std::vector<unsigned> vals(e.p() - 1);
  for (unsigned i = 1; i < e.p(); ++i)
    vals[i - 1] = f.mul(mu, e.at(f.mul(lambda, i)));
  return DefiningTuple(e.p(), vals);
}

} // namespace

NormalForms normal_forms(const DefiningTuple& e) {
  unsigned p = e.p();
  std::optional<DefiningTuple> form_a, form_b;
  for (unsigned mu = 1; mu < p && (!form_a || !form_b); ++mu) {
    for (unsigned lambda = 1; lambda < p && (!form_a || !form_b); ++lambda) {
      DefiningTuple cand = transformed(e, lambda, mu);
      if (!form_a && cand.at(1) == 1)
        form_a = cand;
      if (!form_b) {
        DifferenceTuple d = first_difference(cand);
        for (unsigned i = d.lo(); i <= d.hi(); ++i)
          if (d.at(i) == 1) {
            form_b = cand;
            break;
          }
      }
    }
  }
  if (!form_a || !form_b)
    throw theorem_violation("no normal form found for " + format_tuple(e));
  return NormalForms{*form_a, *are_isomorphic(e, *form_a), *form_b,
                     *are_isomorphic(e, *form_b)};
}

std::string format_tuple(const DefiningTuple& e) {
  std::ostringstream out;
  out << "p=" << e.p() << " e=";
  std::vector<unsigned> vals = e.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i > 0)
      out << ',';
    out << vals[i];
  }
  return out.str();
}

namespace {

unsigned parse_number(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return c >= '0' && c <= '9'; }))
    throw usage_error("expected a number in " + context + ", got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

} // namespace

DefiningTuple parse_tuple_line(const std::string& line) {
  std::string text = line.substr(0, line.find('#'));
  auto ppos = text.find("p=");
  auto epos = text.find("e=");
  if (ppos == std::string::npos || epos == std::string::npos)
    throw usage_error("tuple line needs both p=... and e=...: '" + line + "'");

  std::string pdigits;
  for (std::size_t i = ppos + 2; i < text.size() && std::isdigit(text[i]); ++i)
    pdigits += text[i];
  unsigned p = parse_number(pdigits, "p=");

  std::string evals;
  for (std::size_t i = epos + 2; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r')
      continue;
    evals += c;
  }
  std::vector<unsigned> entries;
  std::string item;
  std::istringstream ein(evals);
  while (std::getline(ein, item, ','))
    entries.push_back(parse_number(item, "e="));
  return DefiningTuple(p, entries);
}

std::vector<DefiningTuple> all_nonconstant_tuples(unsigned p) {
  std::vector<DefiningTuple> out;
  std::vector<unsigned> vals(p - 1, 0);
  while (true) {
    bool constant = std::all_of(vals.begin(), vals.end(),
                                [&](unsigned v) { return v == vals[0]; });
    if (!constant)
      out.emplace_back(p, vals);
    std::size_t i = vals.size();
    while (i > 0 && vals[i - 1] == p - 1)
      vals[--i] = 0;
    if (i == 0)
      break;
    ++vals[i - 1];
  }
  return out;
}

} // namespace ggs
