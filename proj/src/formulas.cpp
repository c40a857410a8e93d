#include "ggs/formulas.hpp"

#include "ggs/errors.hpp"

namespace ggs {

unsigned long long power_ull(unsigned p, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < k; ++i)
    r *= p;
  return r;
}

unsigned long long geometric_sum(unsigned p, unsigned k) {
  unsigned long long r = 0, term = 1;
  for (unsigned i = 0; i < k; ++i) {
    r += term;
    term *= p;
  }
  return r;
}

unsigned long long derived_index_log(const DefiningTuple& e, unsigned n) {
  if (n < 1)
    throw usage_error("derived index needs n >= 1");
  if (n == 1)
    return 2;
  TupleClass c = classify(e);
  unsigned p = e.p();
  return power_ull(p, n - 2) * (p + c.con_eprime + c.sym_esecond) -
         geometric_sum(p, n - 1) * c.sym_e + 1;
}

unsigned long long second_derived_index_log(const DefiningTuple& e) {
  TupleClass c = classify(e);
  return e.p() + 1 + c.con_eprime + c.sym_esecond - c.sym_e;
}

unsigned long long stabilizer_index_log(const DefiningTuple& e, unsigned n) {
  if (n < 1)
    throw usage_error("stabilizer index needs n >= 1");
  if (n == 1)
    return 1;
  unsigned p = e.p();
  unsigned t = stabilizer_rank(e);
  unsigned sym = classify(e).sym_e;
  return static_cast<unsigned long long>(t) * power_ull(p, n - 2) -
         geometric_sum(p, n - 2) * sym + 1;
}

unsigned long long stabilizer_index_log_displayed(const DefiningTuple& e,
                                                  unsigned n) {
  if (n == 1)
    return 1;
  unsigned p = e.p();
  unsigned t = stabilizer_rank(e);
  unsigned sym = classify(e).sym_e;
  return static_cast<unsigned long long>(t) * power_ull(p, n - 2) +
         geometric_sum(p, n - 2) * sym + 1;
}

LatticeEdge* IndexReport::find_edge(const std::string& name) {
  for (auto& e : edges)
    if (e.name == name)
      return &e;
  return nullptr;
}

IndexReport lattice_report(const DefiningTuple& e, unsigned max_n) {
  TupleClass c = classify(e);
  unsigned p = e.p();
  unsigned t = stabilizer_rank(e);

  IndexReport r{e, t, c, {}, {}, {}};
  for (unsigned n = 1; n <= max_n; ++n) {
    r.derived_logs.emplace_back(n, derived_index_log(e, n));
    r.stabilizer_logs.emplace_back(n, stabilizer_index_log(e, n));
  }

  auto edge = [&](const std::string& name, unsigned long long value,
                  bool formula_only) {
    r.edges.push_back(LatticeEdge{name, value, formula_only, std::nullopt,
                                  std::nullopt});
  };
  edge("G:Stab1", 1, false);
  edge("Stab1:G'", 1, false);
  edge("G':gamma3", 1, false);
  edge("gamma3:Stab2", t - 2, false);
  edge("Stab2:Stab1'", p - t, false);
  edge("Stab1':G''", c.class_value, false);
  edge("G'':gamma3(Stab1)", p - c.con_eprime - c.sym_esecond, false);
  edge("gamma3(Stab1):Stab3", static_cast<unsigned long long>(p) * (t - 2),
       false);
  // psi cross edges; the Stab2 edge is reconstructable from its neighbours
  // and carries no independent brute-force value.
  edge("psi(Stab1):G^p", p - t, true);
  edge("psi(Stab2):Stab1^p", t + c.sym_e, true);
  edge("psi(Stab1'):G'^p", c.sym_e, false);
  edge("psi(gamma3(Stab1)):gamma3^p", 0, false);
  edge("psi(Stab3):Stab2^p", 0, false);
  return r;
}

} // namespace ggs
