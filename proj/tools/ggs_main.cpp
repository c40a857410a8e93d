// Command-line front end: invariants of GGS defining tuples, closed-form
// index evaluation, isomorphism testing, word portraits, and the
// brute-force verification suites over congruence quotients.
//
// Exit codes: 0 success / all checks pass, 1 verification mismatch,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggs/bignat.hpp"
#include "ggs/circulant.hpp"
#include "ggs/errors.hpp"
#include "ggs/formulas.hpp"
#include "ggs/report_json.hpp"
#include "ggs/treeauto.hpp"
#include "ggs/tuples.hpp"
#include "ggs/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0";

std::vector<unsigned> parse_entries(const std::string& text) {
  std::vector<unsigned> entries;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ggs::usage_error("bad tuple entry '" + item + "'");
    entries.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return entries;
}

ggs::DefiningTuple tuple_from(unsigned p, const std::string& entries) {
  return ggs::DefiningTuple(p, parse_entries(entries));
}

json envelope(const std::string& command, json input, json results,
              const std::string& verdict) {
  return json{{"version", kVersion},
              {"command", command},
              {"input", std::move(input)},
              {"results", std::move(results)},
              {"verdict", verdict}};
}

json tuple_input(const ggs::DefiningTuple& e) {
  return json{{"p", e.p()}, {"e", e.values()}};
}

// "p^k (=decimal)" when the power fits 64 bits, plain "p^k" otherwise.
std::string power_string(unsigned p, unsigned long long log) {
  std::string s = std::to_string(p) + "^" + std::to_string(log);
  ggs::BigNat value = ggs::BigNat::power(p, static_cast<unsigned>(log));
  if (auto fits = value.to_u64())
    s += " (=" + std::to_string(*fits) + ")";
  return s;
}

std::string coords_string(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

int cmd_invariants(const ggs::DefiningTuple& e, bool as_json) {
  using namespace ggs;
  TupleClass bits = classify(e);
  DifferenceTuple ep = first_difference(e);
  DifferenceTuple epp = second_difference(e);
  unsigned t = stabilizer_rank(e);
  unsigned codim = second_derived_codim(e);
  LevelVector tb = local_action_b(e), tc = local_action_c(e);

  json vectors = json::array();
  for (unsigned i = 1; i <= (e.p() - 1) / 2; ++i) {
    LevelVector d = commutator_action_vector(e, i);
    vectors.push_back(json{{"i", i},
                           {"coords", d.coords},
                           {"circulant_dim", circulant_dim(d)}});
  }
  if (as_json) {
    json results{{"e_prime", ep.values()},
                 {"e_second", epp.values()},
                 {"sym_e", bits.sym_e},
                 {"con_e_prime", bits.con_eprime},
                 {"sym_e_second", bits.sym_esecond},
                 {"class_value", bits.class_value},
                 {"t", t},
                 {"second_derived_codim", codim},
                 {"theta_b", tb.coords},
                 {"theta_c", tc.coords},
                 {"commutator_vectors", std::move(vectors)}};
    std::cout << envelope("invariants", tuple_input(e), std::move(results), "ok")
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << format_tuple(e) << "\n";
  std::cout << "e'  = " << coords_string(ep.values()) << "\n";
  std::cout << "e'' = " << coords_string(epp.values()) << "\n";
  std::cout << "sym(e) = " << bits.sym_e << "  con(e') = " << bits.con_eprime
            << "  sym(e'') = " << bits.sym_esecond
            << "  class = " << bits.class_value << "\n";
  std::cout << "t = " << t << "  second-derived codim = " << codim << "\n";
  std::cout << "theta(b) = " << coords_string(tb.coords)
            << "  theta(c) = " << coords_string(tc.coords) << "\n";
  for (const auto& v : vectors)
    std::cout << "d_" << v["i"] << " = "
              << coords_string(v["coords"].get<std::vector<unsigned>>())
              << "  dim Circ = " << v["circulant_dim"] << "\n";
  return 0;
}

int cmd_index(const ggs::DefiningTuple& e, const std::string& series,
              unsigned n, bool as_json) {
  unsigned long long log;
  if (series == "derived")
    log = ggs::derived_index_log(e, n);
  else if (series == "stabilizer")
    log = ggs::stabilizer_index_log(e, n);
  else
    throw ggs::usage_error("series must be 'derived' or 'stabilizer'");
  if (as_json) {
    json results{{"series", series},
                 {"n", n},
                 {"log", log},
                 {"index",
                  ggs::BigNat::power(e.p(), static_cast<unsigned>(log)).to_string()}};
    std::cout << envelope("index", tuple_input(e), std::move(results), "ok")
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "log_" << e.p() << " |G:" << series << "(" << n
            << ")| = " << log << "   index " << power_string(e.p(), log)
            << "\n";
  return 0;
}

int cmd_isomorphic(const ggs::DefiningTuple& e, const ggs::DefiningTuple& d,
                   bool as_json) {
  auto witness = ggs::are_isomorphic(e, d);
  if (as_json) {
    json results;
    if (witness)
      results = json{{"isomorphic", true},
                     {"lambda", witness->lambda},
                     {"mu", witness->mu}};
    else
      results = json{{"isomorphic", false}};
    json input = tuple_input(e);
    input["d"] = d.values();
    std::cout << envelope("isomorphic", std::move(input), std::move(results),
                          "ok")
                     .dump(2)
              << "\n";
    return 0;
  }
  if (witness)
    std::cout << "isomorphic: lambda=" << witness->lambda
              << " mu=" << witness->mu << "\n";
  else
    std::cout << "not isomorphic\n";
  return 0;
}

json portrait_node(const ggs::TreeWord& w, unsigned depth) {
  json node{{"word", w.str()}, {"root_action", ggs::root_action(w)}};
  if (depth > 0) {
    json children = json::array();
    for (unsigned x = 0; x < w.p(); ++x)
      children.push_back(portrait_node(ggs::section(w, x), depth - 1));
    node["children"] = std::move(children);
  }
  return node;
}

void print_portrait(const ggs::TreeWord& w, unsigned depth,
                    const std::string& vertex, unsigned indent) {
  std::cout << std::string(indent, ' ')
            << (vertex.empty() ? std::string("root") : vertex) << ": "
            << w.str() << "   (root action " << ggs::root_action(w) << ")\n";
  if (depth == 0)
    return;
  for (unsigned x = 0; x < w.p(); ++x)
    print_portrait(ggs::section(w, x), depth - 1,
                   vertex + std::to_string(x), indent + 2);
}

int cmd_portrait(const ggs::DefiningTuple& e, const std::string& word,
                 const std::string& vertex, unsigned depth, bool as_json) {
  if (depth > 6)
    throw ggs::usage_error("portrait depth is capped at 6");
  auto tuple = std::make_shared<const ggs::DefiningTuple>(e);
  ggs::TreeWord w = ggs::TreeWord::parse(tuple, word);
  if (!vertex.empty())
    w = ggs::section(w, ggs::parse_vertex(e.p(), vertex));
  if (as_json) {
    json input = tuple_input(e);
    input["word"] = word;
    if (!vertex.empty())
      input["vertex"] = vertex;
    std::cout << envelope("portrait", std::move(input),
                          portrait_node(w, depth), "ok")
                     .dump(2)
              << "\n";
    return 0;
  }
  print_portrait(w, depth, "", 0);
  return 0;
}

void print_records(const std::vector<ggs::CheckRecord>& records) {
  for (const auto& r : records) {
    std::string tag = r.verdict == "pass"    ? "PASS"
                      : r.verdict == "fail"  ? "FAIL"
                                             : "SKIP";
    std::cout << tag << " " << r.name << ": predicted " << r.predicted
              << ", computed " << r.computed << "  [" << r.statement << "] ("
              << static_cast<long>(r.millis) << " ms)\n";
  }
}

int cmd_verify(const ggs::DefiningTuple& e, unsigned level,
               const std::set<ggs::Check>& checks, unsigned derived_n,
               bool lattice, bool as_json) {
  ggs::VerificationReport report =
      ggs::run_checks(e, level, checks, derived_n);
  bool pass = report.all_pass();

  ggs::IndexReport index = ggs::lattice_report(e);
  if (lattice) {
    ggs::QuotientLab lab(e);
    ggs::fill_lattice_brute(lab, index);
    for (const auto& edge : index.edges)
      if (edge.match && !*edge.match)
        pass = false;
  }

  if (as_json) {
    json input = tuple_input(e);
    input["level"] = level;
    json out = envelope("verify", std::move(input),
                        ggs::to_json(report)["records"],
                        pass ? "pass" : "fail");
    if (lattice)
      out["lattice"] = ggs::to_json(index);
    std::cout << out.dump(2) << "\n";
  } else {
    print_records(report.records);
    if (lattice)
      for (const auto& edge : index.edges) {
        const char* tag = !edge.brute_log ? "----"
                          : *edge.match   ? "PASS"
                                          : "FAIL";
        std::cout << tag << " lattice " << edge.name << ": predicted "
                  << edge.predicted_log;
        if (edge.brute_log)
          std::cout << ", brute " << *edge.brute_log;
        else
          std::cout << (edge.formula_only ? " (formula only)"
                                          : " (not brute-forced here)");
        std::cout << "\n";
      }
    std::cout << (pass ? "all checks pass" : "CHECKS FAILED") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_sweep(unsigned p, unsigned level, const std::set<ggs::Check>& checks,
              unsigned sample, unsigned seed, unsigned threads,
              const std::string& corpus, bool as_json) {
  std::vector<ggs::VerificationReport> reports;
  ggs::SweepOptions options;
  options.p = p;
  options.level = level;
  options.checks = checks;
  options.sample = sample;
  options.seed = seed;
  options.threads = threads;
  if (!corpus.empty()) {
    std::ifstream in(corpus);
    if (!in)
      throw ggs::usage_error("cannot open corpus file '" + corpus + "'");
    std::vector<ggs::DefiningTuple> tuples;
    std::string line;
    while (std::getline(in, line)) {
      std::string trimmed = line.substr(0, line.find('#'));
      if (trimmed.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      tuples.push_back(ggs::parse_tuple_line(line));
    }
    reports = ggs::sweep_corpus(tuples, options);
  } else {
    reports = ggs::sweep(options);
  }

  std::size_t passed = 0;
  for (const auto& r : reports)
    passed += r.all_pass() ? 1 : 0;
  bool pass = passed == reports.size();

  if (as_json) {
    json results = json::array();
    for (const auto& r : reports)
      results.push_back(ggs::to_json(r));
    json input{{"p", p}, {"level", level}, {"seed", seed}};
    if (sample)
      input["sample"] = sample;
    if (!corpus.empty())
      input["corpus"] = corpus;
    json out = envelope("sweep", std::move(input), std::move(results),
                        pass ? "pass" : "fail");
    out["summary"] = json{{"total", reports.size()}, {"passed", passed}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      if (!r.all_pass()) {
        std::cout << "FAIL " << ggs::format_tuple(r.tuple) << "\n";
        print_records(r.records);
      }
    std::cout << passed << "/" << reports.size() << " tuples pass\n";
  }
  return pass ? 0 : 1;
}

std::set<ggs::Check> parse_checks(const std::string& list) {
  if (list.empty())
    return ggs::all_checks();
  std::set<ggs::Check> checks;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    if (!item.empty())
      checks.insert(ggs::parse_check(item));
  if (checks.empty())
    throw ggs::usage_error("no checks selected");
  return checks;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and brute-force verification for GGS-groups on "
               "p-regular rooted trees"};
  app.require_subcommand(1);

  unsigned p = 3, n = 1, level = 3, depth = 1, seed = 1, sample = 0,
           threads = 0, derived_n = 0;
  std::string e_text, d_text, series = "derived", word, vertex, checks_text,
              corpus;
  bool as_json = false, lattice = false;

  auto add_tuple_opts = [&](CLI::App* cmd, bool with_d = false) {
    cmd->add_option("--p", p, "odd prime")->required();
    cmd->add_option("--e", e_text, "defining tuple, comma separated")
        ->required();
    if (with_d)
      cmd->add_option("--d", d_text, "second tuple, comma separated")
          ->required();
    cmd->add_flag("--json", as_json, "emit JSON");
  };

  CLI::App* invariants =
      app.add_subcommand("invariants", "tuple invariants and vectors");
  add_tuple_opts(invariants);

  CLI::App* index =
      app.add_subcommand("index", "closed-form index of a series term");
  add_tuple_opts(index);
  index->add_option("--series", series, "derived or stabilizer");
  index->add_option("--n", n, "series depth (n >= 1)")->required();

  CLI::App* isomorphic =
      app.add_subcommand("isomorphic", "isomorphism test for two tuples");
  add_tuple_opts(isomorphic, true);

  CLI::App* portrait =
      app.add_subcommand("portrait", "sections of a word in a and b");
  add_tuple_opts(portrait);
  portrait->add_option("--word", word, "word, e.g. \"b a^2 b^-1 a\"")
      ->required();
  portrait->add_option("--vertex", vertex, "start vertex digits, e.g. 021");
  portrait->add_option("--depth", depth, "section tree depth (<= 6)");

  CLI::App* verify =
      app.add_subcommand("verify", "brute-force checks for one tuple");
  add_tuple_opts(verify);
  verify->add_option("--level", level, "congruence quotient level")->required();
  verify->add_option("--n", derived_n, "derived depth (default level-1)");
  verify->add_option("--checks", checks_text,
                     "comma list: derived,stabilizers,branching,"
                     "small_quotients,local_laws,g2_structure");
  verify->add_flag("--lattice", lattice,
                   "also brute-force the subgroup-lattice edge indices");

  CLI::App* sweep = app.add_subcommand("sweep", "checks over many tuples");
  sweep->add_option("--p", p, "odd prime")->required();
  sweep->add_option("--level", level, "congruence quotient level")->required();
  sweep->add_option("--checks", checks_text, "comma list of checks");
  sweep->add_option("--sample", sample, "random sample size (0 = exhaustive)");
  sweep->add_option("--seed", seed, "sampling seed");
  sweep->add_option("--threads", threads, "worker threads (0 = auto)");
  sweep->add_option("--corpus", corpus, "tuple corpus file, one per line");
  sweep->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (app.got_subcommand(invariants))
      return cmd_invariants(tuple_from(p, e_text), as_json);
    if (app.got_subcommand(index))
      return cmd_index(tuple_from(p, e_text), series, n, as_json);
    if (app.got_subcommand(isomorphic))
      return cmd_isomorphic(tuple_from(p, e_text), tuple_from(p, d_text),
                            as_json);
    if (app.got_subcommand(portrait))
      return cmd_portrait(tuple_from(p, e_text), word, vertex, depth, as_json);
    if (app.got_subcommand(verify))
      return cmd_verify(tuple_from(p, e_text), level,
                        parse_checks(checks_text), derived_n, lattice,
                        as_json);
    if (app.got_subcommand(sweep))
      return cmd_sweep(p, level, parse_checks(checks_text), sample, seed,
                       threads, corpus, as_json);
  } catch (const ggs::usage_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
