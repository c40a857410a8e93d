#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "ggs/errors.hpp"
#include "ggs/treeauto.hpp"

using namespace ggs;

namespace {

std::shared_ptr<const DefiningTuple> tup(unsigned p, std::vector<unsigned> v) {
  return std::make_shared<DefiningTuple>(p, v);
}

TreeWord random_word(std::shared_ptr<const DefiningTuple> t, std::mt19937& rng,
                     std::size_t max_len) {
  std::uniform_int_distribution<unsigned> exp_dist(1, t->p() - 1);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  TreeWord w = TreeWord::identity(t);
  char gen = coin(rng) ? 'a' : 'b';
  std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) {
    w = w * TreeWord::parse(t, std::string(1, gen) + "^" +
                                   std::to_string(exp_dist(rng)));
    gen = gen == 'a' ? 'b' : 'a';
  }
  return w;
}

// Image of a vertex under the right action of a word.
Vertex vertex_image(const TreeWord& w, const Vertex& v) {
  Vertex out;
  TreeWord cur = w;
  for (unsigned digit : v.digits) {
    unsigned moved = (digit + root_action(cur)) % cur.p();
    out.digits.push_back(moved);
    cur = section(cur, digit);
  }
  return out;
}

Vertex random_vertex(unsigned p, std::mt19937& rng, std::size_t depth) {
  std::uniform_int_distribution<unsigned> digit(0, p - 1);
  Vertex v;
  for (std::size_t i = 0; i < depth; ++i)
    v.digits.push_back(digit(rng));
  return v;
}

} // namespace

TEST_CASE("word parsing and printing") {
  auto t = tup(3, {1, 2});
  CHECK(TreeWord::parse(t, "b a^2 b^-1 a").str() == "b a^2 b^2 a");
  CHECK(TreeWord::parse(t, "a a^2").trivial_word()); // exponents merge to 0
  CHECK(TreeWord::parse(t, "").trivial_word());
  CHECK_THROWS_AS(TreeWord::parse(t, "c"), usage_error);
  CHECK_THROWS_AS(TreeWord::parse(t, "a^x"), usage_error);
  CHECK_THROWS_AS(TreeWord::parse(t, "a^"), usage_error);
  CHECK(parse_vertex(3, "021").digits == std::vector<unsigned>{0, 2, 1});
  CHECK_THROWS_AS(parse_vertex(3, "03"), usage_error);
}

TEST_CASE("root actions") {
  auto t = tup(5, {1, 0, 0, 1});
  CHECK(root_action(TreeWord::generator_a(t)) == 1);
  CHECK(root_action(TreeWord::generator_b(t)) == 0);
  CHECK(root_action(TreeWord::parse(t, "b a^2 b^-1 a")) == 3);
}

TEST_CASE("sections of the directed generator") {
  auto t = tup(5, {1, 0, 4, 3});
  TreeWord b = TreeWord::generator_b(t);
  CHECK(section(b, 0).str() == "b");
  CHECK(section(b, 1).str() == "a");
  CHECK(section(b, 2).trivial_word()); // e_2 = 0
  CHECK(section(b, 3).str() == "a^4");
  CHECK(section(b, 4).str() == "a^3");

  TreeWord a = TreeWord::generator_a(t);
  for (unsigned x = 0; x < 5; ++x)
    CHECK(section(a, x).trivial_word());
}

TEST_CASE("sections of the commutator") {
  auto t = tup(3, {1, 2});
  TreeWord c = TreeWord::commutator_c(t);
  CHECK(section(c, 0).str() == "b^2 a^2"); // b^-1 a^(e_2)
  CHECK(section(c, 1).str() == "a^2 b");   // a^(-e_1) b
  CHECK(section(c, 2).str() == "a^2");     // a^(e_1 - e_2)
}

TEST_CASE("first level sections require a stabilizing word") {
  auto t = tup(3, {1, 2});
  auto secs = first_level_sections(TreeWord::generator_b(t));
  REQUIRE(secs.size() == 3);
  CHECK(secs[0].str() == "b");
  CHECK(secs[1].str() == "a");
  CHECK(secs[2].str() == "a^2");
  auto id_secs = first_level_sections(TreeWord::identity(t));
  for (const auto& s : id_secs)
    CHECK(s.trivial_word());
  CHECK_THROWS_WITH_AS(first_level_sections(TreeWord::generator_a(t)),
                       doctest::Contains("root action 1"), usage_error);
}

TEST_CASE("conjugation by powers of the rooted generator shifts sections") {
  auto t = tup(3, {1, 2});
  TreeWord c = TreeWord::commutator_c(t);
  TreeWord c1 = commutator_c_conjugate(t, 1);
  CHECK(equal(section(c1, 1), section(c, 0)));
  CHECK(equal(conjugate_by_a_power(c, 0), c));
  TreeWord c2 = commutator_c_conjugate(t, 2);
  for (unsigned j = 0; j < 3; ++j)
    CHECK(equal(section(c2, j), section(c, (j + 3 - 2) % 3)));
}

TEST_CASE("b-exponent sums") {
  auto t = tup(3, {1, 2});
  CHECK(b_exponent(TreeWord::generator_b(t)) == 1);
  CHECK(b_exponent(TreeWord::generator_a(t)) == 0);
  CHECK(b_exponent(TreeWord::commutator_c(t)) == 0);
}

TEST_CASE("b-exponent is a homomorphism vanishing on commutators and powers") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u}) {
    auto t = tup(p, p == 3 ? std::vector<unsigned>{1, 2}
                           : std::vector<unsigned>{1, 1, 0, 0});
    for (int trial = 0; trial < 500; ++trial) {
      TreeWord w1 = random_word(t, rng, 12);
      TreeWord w2 = random_word(t, rng, 12);
      CHECK(b_exponent(w1 * w2) == (b_exponent(w1) + b_exponent(w2)) % p);
      TreeWord comm = w1.inverse() * w2.inverse() * w1 * w2;
      CHECK(b_exponent(comm) == 0);
      CHECK(b_exponent(w1.pow(p)) == 0);
    }
  }
}

TEST_CASE("contraction results") {
  auto t = tup(3, {1, 2});
  auto r = contract(TreeWord::parse(t, "a^2"));
  CHECK(r.contracted);
  CHECK(r.level == 0);
  REQUIRE(r.element.has_value());
  CHECK(r.element->kind == NucleusElement::Kind::power_of_a);
  CHECK(r.element->exponent == 2);

  // a conjugate of b sections into single letters after one level
  auto conj = contract(TreeWord::parse(t, "a^-1 b a"));
  CHECK(conj.contracted);
  CHECK(conj.level == 1);

  // a conjugate of a needs one more level: its section at 0 is b a^2
  auto conj_a = contract(TreeWord::parse(t, "b a b^-1"));
  CHECK(conj_a.contracted);
  CHECK(conj_a.level == 2);

  auto c = contract(TreeWord::commutator_c(t));
  CHECK(c.contracted);
  CHECK(c.level == 2);
}

TEST_CASE("random words contract within the default budget") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u}) {
    auto t = tup(p, p == 3 ? std::vector<unsigned>{1, 2}
                           : std::vector<unsigned>{1, 0, 0, 1});
    for (int trial = 0; trial < 200; ++trial) {
      TreeWord w = random_word(t, rng, 12);
      CHECK(contract(w, 12).contracted);
    }
  }
}

TEST_CASE("equality decision") {
  auto t = tup(3, {1, 2});
  TreeWord a = TreeWord::generator_a(t);
  TreeWord b = TreeWord::generator_b(t);
  CHECK(equal(a * a.inverse(), TreeWord::identity(t)));
  CHECK(equal(b.pow(3), TreeWord::identity(t)));
  CHECK(equal(a.pow(3), TreeWord::identity(t)));
  CHECK_FALSE(equal(b, a));
  CHECK_FALSE(equal(b.pow(2), TreeWord::identity(t)));
}

TEST_CASE("section identities on random words") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u}) {
    auto t = tup(p, p == 3 ? std::vector<unsigned>{1, 2}
                           : std::vector<unsigned>{1, 1, 0, 0});
    for (int trial = 0; trial < 500; ++trial) {
      TreeWord g = random_word(t, rng, 12);
      TreeWord h = random_word(t, rng, 12);
      Vertex u = random_vertex(p, rng, 1 + trial % 3);

      // (gh)|_u = g|_u h|_(u^g)
      CHECK(equal(section(g * h, u), section(g, u) * section(h, vertex_image(g, u))));
      // (g|_u)|_v = g|_(uv)
      Vertex v = random_vertex(p, rng, 1);
      Vertex uv = u;
      uv.digits.insert(uv.digits.end(), v.digits.begin(), v.digits.end());
      CHECK(equal(section(section(g, u), v), section(g, uv)));
      // g^-1|_u = (g|_(u^(g^-1)))^-1
      CHECK(equal(section(g.inverse(), u),
                  section(g, vertex_image(g.inverse(), u)).inverse()));
    }
  }
}

TEST_CASE("level permutations of the generators") {
  auto t = tup(3, {1, 2});
  Permutation a1 = level_permutation(TreeWord::generator_a(t), 1);
  CHECK(a1 == Permutation(std::vector<unsigned>{1, 2, 0}));
  CHECK(level_permutation(TreeWord::generator_b(t), 1).is_identity());

  // b at level 2 fixes the subtree below 0 and cycles the others by e_x
  Permutation b2 = level_permutation(TreeWord::generator_b(t), 2);
  for (unsigned j = 0; j < 3; ++j) {
    CHECK(b2[j] == j);                         // subtree 0 pointwise fixed
    CHECK(b2[3 + j] == 3 + (j + 1) % 3);       // e_1 = 1
    CHECK(b2[6 + j] == 6 + (j + 2) % 3);       // e_2 = 2
  }
}

TEST_CASE("level permutation is a homomorphism compatible with sections") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u}) {
    auto t = tup(p, p == 3 ? std::vector<unsigned>{0, 1}
                           : std::vector<unsigned>{1, 0, 4, 3});
    unsigned n = 3;
    unsigned block = p * p;
    for (int trial = 0; trial < 50; ++trial) {
      TreeWord w1 = random_word(t, rng, 10);
      TreeWord w2 = random_word(t, rng, 10);
      CHECK(level_permutation(w1 * w2, n) ==
            level_permutation(w1, n) * level_permutation(w2, n));

      // action below vertex x equals the level-(n-1) action of the section
      Permutation big = level_permutation(w1, n);
      unsigned x = std::uniform_int_distribution<unsigned>(0, p - 1)(rng);
      unsigned xi = (x + root_action(w1)) % p;
      Permutation small = level_permutation(section(w1, x), n - 1);
      for (unsigned j = 0; j < block; ++j)
        CHECK(big[x * block + j] == xi * block + small[j]);
    }
  }
}

TEST_CASE("local actions of [c, a] match the closed coordinates") {
  // (e_{p-2} - 2e_{p-1}, e_1 + e_{p-1}, -2e_1 + e_2, e''_3, ..., e''_{p-1})
  for (auto spec : {std::pair<unsigned, std::vector<unsigned>>{3, {1, 2}},
                    {5, {1, 0, 0, 1}},
                    {5, {1, 1, 0, 0}},
                    {7, {1, 2, 0, 0, 3, 1}}}) {
    unsigned p = spec.first;
    auto t = std::make_shared<DefiningTuple>(p, spec.second);
    Fp f(p);
    TreeWord c = TreeWord::commutator_c(t);
    TreeWord a = TreeWord::generator_a(t);
    TreeWord ca = c.inverse() * a.inverse() * c * a;
    DifferenceTuple epp = second_difference(*t);
    std::vector<unsigned> expected{
        f.reduce(static_cast<long long>(t->at(p - 2)) - 2 * t->at(p - 1)),
        f.add(t->at(1), t->at(p - 1)),
        f.reduce(static_cast<long long>(t->at(2)) - 2 * t->at(1))};
    for (unsigned i = 3; i < p; ++i)
      expected.push_back(epp.at(i));
    for (unsigned x = 0; x < p; ++x)
      CHECK(root_action(section(ca, x)) == expected[x]);
  }
}

TEST_CASE("fractality witnesses") {
  for (unsigned p : {3u, 5u}) {
    auto t = tup(p, p == 3 ? std::vector<unsigned>{1, 2}
                           : std::vector<unsigned>{1, 1, 0, 0});
    Fp f(p);
    unsigned k = 1; // index with e_k != 0 in both sample tuples
    REQUIRE(t->at(k) != 0);
    for (unsigned x = 0; x < p; ++x) {
      // b appears as the section at x of its own conjugate
      TreeWord bhat = conjugate_by_a_power(TreeWord::generator_b(t), x);
      CHECK(root_action(bhat) == 0);
      CHECK(equal(section(bhat, x), TreeWord::generator_b(t)));
      // a appears as the section at x of a power of a b-conjugate
      TreeWord ahat = conjugate_by_a_power(
          TreeWord::generator_b(t).pow(f.inv(t->at(k))),
          static_cast<long long>(x) - k);
      CHECK(root_action(ahat) == 0);
      CHECK(equal(section(ahat, x), TreeWord::generator_a(t)));
    }
  }
}
