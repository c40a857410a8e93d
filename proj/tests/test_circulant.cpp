#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggs/circulant.hpp"
#include "ggs/errors.hpp"

using namespace ggs;

namespace {

DefiningTuple T(unsigned p, std::vector<unsigned> vals) {
  return DefiningTuple(p, vals);
}

LevelVector V(unsigned p, std::vector<unsigned> coords) {
  return LevelVector(p, std::move(coords));
}

// Gaussian-elimination rank of the explicit circulant matrix: the
// independent oracle for the polynomial-division route.
unsigned gauss_rank(const LevelVector& d) {
  return static_cast<unsigned>(rank(circulant_matrix(d.p, d.coords)));
}

void for_all_vectors(unsigned p, const std::function<void(LevelVector)>& fn) {
  std::vector<unsigned> coords(p, 0);
  while (true) {
    fn(LevelVector(p, coords));
    std::size_t i = coords.size();
    while (i > 0 && coords[i - 1] == p - 1)
      coords[--i] = 0;
    if (i == 0)
      break;
    ++coords[i - 1];
  }
}

LevelVector random_vector(unsigned p, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  std::vector<unsigned> coords(p);
  for (auto& c : coords)
    c = dist(rng);
  return LevelVector(p, coords);
}

} // namespace

TEST_CASE("rank of distinguished vectors") {
  CHECK(koenig_rados_rank(V(5, {1, 1, 1, 1, 1})) == 1);
  CHECK(koenig_rados_rank(V(5, {1, 0, 0, 0, 0})) == 5);
  CHECK(koenig_rados_rank(V(3, {0, 1, 2})) == 2);
  CHECK(koenig_rados_rank(V(3, {0, 0, 0})) == 0);
  CHECK(gauss_rank(V(3, {0, 1, 2})) == 2);
}

TEST_CASE("remainder tower values") {
  CHECK(remainder_map(V(3, {0, 0, 0})) == std::vector<unsigned>{0, 0, 0});
  CHECK(remainder_map(V(3, {1, 1, 1})) == std::vector<unsigned>{1, 0, 0});
  auto r = remainder_map(V(5, {0, 0, 0, 0, 1}));
  CHECK(r[4] == 1); // sum of coordinates
  CHECK(r[3] == 4); // weighted by the index
  CHECK(r[2] == 1); // weighted by C(i, 2) = C(4,2) = 6
}

TEST_CASE("division route matches the closed binomial route") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u, 7u})
    for (int trial = 0; trial < 100; ++trial) {
      LevelVector d = random_vector(p, rng);
      CHECK(remainder_map(d) == remainder_map_binomial(d));
    }
}

TEST_CASE("circulant dimension equals rank, exhaustively") {
  for (unsigned p : {3u, 5u})
    for_all_vectors(p, [](LevelVector d) {
      unsigned dim = circulant_dim(d);
      CHECK(dim == koenig_rados_rank(d));
      CHECK(dim == gauss_rank(d));
    });
}

TEST_CASE("circulant dimension equals rank on random vectors") {
  std::mt19937 rng(1);
  for (unsigned p : {7u, 11u})
    for (int trial = 0; trial < 1000; ++trial) {
      LevelVector d = random_vector(p, rng);
      unsigned dim = circulant_dim(d);
      CHECK(dim == koenig_rados_rank(d));
      CHECK(dim == gauss_rank(d));
    }
}

TEST_CASE("remainder matrix is the right-justified Pascal triangle") {
  for (unsigned p : {3u, 5u, 7u}) {
    for (unsigned j = 0; j < p; ++j) {
      std::vector<unsigned> basis(p, 0);
      basis[j] = 1;
      auto r = remainder_map(V(p, basis));
      for (unsigned i = 1; i <= p; ++i)
        CHECK(r[i - 1] == binomial_mod(j, p - i, p));
    }
  }
}

TEST_CASE("flag membership and nesting") {
  CHECK(flag_member(V(3, {1, 1, 1}), 1));
  CHECK_FALSE(flag_member(V(3, {1, 1, 1}), 0));
  CHECK(flag_member(V(3, {0, 0, 0}), 0));
  CHECK(flag_member(V(3, {0, 1, 2}), 3));
  CHECK_THROWS_AS(flag_member(V(3, {0, 1, 2}), 4), usage_error);

  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u, 7u}) {
    Fp f(p);
    std::uniform_int_distribution<unsigned> dist(0, p - 1);
    for (int trial = 0; trial < 500; ++trial) {
      LevelVector d = random_vector(p, rng);
      unsigned dim = circulant_dim(d);
      for (unsigned i = dim; i <= p; ++i)
        CHECK(flag_member(d, i));
      // the flag subspaces are closed under addition, scaling and shift
      LevelVector e = random_vector(p, rng);
      unsigned cap = std::max(dim, circulant_dim(e));
      std::vector<unsigned> sum(p), scaled(p);
      unsigned scalar = dist(rng);
      for (unsigned x = 0; x < p; ++x) {
        sum[x] = f.add(d.coords[x], e.coords[x]);
        scaled[x] = f.mul(scalar, d.coords[x]);
      }
      CHECK(flag_member(LevelVector(p, sum), cap));
      CHECK(flag_member(LevelVector(p, scaled), dim));
      CHECK(circulant_dim(cyclic_shift(d)) == dim);
    }
  }
}

TEST_CASE("shift invariance, exhaustively") {
  for (unsigned p : {3u, 5u})
    for_all_vectors(p, [](LevelVector d) {
      CHECK(circulant_dim(cyclic_shift(d)) == circulant_dim(d));
    });
}

TEST_CASE("set dimension is the maximum over the flag") {
  CHECK(circulant_dim_of_set({}) == 0);
  CHECK(circulant_dim_of_set({V(3, {1, 1, 1}), V(3, {0, 1, 2})}) == 2);
  CHECK(circulant_dim_of_set({V(5, {1, 0, 0, 0, 0})}) == 5);
}

TEST_CASE("local action vectors of the generators") {
  CHECK(local_action_b(T(3, {1, 2})) == V(3, {0, 1, 2}));
  CHECK(local_action_b(T(5, {1, 0, 0, 1})) == V(5, {0, 1, 0, 0, 1}));
  CHECK(local_action_b(T(5, {1, 1, 0, 0})) == V(5, {0, 1, 1, 0, 0}));
  CHECK(local_action_c(T(3, {1, 2})) == V(3, {2, 2, 2}));
  CHECK(local_action_c(T(5, {1, 0, 0, 1})) == V(5, {1, 4, 1, 0, 4}));
  CHECK(local_action_c(T(5, {1, 1, 1, 0})) == V(5, {0, 4, 0, 0, 1}));
}

TEST_CASE("stabilizer rank") {
  CHECK(stabilizer_rank(T(3, {1, 2})) == 2);
  CHECK(stabilizer_rank(T(3, {0, 1})) == 3);
  CHECK(stabilizer_rank(T(5, {1, 1, 1, 0})) == 5);
  for (unsigned p : {3u, 5u, 7u})
    for (const auto& e : all_nonconstant_tuples(p)) {
      unsigned t = stabilizer_rank(e);
      CHECK(t >= 2);
      CHECK(t <= p);
    }
}

TEST_CASE("commutator action vectors") {
  CHECK(commutator_action_vector(T(5, {1, 0, 0, 1}), 1) == V(5, {1, 0, 4, 0, 0}));
  CHECK(commutator_action_vector(T(5, {1, 0, 0, 1}), 2) == V(5, {0, 4, 1, 0, 0}));
  CHECK(commutator_action_vector(T(3, {1, 2}), 1) == V(3, {1, 1, 1}));
  CHECK_THROWS_AS(commutator_action_vector(T(5, {1, 0, 0, 1}), 3), usage_error);
}

TEST_CASE("second derived codimension from the vectors") {
  CHECK(second_derived_codim(T(5, {1, 1, 0, 0})) == 0);
  CHECK(second_derived_codim(T(5, {1, 0, 0, 1})) == 1);
  CHECK(second_derived_codim(T(5, {1, 0, 4, 3})) == 2);
}

TEST_CASE("codimension equals con(e') + sym(e''), exhaustively and sampled") {
  for (unsigned p : {3u, 5u})
    for (const auto& e : all_nonconstant_tuples(p)) {
      TupleClass c = classify(e);
      CHECK(second_derived_codim(e) == c.con_eprime + c.sym_esecond);
    }
  std::mt19937 rng(1);
  std::uniform_int_distribution<unsigned> dist(0, 6);
  int done = 0;
  while (done < 500) {
    std::vector<unsigned> vals(6);
    for (auto& v : vals)
      v = dist(rng);
    bool constant = std::all_of(vals.begin(), vals.end(),
                                [&](unsigned v) { return v == vals[0]; });
    if (constant)
      continue;
    DefiningTuple e(7, vals);
    TupleClass c = classify(e);
    CHECK(second_derived_codim(e) == c.con_eprime + c.sym_esecond);
    ++done;
  }
}

TEST_CASE("coefficient sum of the first commutator vector vanishes when the "
          "second difference is symmetric") {
  for (unsigned p : {3u, 5u, 7u})
    for (const auto& e : all_nonconstant_tuples(p)) {
      if (!is_symmetric(second_difference(e)))
        continue;
      auto r = remainder_map(commutator_action_vector(e, 1));
      CHECK(r[p - 1] == 0);
    }
}
