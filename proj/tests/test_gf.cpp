#include <doctest.h>

#include <random>

#include "matroid/gf.hpp"

using namespace matroid;

TEST_CASE("field selfcheck and inverses") {
  for (int p : {2, 3, 5}) {
    CHECK(is_supported_prime(p));
    CHECK(field_selfcheck(p));
    for (int v = 1; v < p; ++v) CHECK(v * field_inverse(p, v) % p == 1);
  }
  CHECK_FALSE(is_supported_prime(4));
  CHECK_FALSE(is_supported_prime(7));
}

TEST_CASE("from_literal reduces mod p and rejects ragged grids") {
  FieldMatrix m = FieldMatrix::from_literal(3, {{-1, 4}, {0, 2}});
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 1) == 2);
  CHECK_THROWS(FieldMatrix::from_literal(3, {{1, 2}, {1}}));
  CHECK_THROWS(FieldMatrix::from_literal(4, {{1}}));
}

TEST_CASE("rank basics") {
  // identity block has full rank; empty selection has rank 0
  FieldMatrix id = FieldMatrix::with_identity_prefix(FieldMatrix::from_literal(2, {{1}, {1}, {0}}));
  CHECK(id.rank_mask(0b111) == 3);
  CHECK(id.rank_mask(0) == 0);
  FieldMatrix zero = FieldMatrix::from_literal(2, {{0, 0}, {0, 0}});
  CHECK(zero.rank() == 0);
}

TEST_CASE("rank_labels addresses columns by label") {
  FieldMatrix m = FieldMatrix::from_literal(3, {{1, 0, 1}, {0, 1, 1}});
  std::vector<int> two = {1, 3};
  CHECK(m.rank_labels(two) == 2);
  std::vector<int> bad = {9};
  CHECK_THROWS(m.rank_labels(bad));
  m.set_labels({7, 8, 9});
  std::vector<int> relabeled = {7, 9};
  CHECK(m.rank_labels(relabeled) == 2);
  CHECK_THROWS(m.set_labels({1, 1, 2}));
}

TEST_CASE("pg_points counts and pairwise independence") {
  struct Case { int p, r, count; };
  // point counts frozen from (p^r - 1)/(p - 1)
  for (auto [p, r, count] : {Case{2, 3, 7}, Case{3, 3, 13}, Case{2, 4, 15}}) {
    FieldMatrix pts = FieldMatrix::pg_points(p, r);
    CHECK(pts.cols() == count);
    CHECK(pts.rank() == r);
    for (int i = 0; i < pts.cols(); ++i) {
      for (int j = i + 1; j < pts.cols(); ++j) {
        CHECK(pts.rank_mask((1u << i) | (1u << j)) == 2);
      }
    }
  }
  CHECK_THROWS(FieldMatrix::pg_points(5, 3));
  CHECK_THROWS(FieldMatrix::pg_points(2, 5));
}

TEST_CASE("rank is monotone and subadditive (random spot checks)") {
  FieldMatrix pts = FieldMatrix::pg_points(3, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << pts.cols()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t x = dist(rng), y = dist(rng);
    CHECK(pts.rank_mask(x & y) <= pts.rank_mask(x));
    std::uint32_t disj_y = y & ~x;
    CHECK(pts.rank_mask(x | disj_y) <= pts.rank_mask(x) + pts.rank_mask(disj_y));
  }
}
