#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "lcstorsion/zlinalg.hpp"
#include "support/oracles.hpp"

using lcs::BigInt;
using lcs::IntMatrix;
using lcs::Lattice;
using lcs::Row;
namespace ts = testsupport;

namespace {

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<Row> rs;
  for (const auto& r : rows) {
    Row row;
    for (int v : r) row.push_back(BigInt(v));
    rs.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows.empty() ? 0 : rows[0].size(), rs);
}

Row vec(const std::vector<int>& v) {
  Row r;
  for (int x : v) r.push_back(BigInt(x));
  return r;
}

std::vector<std::vector<BigInt>> row_vectors(const IntMatrix& m) {
  return m.row_list();
}

IntMatrix random_matrix(ts::Rng& rng, std::size_t r, std::size_t c, int bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = rng.coeff(-bound, bound);
  return m;
}

// Random rows that are linearly independent, so the rational oracle has a
// unique solution to work with.
std::vector<Row> independent_rows(ts::Rng& rng, std::size_t k, std::size_t n, int bound) {
  for (;;) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < k; ++i) {
      Row r(n);
      for (auto& x : r) x = rng.coeff(-bound, bound);
      rows.push_back(std::move(r));
    }
    if (ts::oracle_rank(rows) == k) return rows;
  }
}

}  // namespace

TEST_CASE("hermite form of a worked example") {
  IntMatrix m = mat({{2, 4, 4}, {1, 1, 1}, {0, 2, 0}});
  auto res = lcs::hnf(m);
  CHECK(res.h == mat({{1, 1, 1}, {0, 2, 0}, {0, 0, 2}}));
  CHECK(res.u * m == res.h);
  CHECK(lcs::abs_val(ts::det_cofactor(row_vectors(res.u))) == BigInt(1));
}

TEST_CASE("hermite form drops dependent rows to the bottom") {
  IntMatrix m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto res = lcs::hnf(m);
  CHECK(!res.h.is_zero_row(0));
  CHECK(!res.h.is_zero_row(1));
  CHECK(res.h.is_zero_row(2));
  CHECK(res.u * m == res.h);
}

TEST_CASE("hermite form is canonical: pivots positive, entries above reduced") {
  ts::Rng rng(7101);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t r = rng.pick(1, 6), c = rng.pick(1, 6);
    IntMatrix m = random_matrix(rng, r, c, 12);
    auto res = lcs::hnf(m);
    std::size_t prev_pivot = SIZE_MAX;
    for (std::size_t i = 0; i < r; ++i) {
      if (res.h.is_zero_row(i)) {
        for (std::size_t k = i; k < r; ++k) CHECK(res.h.is_zero_row(k));
        break;
      }
      std::size_t p = 0;
      while (res.h.at(i, p).is_zero()) ++p;
      if (prev_pivot != SIZE_MAX) CHECK(p > prev_pivot);
      prev_pivot = p;
      CHECK(res.h.at(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(res.h.at(k, p) >= 0);
        CHECK(res.h.at(k, p) < res.h.at(i, p));
      }
    }
    CHECK(res.u * m == res.h);
  }
}

TEST_CASE("hermite basis does not depend on generator order") {
  ts::Rng rng(7102);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = rng.pick(1, 5), c = rng.pick(1, 5);
    IntMatrix m = random_matrix(rng, r, c, 9);
    auto rows = m.row_list();
    std::shuffle(rows.begin(), rows.end(), rng.g);
    Lattice a = Lattice::from_matrix(m);
    Lattice b = Lattice::from_rows(c, rows);
    CHECK(a == b);
    CHECK(lcs::lattice_equal(a, b));
  }
}

TEST_CASE("pivot product of a full-rank square lattice is the determinant size") {
  ts::Rng rng(7103);
  int done = 0;
  while (done < 25) {
    IntMatrix m = random_matrix(rng, 4, 4, 8);
    BigInt det = ts::det_cofactor(row_vectors(m));
    if (det.is_zero()) continue;
    Lattice l = Lattice::from_matrix(m);
    REQUIRE(l.rank() == 4);
    BigInt prod = 1;
    for (std::size_t i = 0; i < 4; ++i) prod *= l.basis().at(i, i);
    CHECK(prod == lcs::abs_val(det));
    ++done;
  }
}

TEST_CASE("smith form of frozen diagonals") {
  auto s1 = lcs::snf(mat({{2, 0}, {0, 3}}));
  CHECK(s1.d == std::vector<BigInt>{BigInt(1), BigInt(6)});
  auto s2 = lcs::snf(mat({{4, 0}, {0, 6}}));
  CHECK(s2.d == std::vector<BigInt>{BigInt(2), BigInt(12)});
  auto s3 = lcs::snf(mat({{1, 2}, {2, 4}}));
  CHECK(s3.d == std::vector<BigInt>{BigInt(1)});
  CHECK(s3.rank == 1);
  auto s4 = lcs::snf(IntMatrix(3, 3));
  CHECK(s4.d.empty());
  CHECK(s4.rank == 0);
}

TEST_CASE("smith form agrees with the minor-gcd oracle") {
  ts::Rng rng(7104);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = rng.pick(1, 5), c = rng.pick(1, 5);
    IntMatrix m = random_matrix(rng, r, c, 9);
    auto s = lcs::snf(m);
    CHECK(s.d == ts::snf_by_minors(row_vectors(m)));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) CHECK((s.d[i + 1] % s.d[i]).is_zero());
  }
}

TEST_CASE("smith transforms are unimodular and exact up to 12 x 12") {
  ts::Rng rng(7105);
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t r = rng.pick(1, 12), c = rng.pick(1, 12);
    IntMatrix m = random_matrix(rng, r, c, 20);
    auto s = lcs::snf(m, true);
    REQUIRE(s.u.has_value());
    REQUIRE(s.v.has_value());
    IntMatrix d(r, c);
    for (std::size_t i = 0; i < s.d.size(); ++i) d.at(i, i) = s.d[i];
    CHECK(*s.u * m * *s.v == d);
    CHECK(lcs::abs_val(ts::det_bareiss(row_vectors(*s.u))) == BigInt(1));
    CHECK(lcs::abs_val(ts::det_bareiss(row_vectors(*s.v))) == BigInt(1));
  }
}

TEST_CASE("snf without transforms leaves them empty") {
  auto s = lcs::snf(mat({{2, 0}, {0, 3}}));
  CHECK(!s.u.has_value());
  CHECK(!s.v.has_value());
}

TEST_CASE("membership and order in a frozen lattice") {
  Lattice l = Lattice::from_rows(2, {vec({2, 0}), vec({0, 3})});
  CHECK(l.contains(vec({2, 3})));
  CHECK(!l.contains(vec({1, 0})));
  CHECK(l.order_in_quotient(vec({0, 0})) == BigInt(1));
  CHECK(l.order_in_quotient(vec({2, 0})) == BigInt(1));
  CHECK(l.order_in_quotient(vec({1, 0})) == BigInt(2));
  CHECK(l.order_in_quotient(vec({0, 1})) == BigInt(3));
  CHECK(l.order_in_quotient(vec({1, 1})) == BigInt(6));

  Lattice line = Lattice::from_rows(2, {vec({1, 0})});
  CHECK(!line.order_in_quotient(vec({0, 1})).has_value());
  CHECK(!Lattice::zero(2).order_in_quotient(vec({1, 0})).has_value());
  CHECK(Lattice::zero(2).order_in_quotient(vec({0, 0})) == BigInt(1));
}

TEST_CASE("membership and order match the rational oracle") {
  ts::Rng rng(7106);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t n = rng.pick(2, 5);
    std::size_t k = rng.pick(1, n);
    auto rows = independent_rows(rng, k, n, 6);
    Lattice l = Lattice::from_rows(n, rows);
    REQUIRE(l.rank() == k);

    for (int probe = 0; probe < 8; ++probe) {
      Row v(n);
      if (probe % 2 == 0) {
        // random combination scaled down often lands at finite order
        Row acc(n, BigInt(0));
        for (const auto& r : rows) {
          BigInt c = rng.coeff(-3, 3);
          for (std::size_t j = 0; j < n; ++j) acc[j] += c * r[j];
        }
        v = acc;
      } else {
        for (auto& x : v) x = rng.coeff(-9, 9);
      }
      CHECK(l.contains(v) == ts::oracle_member(rows, v));
      auto got = l.order_in_quotient(v);
      auto want = ts::oracle_order(rows, v);
      CHECK(got.has_value() == want.has_value());
      if (got && want) CHECK(*got == *want);
    }
  }
}

TEST_CASE("coordinates reproduce the vector") {
  ts::Rng rng(7107);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t n = rng.pick(2, 5);
    std::size_t k = rng.pick(1, n);
    auto rows = independent_rows(rng, k, n, 5);
    Lattice l = Lattice::from_rows(n, rows);
    Row acc(n, BigInt(0));
    for (const auto& r : rows) {
      BigInt c = rng.coeff(-4, 4);
      for (std::size_t j = 0; j < n; ++j) acc[j] += c * r[j];
    }
    auto coords = l.coordinates(acc);
    REQUIRE(coords.has_value());
    Row back = lcs::row_times_matrix(*coords, l.basis());
    CHECK(back == acc);
    CHECK(!l.coordinates(Row(n, BigInt(1))).has_value() ==
          !l.contains(Row(n, BigInt(1))));
  }
}

TEST_CASE("quotient invariants of frozen pairs") {
  Lattice small = Lattice::from_rows(2, {vec({2, 0}), vec({0, 3})});
  auto q = lcs::quotient_invariants(small, Lattice::full(2));
  CHECK(q.free_rank == 0);
  CHECK(q.torsion == std::vector<BigInt>{BigInt(6)});

  auto q1 = lcs::quotient_invariants(small);
  CHECK(q1.free_rank == 0);
  CHECK(q1.torsion == std::vector<BigInt>{BigInt(6)});

  auto q2 = lcs::quotient_invariants(Lattice::from_rows(2, {vec({1, 0})}));
  CHECK(q2.free_rank == 1);
  CHECK(q2.torsion.empty());

  auto q3 = lcs::quotient_invariants(Lattice::zero(3));
  CHECK(q3.free_rank == 3);
  CHECK(q3.torsion.empty());
}

TEST_CASE("quotient invariants reject non-sublattices") {
  Lattice small = Lattice::from_rows(2, {vec({1, 1})});
  Lattice big = Lattice::from_rows(2, {vec({2, 0}), vec({0, 2})});
  CHECK_THROWS_AS(lcs::quotient_invariants(small, big), lcs::ContainmentError);
  try {
    lcs::quotient_invariants(small, big);
  } catch (const lcs::ContainmentError& e) {
    CHECK(e.row_index == 0);
  }
}

TEST_CASE("quotient invariants match the smith form of the coordinate matrix") {
  ts::Rng rng(7108);
  int done = 0;
  while (done < 20) {
    auto big_rows = independent_rows(rng, 3, 5, 4);
    auto t = row_vectors(random_matrix(rng, 3, 3, 4));
    if (ts::det_cofactor(t).is_zero()) continue;
    std::vector<Row> small_rows;
    for (const auto& trow : t) {
      Row acc(5, BigInt(0));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j) acc[j] += trow[i] * big_rows[i][j];
      small_rows.push_back(std::move(acc));
    }
    auto q = lcs::quotient_invariants(Lattice::from_rows(5, small_rows),
                                      Lattice::from_rows(5, big_rows));
    CHECK(q.free_rank == 0);
    std::vector<BigInt> want;
    for (const auto& d : ts::snf_by_minors(t))
      if (d != 1) want.push_back(d);
    CHECK(q.torsion == want);
    ++done;
  }
}

TEST_CASE("lattice sum and intersection match the rational oracle") {
  ts::Rng rng(7109);
  int done = 0;
  while (done < 25) {
    std::size_t n = rng.pick(2, 4);
    std::size_t ka = rng.pick(1, n - 1), kb = rng.pick(1, n - 1);
    auto ra = independent_rows(rng, ka, n, 3);
    auto rb = independent_rows(rng, kb, n, 3);
    std::vector<Row> joint = ra;
    joint.insert(joint.end(), rb.begin(), rb.end());
    bool joint_independent = ts::oracle_rank(joint) == ka + kb;

    Lattice a = Lattice::from_rows(n, ra);
    Lattice b = Lattice::from_rows(n, rb);
    Lattice sum = lcs::lattice_sum(a, b);
    Lattice meet = lcs::lattice_intersect(a, b);

    // Intersection basis rows lie in both lattices.
    for (std::size_t i = 0; i < meet.rank(); ++i) {
      Row r = meet.basis().row(i);
      CHECK(ts::oracle_member(ra, r));
      CHECK(ts::oracle_member(rb, r));
    }

    for (int probe = 0; probe < 12; ++probe) {
      Row v(n);
      for (auto& x : v) x = rng.coeff(-6, 6);
      bool in_a = ts::oracle_member(ra, v);
      bool in_b = ts::oracle_member(rb, v);
      CHECK(meet.contains(v) == (in_a && in_b));
      if (joint_independent) CHECK(sum.contains(v) == ts::oracle_member(joint, v));
      if (in_a || in_b) CHECK(sum.contains(v));
    }
    ++done;
  }
}

TEST_CASE("preimage lattice characterizes the mapped membership") {
  ts::Rng rng(7110);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t m = rng.pick(1, 4), n = rng.pick(2, 4);
    IntMatrix map = random_matrix(rng, m, n, 4);
    std::size_t k = rng.pick(1, n);
    auto target_rows = independent_rows(rng, k, n, 3);
    Lattice target = Lattice::from_rows(n, target_rows);
    Lattice pre = lcs::lattice_preimage(map, target);
    REQUIRE(pre.ambient() == m);
    for (int probe = 0; probe < 20; ++probe) {
      Row z(m);
      for (auto& x : z) x = rng.coeff(-4, 4);
      CHECK(pre.contains(z) == target.contains(lcs::row_times_matrix(z, map)));
    }
  }
}

TEST_CASE("kernel rows annihilate the matrix and catch all small relations") {
  ts::Rng rng(7111);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t r = rng.pick(2, 5), c = rng.pick(1, 4);
    IntMatrix m = random_matrix(rng, r, c, 4);
    auto kernel = lcs::left_kernel_rows(m);
    Lattice k = Lattice::from_rows(r, kernel);
    for (const auto& z : kernel) {
      Row img = lcs::row_times_matrix(z, m);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    for (int probe = 0; probe < 15; ++probe) {
      Row z(r);
      for (auto& x : z) x = rng.coeff(-3, 3);
      Row img = lcs::row_times_matrix(z, m);
      bool annihilates = std::all_of(img.begin(), img.end(),
                                     [](const BigInt& x) { return x.is_zero(); });
      CHECK(k.contains(z) == annihilates);
    }
  }
}

TEST_CASE("shape mismatches are rejected") {
  CHECK_THROWS_AS(IntMatrix::from_rows(3, {vec({1, 2})}), std::invalid_argument);
  Lattice l = Lattice::from_rows(2, {vec({1, 0})});
  CHECK_THROWS_AS(l.contains(vec({1, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(lcs::row_times_matrix(vec({1, 2, 3}), mat({{1, 0}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(lcs::lattice_sum(Lattice::zero(2), Lattice::zero(3)),
                  std::invalid_argument);
}

TEST_CASE("matrix text round trip") {
  IntMatrix m = mat({{1, -2, 3}, {0, 4, -5}});
  CHECK(IntMatrix::parse_text(m.to_text()) == m);
}

TEST_CASE("unimodular u in hermite results") {
  ts::Rng rng(7112);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t r = rng.pick(1, 6), c = rng.pick(1, 6);
    IntMatrix m = random_matrix(rng, r, c, 10);
    auto res = lcs::hnf(m);
    CHECK(res.u * m == res.h);
    CHECK(lcs::abs_val(ts::det_bareiss(row_vectors(res.u))) == BigInt(1));
    // hermite of hermite is itself
    auto again = lcs::hnf(res.h);
    CHECK(again.h == res.h);
  }
}
