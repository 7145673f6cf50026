#include "oracles.hpp"

#include "toric/lattice.hpp"
#include "toric/linear_system.hpp"

#include <doctest.h>

#include <random>

using namespace toric;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// product of random elementary matrices
IntMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int step = 0; step < 12; ++step) {
    const auto a = idx(rng), b = idx(rng);
    if (a == b) {
      u.swap_rows(a, (a + 1) % n);
      continue;
    }
    const long f = k(rng);
    for (std::size_t j = 0; j < n; ++j) u(a, j) += f * u(b, j);
  }
  return u;
}

LinearSystem random_system(std::mt19937_64& rng, std::size_t dim, std::size_t rows) {
  std::uniform_int_distribution<long> coef(-3, 3), rel(0, 2);
  LinearSystem s(dim);
  for (std::size_t i = 0; i < rows; ++i) {
    IntVec a(dim);
    for (auto& x : a) x = coef(rng);
    const Integer c = coef(rng);
    switch (rel(rng)) {
      case 0: s.add_le(a, c); break;
      case 1: s.add_lt(a, c); break;
      default: s.add_ge(a, c); break;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("hermite form of a small matrix") {
  const IntMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto r = hermite_normal_form(a);
  CHECK(is_hermite_form(r.h));
  CHECK(r.u * a == r.h);
  CHECK(abs(determinant(r.u)) == 1);
  CHECK(r.h == IntMat{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}});
}

TEST_CASE("hermite form: predicate, idempotence, invariance under unimodular rows") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMat a = random_matrix(rng, r, c, -5, 5);
    const auto h = hermite_normal_form(a);
    REQUIRE(is_hermite_form(h.h));
    CHECK(h.u * a == h.h);
    CHECK(abs(determinant(h.u)) == 1);
    CHECK(rank(h.h) == rank(a));
    CHECK(hermite_normal_form(h.h).h == h.h);
    CHECK(hermite_normal_form(random_unimodular(rng, r) * a).h == h.h);
  }
}

TEST_CASE("is_hermite_form rejects non-reduced entries") {
  CHECK_FALSE(is_hermite_form(IntMat{{2, 5}, {0, 3}}.transpose()));
  CHECK_FALSE(is_hermite_form(IntMat{{-1, 0}, {0, 1}}));
  CHECK_FALSE(is_hermite_form(IntMat{{1, 3}, {0, 2}}));
  CHECK(is_hermite_form(IntMat{{1, 1}, {0, 2}}));
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMat{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  CHECK(rank(IntMat{{1, 2, 3}, {2, 4, 6}}) == 1);
  IntMat big{{1, 0}, {0, 1}};
  big(0, 0) = Integer("123456789012345678901234567890");
  CHECK(determinant(big) == Integer("123456789012345678901234567890"));
}

TEST_CASE("solve_integer") {
  const IntMat a{{2, 0}, {0, 3}};
  auto x = solve_integer(a, make_int_vec({4, 9}));
  REQUIRE(x);
  CHECK(*x == make_int_vec({2, 3}));
  CHECK_FALSE(solve_integer(a, make_int_vec({1, 3})));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMat m = random_matrix(rng, 3, 4, -4, 4);
    const IntMat x0 = random_matrix(rng, 4, 1, -5, 5);
    const IntVec b = m * x0.col_vec(0);
    auto sol = solve_integer(m, b);
    REQUIRE(sol);
    CHECK(m * *sol == b);
  }
}

TEST_CASE("unimodular_inverse") {
  const IntMat a{{2, 1}, {1, 1}};
  CHECK(unimodular_inverse(a) * a == IntMat::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMat{{2, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("floor helpers") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(ceil_of(Rational(-1, 3)) == 0);
  CHECK(ceil_of(Rational(4, 2)) == 2);
}

TEST_CASE("strict feasibility examples") {
  const IntVec x = make_int_vec({1});
  LinearSystem open(1);
  open.add_gt(x, 0).add_lt(x, 1);
  CHECK(feasible(open));

  LinearSystem touching(1);
  touching.add_ge(x, 0).add_lt(x, 0);
  CHECK_FALSE(feasible(touching));

  LinearSystem closed(1);
  closed.add_ge(x, 0).add_le(x, 0);
  CHECK(feasible(closed));

  // x + y < 1, x > 0, y > 0 in the plane; feasible.  x + y <= 0 with x, y > 0 is not.
  LinearSystem tri(2);
  tri.add_lt(make_int_vec({1, 1}), 1).add_gt(make_int_vec({1, 0}), 0).add_gt(make_int_vec({0, 1}), 0);
  CHECK(feasible(tri));
  auto p = find_point(tri);
  REQUIRE(p);
  CHECK(tri.satisfied_by(std::span<const Rational>(*p)));
  LinearSystem empty(2);
  empty.add_le(make_int_vec({1, 1}), 0).add_gt(make_int_vec({1, 0}), 0).add_gt(make_int_vec({0, 1}), 0);
  CHECK_FALSE(feasible(empty));
  CHECK_FALSE(find_point(empty));
}

TEST_CASE("feasibility agrees with Fourier-Motzkin on random systems") {
  std::mt19937_64 rng(2024);
  int feasible_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const LinearSystem s = random_system(rng, dim, 3 + trial % 4);
    const bool expect = oracle::fm_feasible(s);
    CAPTURE(s.to_string());
    REQUIRE(feasible(s) == expect);
    if (expect) {
      ++feasible_count;
      auto p = find_point(s);
      REQUIRE(p);
      CHECK(s.satisfied_by(std::span<const Rational>(*p)));
    }
  }
  CHECK(feasible_count > 50);
  CHECK(feasible_count < 350);
}

TEST_CASE("maximize_relaxed and is_bounded") {
  LinearSystem s(2);
  s.add_ge(make_int_vec({1, 0}), 0).add_ge(make_int_vec({0, 1}), 0).add_lt(make_int_vec({1, 1}), 3);
  const RatVec obj{Rational(1), Rational(2)};
  auto v = maximize_relaxed(s, obj);
  REQUIRE(v);
  CHECK(*v == 6);
  CHECK(is_bounded(s));

  LinearSystem ray(2);
  ray.add_ge(make_int_vec({1, 0}), 0).add_ge(make_int_vec({0, 1}), 0);
  CHECK_FALSE(maximize_relaxed(ray, obj));
  CHECK_FALSE(is_bounded(ray));

  LinearSystem none(1);
  none.add_ge(make_int_vec({1}), 1).add_le(make_int_vec({1}), 0);
  CHECK_THROWS_AS(is_bounded(none), std::domain_error);
  CHECK_THROWS_AS(maximize_relaxed(none, RatVec{Rational(1)}), std::domain_error);
}

TEST_CASE("lattice points of a triangle and of unbounded sets") {
  LinearSystem s(2);
  s.add_ge(make_int_vec({1, 0}), 0).add_ge(make_int_vec({0, 1}), 0).add_le(make_int_vec({1, 1}), 3);
  CHECK(count_lattice_points(s) == 10);
  const auto pts = lattice_points(s);
  REQUIRE(pts.size() == 10);
  CHECK(pts.front() == make_int_vec({0, 0}));
  CHECK(pts.back() == make_int_vec({3, 0}));
  CHECK(std::is_sorted(pts.begin(), pts.end()));

  LinearSystem strict(2);
  strict.add_ge(make_int_vec({1, 0}), 0).add_ge(make_int_vec({0, 1}), 0).add_lt(make_int_vec({1, 1}), 3);
  CHECK(count_lattice_points(strict) == 6);

  LinearSystem half(1);
  half.add_ge(make_int_vec({1}), 0);
  CHECK_THROWS_AS(lattice_points(half), std::domain_error);

  LinearSystem thin(2);  // 0 < 2x < 1: rational points but no integer ones
  thin.add_gt(make_int_vec({2, 0}), 0).add_lt(make_int_vec({2, 0}), 1).add_ge(make_int_vec({0, 1}), 0).add_le(
      make_int_vec({0, 1}), 5);
  CHECK(feasible(thin));
  CHECK(count_lattice_points(thin) == 0);
}

TEST_CASE("lattice point counts match a box scan") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    LinearSystem s = random_system(rng, 2 + trial % 2, 3);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      IntVec e(s.dim(), Integer(0));
      e[k] = 1;
      s.add_le(e, 4).add_ge(e, -4);
    }
    Integer expect = 0;
    IntVec p(s.dim(), Integer(-5));
    while (true) {
      if (s.satisfied_by(std::span<const Integer>(p))) ++expect;
      std::size_t k = 0;
      while (k < p.size() && ++p[k] == 6) p[k++] = -5;
      if (k == p.size()) break;
    }
    CAPTURE(s.to_string());
    CHECK(count_lattice_points(s) == expect);
  }
}
