#include "oracles.hpp"

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"

#include <doctest.h>

#include <set>

using namespace toric;

namespace {

DivisorClass class_of(const Variety& x, std::initializer_list<long> coeffs) {
  return divisor_class(x, TorusDivisor{make_int_vec(coeffs)});
}

/// Classes of (F_ell)_* O, enumerated directly from the floor formula.
std::set<DivisorClass> floor_formula_classes(const Variety& x, unsigned long ell) {
  std::set<DivisorClass> out;
  IntVec u(x.dim(), Integer(0));
  while (true) {
    TorusDivisor b = x.zero_divisor();
    for (RayIndex r = 0; r < x.num_rays(); ++r) b.coeffs[r] = floor_div(dot(u, x.ray(r)), Integer(ell));
    out.insert(divisor_class(x, b));
    std::size_t k = 0;
    while (k < u.size() && ++u[k] == ell) u[k++] = 0;
    if (k == u.size()) break;
  }
  return out;
}

std::set<DivisorClass> sweep(const Variety& x, unsigned long max_ell) {
  std::set<DivisorClass> all;
  for (unsigned long ell = 1; ell <= max_ell; ++ell) all.merge(floor_formula_classes(x, ell));
  return all;
}

std::map<long, std::size_t> degrees(const std::vector<DivisorClass>& classes) {
  std::map<long, std::size_t> out;
  for (const auto& c : classes) ++out[c.coords.at(0).get_si()];
  return out;
}

}  // namespace

TEST_CASE("P1 and P2 summands match the closed form") {
  for (long n = 1; n <= 3; ++n) {
    const Variety x(projective_space(static_cast<std::size_t>(n)));
    for (long ell = 1; ell <= 4; ++ell)
      for (long a = -4; a <= 4; ++a) {
        CAPTURE(n);
        CAPTURE(ell);
        CAPTURE(a);
        const auto got = degrees(pushforward_summands(x, Integer(a) * x.ray_divisor(0), static_cast<unsigned long>(ell)));
        const auto expect = oracle::projective_frobenius(static_cast<int>(n), ell, a);
        std::map<long, std::size_t> e;
        for (const auto& [k, v] : expect) e[k] = v;
        CHECK(got == e);
      }
  }
}

TEST_CASE("P1 and P2 summands satisfy the projection formula on sections") {
  // h^0(F_* O(D) (x) O(j)) = h^0(O(D + ell j))
  for (std::size_t n = 1; n <= 2; ++n) {
    const Variety x(projective_space(n));
    for (unsigned long ell = 2; ell <= 3; ++ell)
      for (long j = 0; j <= 3; ++j) {
        const auto summands = pushforward_summands(x, x.zero_divisor(), ell);
        Integer lhs = 0;
        for (const auto& c : summands)
          lhs += oracle::projective_cohomology(static_cast<long>(n), c.coords[0].get_si() + j)[0];
        CHECK(lhs == oracle::projective_cohomology(static_cast<long>(n), static_cast<long>(ell) * j)[0]);
      }
  }
}

TEST_CASE("examples of pushforwards") {
  const Variety p1(projective_space(1)), p2(projective_space(2));
  CHECK(tally(pushforward_summands(p1, p1.zero_divisor(), 2)) ==
        std::map<DivisorClass, std::size_t>{{class_of(p1, {-1, 0}), 1}, {class_of(p1, {0, 0}), 1}});
  CHECK(tally(pushforward_summands(p2, p2.zero_divisor(), 2)) ==
        std::map<DivisorClass, std::size_t>{{class_of(p2, {-1, 0, 0}), 3}, {class_of(p2, {0, 0, 0}), 1}});
  CHECK(tally(pushforward_summands(p2, p2.zero_divisor(), 3)).count(class_of(p2, {-2, 0, 0})) == 1);

  const Variety f1(hirzebruch(1));
  const TorusDivisor d{make_int_vec({2, -1, 3, 0})};
  const auto once = pushforward_summands(f1, d, 1);
  REQUIRE(once.size() == 1);
  CHECK(once[0] == divisor_class(f1, d));
}

TEST_CASE("summand count, residue summand and principal shifts") {
  for (const auto& name : {"P2", "F1", "F3", "dP7", "P1xP2"}) {
    const Variety x(builtin(name).fan);
    TorusDivisor d = x.zero_divisor();
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) d.coeffs[i] = static_cast<long>(i % 3) - 1;
    IntVec w(x.dim(), Integer(0));
    w[0] = 2;
    const TorusDivisor shifted = d + x.principal_divisor(w);
    for (unsigned long ell = 1; ell <= 3; ++ell) {
      CAPTURE(name);
      CAPTURE(ell);
      const auto s = pushforward_summands(x, d, ell);
      Integer power = 1;
      for (std::size_t k = 0; k < x.dim(); ++k) power *= ell;
      CHECK(Integer(s.size()) == power);
      CHECK(s == pushforward_summands(x, shifted, ell));
      CHECK(s == pushforward_summands_serial(x, d, ell));

      IntVec u(x.dim(), Integer(0));
      u[0] = ell - 1;
      const FrobSummand one = frobenius_summand(x, d, ell, u);
      for (RayIndex r = 0; r < x.num_rays(); ++r)
        CHECK(one.divisor.coeffs[r] == floor_div(d.coeffs[r] + dot(u, x.ray(r)), Integer(ell)));
      CHECK(std::binary_search(s.begin(), s.end(), one.cls));
    }
  }
}

TEST_CASE("frob sets of the small examples") {
  const Variety p1(projective_space(1));
  CHECK(frob_set(p1).classes() == std::vector<DivisorClass>{class_of(p1, {-1, 0}), class_of(p1, {0, 0})});

  const Variety p2(projective_space(2));
  CHECK(frob_set(p2).classes() ==
        std::vector<DivisorClass>{class_of(p2, {-2, 0, 0}), class_of(p2, {-1, 0, 0}), class_of(p2, {0, 0, 0})});

  const Variety q(builtin("P1xP1").fan);
  std::vector<DivisorClass> expect{class_of(q, {0, 0, 0, 0}), class_of(q, {-1, 0, 0, 0}), class_of(q, {0, 0, -1, 0}),
                                   class_of(q, {-1, 0, -1, 0})};
  std::sort(expect.begin(), expect.end());
  CHECK(frob_set(q).classes() == expect);

  CHECK(frob_set(Variety(hirzebruch(1))).size() == 4);
}

TEST_CASE("chamber search agrees with an ell sweep") {
  for (const auto& name : {"P1", "P2", "P3", "P1xP1", "F1", "F2", "F3", "dP7", "dP6", "P1xP2", "P1xF1", "BlptP3"}) {
    const Variety x(builtin(name).fan);
    CAPTURE(name);
    const FrobSet f = frob_set(x);
    const auto classes = f.classes();
    const std::set<DivisorClass> chamber(classes.begin(), classes.end());
    CHECK(chamber == sweep(x, std::min<unsigned long>(12, std::max<unsigned long>(f.stabilizing_ell, 6))));
    CHECK(chamber == sweep(x, f.stabilizing_ell));
    if (f.stabilizing_ell > 1) CHECK(chamber != sweep(x, f.stabilizing_ell - 1));
    for (const auto& e : f.entries) {
      CHECK(f.contains(e.cls));
      CHECK(e.chamber.satisfied_by(std::span<const Rational>(e.witness)));
      CHECK(floor_formula_classes(x, e.min_ell).count(e.cls) == 1);
      for (unsigned long ell = 1; ell < e.min_ell; ++ell) CHECK(floor_formula_classes(x, ell).count(e.cls) == 0);
    }
  }
}

TEST_CASE("stabilizing ell") {
  CHECK(minimal_stabilizing_ell(Variety(projective_space(1))) == 2);
  CHECK(minimal_stabilizing_ell(Variety(projective_space(2))) == 3);
  CHECK(minimal_stabilizing_ell(Variety(builtin("P1xP1").fan)) == 2);
  CHECK(minimal_stabilizing_ell(Variety(projective_space(3))) == 4);
}
