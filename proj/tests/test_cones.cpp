#include "toric/catalog.hpp"
#include "toric/cones.hpp"

#include <doctest.h>

using namespace toric;

TEST_CASE("nef and ample on P1") {
  const Variety x(projective_space(1));
  const auto one = is_nef(x, x.ray_divisor(0));
  CHECK(one.is_nef);
  CHECK(one.is_ample);
  CHECK_FALSE(one.failing);

  const auto zero = is_nef(x, x.zero_divisor());
  CHECK(zero.is_nef);
  CHECK_FALSE(zero.is_ample);
  CHECK(zero.tight);

  const auto minus = is_nef(x, -x.ray_divisor(0));
  CHECK_FALSE(minus.is_nef);
  CHECK_FALSE(minus.is_ample);
  CHECK(minus.failing);

  CHECK(is_antinef(x, -x.ray_divisor(0)));
  CHECK(is_antinef(x, x.zero_divisor()));
  CHECK_FALSE(is_antinef(x, x.ray_divisor(1)));
}

TEST_CASE("anticanonical divisors") {
  for (const auto& e : builtin_catalog()) {
    const Variety x(e.fan);
    CAPTURE(e.name);
    REQUIRE(e.expected);
    CHECK(nef_fano_status(x) == *e.expected);
  }
  const Variety f2(hirzebruch(2));
  const auto v = is_nef(f2, -canonical_divisor(f2));
  CHECK(v.is_nef);
  CHECK_FALSE(v.is_ample);
  CHECK(to_string(FanoStatus::NefFano) == "nef_fano");
  CHECK(to_string(nef_fano_status(Variety(hirzebruch(3)))) == "neither");
}

TEST_CASE("verdict depends only on the class") {
  for (const auto& name : {"F1", "F2", "dP6", "P1xF2"}) {
    const Variety x(builtin(name).fan);
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        TorusDivisor d = x.zero_divisor();
        d.coeffs[0] = a;
        d.coeffs[x.num_rays() - 1] = b;
        d.coeffs[1] = a + b;
        IntVec w(x.dim(), Integer(1));
        w[0] = -3;
        const auto v = is_nef(x, d);
        const auto u = is_nef(x, d + x.principal_divisor(w));
        CHECK(v.is_nef == u.is_nef);
        CHECK(v.is_ample == u.is_ample);
        CHECK(v.cls == u.cls);
        CHECK(is_antinef(x, d) == is_nef(x, -d).is_nef);
      }
  }
}

TEST_CASE("nef criterion on Hirzebruch surfaces") {
  // On F_a, a D2 + b D3 (fiber, section) is nef iff a >= 0 and b >= 0.
  for (long h = 0; h <= 3; ++h) {
    const Variety x(hirzebruch(h));
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        const TorusDivisor d = Integer(a) * x.ray_divisor(2) + Integer(b) * x.ray_divisor(3);
        const auto v = is_nef(x, d);
        CHECK(v.is_nef == (a >= 0 && b >= 0));
        CHECK(v.is_ample == (a > 0 && b > 0));
      }
  }
}

TEST_CASE("bu sets") {
  const Variety p2(projective_space(2));
  CHECK(bu_set(p2) == frob_set(p2).classes());

  const Variety q(builtin("P1xP1").fan);
  CHECK(bu_set(q).size() == 4);

  const Variety f1(hirzebruch(1));
  const TorusDivisor f = f1.ray_divisor(2), s = f1.ray_divisor(3);
  std::vector<DivisorClass> expect{divisor_class(f1, f1.zero_divisor()), divisor_class(f1, -f),
                                   divisor_class(f1, -s), divisor_class(f1, -f - s)};
  std::sort(expect.begin(), expect.end());
  CHECK(bu_set(f1) == expect);

  // F2: frob has 5 classes, one of which is not anti-nef
  const Variety f2(hirzebruch(2));
  CHECK(frob_set(f2).size() == 5);
  CHECK(bu_set(f2).size() == 4);
  for (const auto& c : bu_set(f2)) CHECK(is_antinef(f2, f2.representative(c)));
}
