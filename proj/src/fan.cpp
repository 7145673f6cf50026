#include "toric/fan.hpp"

#include "toric/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace toric {

Fan normalized(Fan fan) {
  for (auto& c : fan.max_cones) std::sort(c.begin(), c.end());
  std::sort(fan.max_cones.begin(), fan.max_cones.end());
  return fan;
}

// ---------------------------------------------------------------------------
// validation

namespace {

IntMat cone_matrix(const Fan& fan, const std::vector<RayIndex>& cone) {
  std::vector<IntVec> rows;
  rows.reserve(cone.size());
  for (auto i : cone) rows.push_back(fan.rays[i]);
  return IntMat::from_rows(rows);
}

/// Normal of the hyperplane through the origin spanned by n-1 vectors.
IntVec hyperplane_normal(const std::vector<IntVec>& vecs, std::size_t n) {
  IntVec normal(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMat m(n, n);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = vecs[r][c];
    m(n - 1, i) = 1;
    normal[i] = determinant(m);
  }
  return normal;
}

std::string cone_str(const std::vector<RayIndex>& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  ValidationReport rep;
  auto fail = [&](bool& flag, const std::string& check, const std::string& detail) {
    flag = false;
    rep.failures.push_back({check, detail});
  };
  const std::size_t n = fan.dim;
  if (n == 0) fail(rep.well_formed, "well_formed", "dimension must be positive");
  if (fan.rays.empty()) fail(rep.well_formed, "well_formed", "no rays");
  if (fan.max_cones.empty()) fail(rep.well_formed, "well_formed", "no maximal cones");
  if (fan.rays.size() > 64) fail(rep.well_formed, "well_formed", "more than 64 rays");
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (fan.rays[i].size() != n)
      fail(rep.well_formed, "well_formed", "ray " + std::to_string(i) + " has wrong length");
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    std::set<RayIndex> uniq(cone.begin(), cone.end());
    if (cone.size() != n || uniq.size() != n)
      fail(rep.well_formed, "well_formed", "cone " + std::to_string(c) + " must have " +
                                               std::to_string(n) + " distinct rays");
    for (auto i : cone)
      if (i >= fan.rays.size())
        fail(rep.well_formed, "well_formed",
             "cone " + std::to_string(c) + " references missing ray " + std::to_string(i));
  }
  if (!rep.well_formed) return rep;

  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (gcd_of(fan.rays[i]) != 1)
      fail(rep.primitive, "primitive", "ray " + std::to_string(i) + " " + to_string(fan.rays[i]) +
                                           " is not primitive");
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[i] == fan.rays[j])
        fail(rep.distinct_rays, "distinct_rays",
             "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  std::vector<std::vector<RayIndex>> sorted_cones;
  for (const auto& cone : fan.max_cones) {
    auto s = cone;
    std::sort(s.begin(), s.end());
    sorted_cones.push_back(std::move(s));
  }
  {
    std::set<std::vector<RayIndex>> seen;
    for (const auto& c : sorted_cones)
      if (!seen.insert(c).second)
        fail(rep.well_formed, "well_formed", "duplicate cone " + cone_str(c));
  }

  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Integer det = determinant(cone_matrix(fan, fan.max_cones[c]));
    if (det == 0)
      fail(rep.simplicial, "simplicial", "cone " + cone_str(sorted_cones[c]) + " is degenerate");
    else if (abs(det) != 1)
      fail(rep.smooth, "smooth", "cone " + cone_str(sorted_cones[c]) + " has |det| = " +
                                     Integer(abs(det)).get_str());
  }
  if (!rep.simplicial) rep.smooth = false;

  std::vector<bool> used(fan.rays.size(), false);
  for (const auto& c : fan.max_cones)
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      fail(rep.rays_covered, "rays_covered", "ray " + std::to_string(i) + " lies in no maximal cone");

  // ridges: (n-1)-subsets, each must lie in exactly two cones on opposite sides
  std::map<std::vector<RayIndex>, std::vector<std::size_t>> ridges;
  for (std::size_t c = 0; c < sorted_cones.size(); ++c)
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<RayIndex> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != drop) r.push_back(sorted_cones[c][k]);
      ridges[r].push_back(c);
    }
  std::vector<std::vector<std::size_t>> adj(sorted_cones.size());
  for (const auto& [ridge, owners] : ridges) {
    if (owners.size() != 2) {
      fail(rep.ridge_paired, "ridge_paired",
           "ridge " + cone_str(ridge) + " lies in " + std::to_string(owners.size()) + " maximal cones");
      continue;
    }
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
    if (!rep.simplicial) continue;
    std::vector<IntVec> vecs;
    for (auto i : ridge) vecs.push_back(fan.rays[i]);
    IntVec normal = hyperplane_normal(vecs, n);
    Integer side[2];
    for (int k = 0; k < 2; ++k) {
      const auto& cone = sorted_cones[owners[k]];
      RayIndex apex = *std::find_if(cone.begin(), cone.end(), [&](RayIndex i) {
        return !std::binary_search(ridge.begin(), ridge.end(), i);
      });
      side[k] = dot(normal, fan.rays[apex]);
    }
    if (sgn(side[0]) * sgn(side[1]) >= 0)
      fail(rep.ridge_paired, "ridge_paired",
           "cones sharing ridge " + cone_str(ridge) + " lie on the same side");
  }

  {
    std::vector<bool> seen(sorted_cones.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 0;
    while (!q.empty()) {
      auto c = q.front();
      q.pop();
      ++count;
      for (auto d : adj[c])
        if (!seen[d]) {
          seen[d] = true;
          q.push(d);
        }
    }
    if (count != sorted_cones.size())
      fail(rep.connected, "connected", "dual graph has " + std::to_string(sorted_cones.size() - count) +
                                           " unreachable cones");
  }

  if (rep.smooth) {
    std::vector<IntMat> inverses;
    for (const auto& c : fan.max_cones) inverses.push_back(unimodular_inverse(cone_matrix(fan, c).transpose()));
    std::mt19937_64 rng(0x70f1c5eedULL);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (int trial = 0; trial < 20; ++trial) {
      IntVec d(n);
      for (auto& x : d) x = coord(rng);
      bool located = false;
      for (const auto& inv : inverses) {
        IntVec lambda = inv * d;
        if (std::all_of(lambda.begin(), lambda.end(), [](const Integer& l) { return l >= 0; })) {
          located = true;
          break;
        }
      }
      if (!located && rep.point_location)
        fail(rep.point_location, "point_location", "direction " + to_string(d) + " lies in no cone");
    }
  }
  return rep;
}

namespace {

std::string summarize(const ValidationReport& r) {
  std::string s = "invalid fan:";
  for (const auto& f : r.failures) s += " [" + f.check + "] " + f.detail + ";";
  return s;
}

}  // namespace

InvalidFan::InvalidFan(ValidationReport report)
    : std::invalid_argument(summarize(report)), report_(std::move(report)) {}

// ---------------------------------------------------------------------------
// divisors

TorusDivisor operator+(const TorusDivisor& a, const TorusDivisor& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("divisor length mismatch");
  TorusDivisor r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

TorusDivisor operator-(const TorusDivisor& a) {
  TorusDivisor r = a;
  for (auto& x : r.coeffs) x = -x;
  return r;
}

TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b) { return a + (-b); }

TorusDivisor operator*(const Integer& k, const TorusDivisor& d) {
  TorusDivisor r = d;
  for (auto& x : r.coeffs) x *= k;
  return r;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords[i], b.coords[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.coords.size() <=> b.coords.size();
}

// ---------------------------------------------------------------------------
// Variety

struct Variety::Caches {
  std::once_flag carriers_once;
  std::vector<Carrier> carriers;
};

Variety::Variety(Fan fan) : fan_(std::move(fan)), caches_(std::make_shared<Caches>()) {
  ValidationReport rep = validate(fan_);
  if (!rep.ok()) throw InvalidFan(std::move(rep));
  const std::size_t n = fan_.dim;
  for (const auto& cone : fan_.max_cones) {
    RayMask m = 0;
    for (auto i : cone) m |= RayMask{1} << i;
    cone_masks_.push_back(m);
    cone_inverse_.push_back(unimodular_inverse(cone_matrix(fan_, cone)));
  }
  // Pic = Z^rays / M. Relations among rays are the left kernel of the ray
  // matrix; their Hermite form is a canonical basis of Hom(Pic, Z).
  IntMat rays = IntMat::from_rows(fan_.rays);
  auto [h, u] = hermite_normal_form(rays);
  const std::size_t r = num_rays();
  IntMat relations(r - n, r);
  for (std::size_t i = n; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) relations(i - n, j) = u(i, j);
  pic_basis_ = hermite_normal_form(relations).h;
  pic_section_ = IntMat(r, r - n);
  for (std::size_t k = 0; k < r - n; ++k) {
    IntVec e(r - n, Integer(0));
    e[k] = 1;
    auto col = solve_integer(pic_basis_, e);
    if (!col) throw std::logic_error("Variety: Picard group is not free");
    for (std::size_t j = 0; j < r; ++j) pic_section_(j, k) = (*col)[j];
  }
}

bool Variety::is_face(RayMask mask) const {
  return std::any_of(cone_masks_.begin(), cone_masks_.end(),
                     [&](RayMask c) { return (c & mask) == mask; });
}

const std::vector<Carrier>& Variety::carriers() const {
  std::call_once(caches_->carriers_once, [this] {
    if (num_rays() > 30) throw std::length_error("carriers: too many rays for subset enumeration");
    const RayMask end = RayMask{1} << num_rays();
    for (RayMask mask = 0; mask < end; ++mask) {
      auto ranks = reduced_cohomology_ranks(cone_masks_, mask, dim());
      if (std::any_of(ranks.begin(), ranks.end(), [](std::size_t x) { return x != 0; }))
        caches_->carriers.push_back({mask, std::move(ranks)});
    }
  });
  return caches_->carriers;
}

TorusDivisor Variety::ray_divisor(RayIndex i) const {
  TorusDivisor d = zero_divisor();
  d.coeffs.at(i) = 1;
  return d;
}

TorusDivisor Variety::principal_divisor(std::span<const Integer> w) const {
  if (w.size() != dim()) throw std::invalid_argument("principal_divisor: character has wrong length");
  TorusDivisor d;
  d.coeffs.reserve(num_rays());
  for (const auto& v : fan_.rays) d.coeffs.push_back(dot(w, v));
  return d;
}

TorusDivisor Variety::representative(const DivisorClass& cls) const {
  if (cls.coords.size() != pic_rank()) throw std::invalid_argument("representative: class has wrong rank");
  return {pic_section_ * cls.coords};
}

DivisorClass divisor_class(const Variety& x, const TorusDivisor& d) {
  if (d.coeffs.size() != x.num_rays()) throw std::invalid_argument("divisor_class: wrong number of coefficients");
  return {x.pic_basis() * d.coeffs};
}

CartierData cartier_data(const Variety& x, const TorusDivisor& d) {
  if (d.coeffs.size() != x.num_rays()) throw std::invalid_argument("cartier_data: wrong number of coefficients");
  CartierData out;
  out.m.reserve(x.num_cones());
  for (std::size_t c = 0; c < x.num_cones(); ++c) {
    const auto& cone = x.fan().max_cones[c];
    IntVec rhs;
    rhs.reserve(cone.size());
    for (auto i : cone) rhs.push_back(-d.coeffs[i]);
    IntVec m = x.cone_inverse(c) * rhs;
    for (std::size_t k = 0; k < cone.size(); ++k)
      if (dot(m, x.ray(cone[k])) != rhs[k]) throw std::logic_error("cartier_data: back-substitution failed");
    out.m.push_back(std::move(m));
  }
  return out;
}

TorusDivisor canonical_divisor(const Variety& x) {
  return {IntVec(x.num_rays(), Integer(-1))};
}

// ---------------------------------------------------------------------------
// constructors

Fan projective_space(std::size_t n) {
  if (n == 0) throw std::invalid_argument("projective_space: n must be positive");
  Fan f;
  f.name = "P" + std::to_string(n);
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Integer(0));
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  f.rays.push_back(IntVec(n, Integer(-1)));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<RayIndex> cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    f.max_cones.push_back(std::move(cone));
  }
  return normalized(std::move(f));
}

Fan hirzebruch(long a) {
  Fan f;
  f.name = "F" + std::to_string(a);
  f.dim = 2;
  f.rays = {make_int_vec({1, 0}), make_int_vec({0, 1}), make_int_vec({-1, a}), make_int_vec({0, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return normalized(std::move(f));
}

Fan product(const Fan& a, const Fan& b) {
  Fan f;
  f.name = a.name + "x" + b.name;
  f.dim = a.dim + b.dim;
  for (const auto& v : a.rays) {
    IntVec w = v;
    w.resize(f.dim, Integer(0));
    f.rays.push_back(std::move(w));
  }
  for (const auto& v : b.rays) {
    IntVec w(a.dim, Integer(0));
    w.insert(w.end(), v.begin(), v.end());
    f.rays.push_back(std::move(w));
  }
  const std::size_t off = a.rays.size();
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      auto c = ca;
      for (auto i : cb) c.push_back(i + off);
      f.max_cones.push_back(std::move(c));
    }
  return normalized(std::move(f));
}

Fan star_subdivision(const Fan& fan, const std::vector<RayIndex>& cone) {
  std::set<RayIndex> tau(cone.begin(), cone.end());
  if (tau.empty() || tau.size() != cone.size())
    throw std::invalid_argument("star_subdivision: cone must be a nonempty set of distinct rays");
  for (auto i : tau)
    if (i >= fan.rays.size()) throw std::invalid_argument("star_subdivision: ray index out of range");
  bool is_cone = false;
  for (const auto& c : fan.max_cones) {
    std::set<RayIndex> cs(c.begin(), c.end());
    if (std::includes(cs.begin(), cs.end(), tau.begin(), tau.end())) {
      is_cone = true;
      if (abs(determinant(cone_matrix(fan, c))) != 1)
        throw std::invalid_argument("star_subdivision: target lies in a non-smooth cone");
    }
  }
  if (!is_cone) throw std::invalid_argument("star_subdivision: target is not a cone of the fan");

  Fan out;
  out.name = fan.name;
  out.dim = fan.dim;
  out.rays = fan.rays;
  IntVec sum(fan.dim, Integer(0));
  for (auto i : tau)
    for (std::size_t k = 0; k < fan.dim; ++k) sum[k] += fan.rays[i][k];
  const RayIndex fresh = out.rays.size();
  out.rays.push_back(std::move(sum));
  for (const auto& c : fan.max_cones) {
    std::set<RayIndex> cs(c.begin(), c.end());
    if (!std::includes(cs.begin(), cs.end(), tau.begin(), tau.end())) {
      out.max_cones.push_back(c);
      continue;
    }
    for (auto drop : tau) {
      std::vector<RayIndex> nc;
      for (auto i : c)
        if (i != drop) nc.push_back(i);
      nc.push_back(fresh);
      out.max_cones.push_back(std::move(nc));
    }
  }
  return normalized(std::move(out));
}

bool fans_isomorphic(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.rays.size() != b.rays.size() || a.max_cones.size() != b.max_cones.size())
    return false;
  const Fan na = normalized(a), nb = normalized(b);
  std::set<std::vector<RayIndex>> cones_b(nb.max_cones.begin(), nb.max_cones.end());
  std::map<IntVec, RayIndex> index_b;
  for (std::size_t i = 0; i < nb.rays.size(); ++i) index_b[nb.rays[i]] = i;

  const auto& base = na.max_cones.front();
  IntMat va = cone_matrix(na, base);
  if (abs(determinant(va)) != 1) return false;
  IntMat va_inv = unimodular_inverse(va);
  for (const auto& target : nb.max_cones) {
    std::vector<RayIndex> perm = target;
    std::sort(perm.begin(), perm.end());
    do {
      // linear map g with g(v_base[k]) = w_perm[k]: g = va_inv * wb on row vectors
      IntMat wb = cone_matrix(nb, perm);
      if (abs(determinant(wb)) != 1) continue;
      IntMat g = va_inv * wb;
      std::vector<RayIndex> image(na.rays.size());
      bool ok = true;
      for (std::size_t i = 0; i < na.rays.size() && ok; ++i) {
        IntMat row = IntMat::from_rows({na.rays[i]});
        IntVec w = (row * g).row_vec(0);
        auto it = index_b.find(w);
        if (it == index_b.end()) ok = false;
        else image[i] = it->second;
      }
      if (!ok) continue;
      for (const auto& c : na.max_cones) {
        std::vector<RayIndex> mapped;
        for (auto i : c) mapped.push_back(image[i]);
        std::sort(mapped.begin(), mapped.end());
        if (!cones_b.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace toric
