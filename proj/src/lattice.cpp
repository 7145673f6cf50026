#include "toric/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntVec make_int_vec(std::initializer_list<long> values) {
  IntVec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& num, const Integer& den) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMat: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return {};
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("IntMat: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMat::row_vec(std::size_t r) const {
  auto s = row(r);
  return IntVec(s.begin(), s.end());
}

IntVec IntMat::col_vec(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMat::operator*(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMat*vec: dimension mismatch");
  IntVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMat*IntMat: dimension mismatch");
  IntMat p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << to_string(m.row(r));
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMat& a) {
  IntMat m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Integer f = m(i, c), g = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) * g - m(r, j) * f;
      Integer cont = gcd_of(m.row(i));
      if (cont > 1)
        for (auto& x : m.row(i)) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
    }
    ++r;
  }
  return r;
}

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- x*row_b - y*row_a  (applied to both h and u)
void combine_rows(IntMat& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ra = m(a, c), rb = m(b, c);
    m(a, c) = s * ra + t * rb;
    m(b, c) = x * rb - y * ra;
  }
}

void axpy_row(IntMat& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= k * m(src, c);
}

void negate_row(IntMat& m, std::size_t r) {
  for (auto& x : m.row(r)) x = -x;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& a) {
  if (a.empty()) throw std::invalid_argument("hermite_normal_form: empty matrix");
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  std::size_t pr = 0;
  for (std::size_t c = 0; c < h.cols() && pr < h.rows(); ++c) {
    for (std::size_t r = pr + 1; r < h.rows(); ++r) {
      if (h(r, c) == 0) continue;
      if (h(pr, c) == 0) {
        h.swap_rows(pr, r);
        u.swap_rows(pr, r);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(pr, c).get_mpz_t(),
                 h(r, c).get_mpz_t());
      Integer p_g = h(pr, c) / g;
      Integer q_g = h(r, c) / g;
      combine_rows(h, pr, r, s, t, p_g, q_g);
      combine_rows(u, pr, r, s, t, p_g, q_g);
    }
    if (h(pr, c) == 0) continue;
    if (h(pr, c) < 0) {
      negate_row(h, pr);
      negate_row(u, pr);
    }
    const Integer pivot = h(pr, c);
    for (std::size_t r = 0; r < pr; ++r) {
      Integer k = floor_div(h(r, c), pivot);
      if (k == 0) continue;
      axpy_row(h, r, pr, k);
      axpy_row(u, r, pr, k);
    }
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

bool is_hermite_form(const IntMat& h) {
  std::ptrdiff_t last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (static_cast<std::ptrdiff_t>(c) <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    last_pivot = static_cast<std::ptrdiff_t>(c);
  }
  return true;
}

std::optional<IntVec> solve_integer(const IntMat& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: rhs length mismatch");
  // a^T = u^{-1} h, so a x = b becomes h^T y = b with x = u^T y.
  auto [h, u] = hermite_normal_form(a.transpose());
  const std::size_t k = h.rows();
  IntVec y(k, Integer(0));
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h(r, p) == 0) ++p;
    if (p == h.cols()) break;
    Integer rhs = b[p];
    for (std::size_t q = 0; q < r; ++q) rhs -= h(q, p) * y[q];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h(r, p).get_mpz_t())) return std::nullopt;
    y[r] = rhs / h(r, p);
  }
  IntVec check = h.transpose() * y;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (check[i] != b[i]) return std::nullopt;
  return u.transpose() * y;
}

IntMat unimodular_inverse(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("unimodular_inverse: not square");
  auto [h, u] = hermite_normal_form(a);
  // For unimodular a the Hermite form is the identity, so u is the inverse.
  if (h != IntMat::identity(a.rows()))
    throw std::domain_error("unimodular_inverse: matrix is not unimodular");
  return u;
}

}  // namespace toric
