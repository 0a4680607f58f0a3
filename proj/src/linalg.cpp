#include "blp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace blp {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& indices) const {
  RatMatrix s(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) s(i, j) = (*this)(i, indices[j]);
  }
  return s;
}

RatVector RatMatrix::row(std::size_t i) const {
  RatVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec size mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatVector vec_mat(const RatVector& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat size mismatch");
  RatVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rat acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += v[i] * m(i, j);
    out[j] = acc;
  }
  return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rat prev = 1;
  bool flip = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      flip = !flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return flip ? Rat(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

std::optional<RatMatrix> solve_square_multi(const RatMatrix& m, const RatMatrix& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_square: not square");
  if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_square: rhs mismatch");
  const std::size_t n = m.rows();
  const std::size_t w = rhs.cols();
  RatMatrix a = m;
  RatMatrix x = rhs;
  // Forward elimination with exact pivoting, then back substitution.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      for (std::size_t j = 0; j < w; ++j) std::swap(x(k, j), x(p, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < w; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t ki = n; ki-- > 0;) {
    for (std::size_t j = 0; j < w; ++j) {
      Rat acc = x(ki, j);
      for (std::size_t c = ki + 1; c < n; ++c) acc -= a(ki, c) * x(c, j);
      x(ki, j) = acc / a(ki, ki);
    }
  }
  return x;
}

std::optional<RatVector> solve_square(const RatMatrix& m, const RatVector& b) {
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto x = solve_square_multi(m, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

Rat max_abs(const RatMatrix& m) {
  Rat best = 0;
  for (const Rat& e : m.entries()) {
    Rat a = abs(e);
    if (a > best) best = a;
  }
  return best;
}

Rat max_abs(const RatVector& v) {
  Rat best = 0;
  for (const Rat& e : v) {
    Rat a = abs(e);
    if (a > best) best = a;
  }
  return best;
}

Rat vertex_bound(std::size_t m, const Rat& max_b, const Rat& max_A) {
  if (m == 0) return max_b;
  return Rat(factorial(static_cast<unsigned>(m))) * max_b *
         rat_pow(max_A, static_cast<unsigned>(m - 1));
}

}  // namespace blp
