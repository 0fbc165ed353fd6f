#include "socle/linalg.hpp"

#include "field_tables.hpp"

#include <algorithm>
#include <utility>

namespace socle {

bool is_zero(std::span<const FieldElement> v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

void axpy(std::span<FieldElement> y, const FieldElement& c, std::span<const FieldElement> x,
          std::size_t start) {
  if (c.is_zero()) return;
  for (std::size_t i = start; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Matrix Matrix::identity(const FieldSpec& k, std::size_t n) {
  Matrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& k, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(k, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const FieldElement> v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(*k_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix out(*k_, rows_, b.cols_);
  if (const auto* t = detail::FieldTables::get(*k_)) {
    const auto ea = t->encode(data_);
    const auto eb = t->encode(b.data_);
    std::vector<std::uint8_t> acc(b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t l = 0; l < cols_; ++l) {
        const auto c = ea[i * cols_ + l];
        if (!c) continue;
        const auto* mrow = t->mul_row(c);
        const auto* brow = &eb[l * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (brow[j]) acc[j] = t->add_row(acc[j])[mrow[brow[j]]];
      }
      t->decode(acc.data(), out.row(i));
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < cols_; ++l) axpy(dst, (*this)(i, l), b.row(l));
  }
  return out;
}

Vector Matrix::operator*(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes differ");
  Vector out = zero_vector(*k_, rows_);
  if (const auto* t = detail::FieldTables::get(*k_)) {
    const auto ev = t->encode(v);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols_; ++j)
      if (ev[j]) nz.push_back(j);
    std::vector<std::uint8_t> row_codes(cols_), acc(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      t->encode(row(i), row_codes.data());
      std::uint8_t a = 0;
      for (auto j : nz)
        if (row_codes[j]) a = t->add_row(a)[t->mul_row(row_codes[j])[ev[j]]];
      acc[i] = a;
    }
    t->decode(acc.data(), out);
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElement acc = k_->zero();
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !r[j].is_zero()) acc += r[j] * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

// In-place forward elimination to reduced row-echelon form. Returns the pivot
// columns; `sign_flips` counts row swaps and `scale` accumulates the product of
// the pivots divided out, so det = (-1)^flips * scale for square input.
std::vector<std::size_t> rref_tables(const detail::FieldTables& t, Matrix& a, int* sign_flips,
                                     FieldElement* scale) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::uint8_t> m(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) t.encode(a.row(i), &m[i * cols]);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(&m[sel * cols], &m[sel * cols] + cols, &m[r * cols]);
      if (sign_flips) ++*sign_flips;
    }
    std::uint8_t* prow = &m[r * cols];
    if (scale) *scale *= t.element(prow[c]);
    const auto* inv_row = t.mul_row(t.inv(prow[c]));
    for (std::size_t j = c; j < cols; ++j) prow[j] = inv_row[prow[j]];
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint8_t* row = &m[i * cols];
      if (i == r || row[c] == 0) continue;
      const auto* f = t.mul_row(t.neg(row[c]));
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = t.add_row(row[j])[f[prow[j]]];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < rows; ++i) t.decode(&m[i * cols], a.row(i));
  return pivots;
}

std::vector<std::size_t> rref(Matrix& a, int* sign_flips = nullptr, FieldElement* scale = nullptr) {
  if (const auto* t = detail::FieldTables::get(a.field())) return rref_tables(*t, a, sign_flips, scale);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
      if (sign_flips) ++*sign_flips;
    }
    const FieldElement piv = a(r, c);
    if (scale) *scale *= piv;
    const FieldElement inv = piv.inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      axpy(a.row(i), -a(i, c), a.row(r), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FieldElement determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const auto& k = a.field();
  int flips = 0;
  FieldElement scale = k.one();
  auto piv = rref(a, &flips, &scale);
  if (piv.size() < a.rows()) return k.zero();
  return (flips % 2 == 0) ? scale : -scale;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const auto& k = a.field();
  Matrix aug(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = k.one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix inv(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, std::span<const FieldElement> b) {
  const auto& k = a.field();
  Matrix aug(k, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(k, a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const auto& k = a.field();
  Matrix red = a;
  auto piv = rref(red);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(k, a.cols());
    v[free] = k.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i], pivots_[i]);
  }
  return v;
}

bool EchelonBasis::contains(std::span<const FieldElement> v) const {
  return is_zero(reduce(Vector(v.begin(), v.end())));
}

std::optional<Vector> EchelonBasis::coordinates(std::span<const FieldElement> v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < v.size() && v[piv].is_zero()) ++piv;
  if (piv == v.size()) return false;
  const FieldElement inv = v[piv].inverse();
  for (std::size_t j = piv; j < v.size(); ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const FieldElement c = row[piv];
    if (!c.is_zero()) axpy(row, -c, v, piv);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

}  // namespace socle
