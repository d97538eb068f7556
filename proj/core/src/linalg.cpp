#include "godeaux/linalg.hpp"

#include <stdexcept>

namespace godeaux {

Matrix::Matrix(std::size_t rows, std::size_t cols, int field_order)
    : rows_(rows), cols_(cols), field_order_(field_order == 2 ? 1 : field_order),
      data_(rows * cols, Scalar(Rational(), field_order)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, int field_order) {
  Matrix m(rows.size(), cols, field_order);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n, int field_order) {
  Matrix m(n, n, field_order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(Rational(1), field_order);
  return m;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(lead_row, c));
    Scalar inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(lead_row, c).is_zero()) m(i, c) -= factor * m(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(Rational(), m.field_order()));
    v[free] = Scalar(Rational(1), m.field_order());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::size_t common_length(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("vector length mismatch");
  return n;
}

int field_of(std::span<const Vector> vectors) {
  for (const auto& v : vectors)
    if (!v.empty()) return v.front().order();
  return 1;
}

}  // namespace

std::size_t span_dim(std::span<const Vector> vectors) {
  std::size_t n = common_length(vectors);
  EchelonBasis basis(n, field_of(vectors));
  for (const auto& v : vectors) basis.insert(to_sparse(v));
  return basis.rank();
}

std::optional<Vector> in_span(const Vector& v, std::span<const Vector> vectors) {
  std::size_t n = common_length(vectors);
  if (!vectors.empty() && v.size() != n) throw std::invalid_argument("vector length mismatch");
  int field = vectors.empty() ? (v.empty() ? 1 : v.front().order()) : field_of(vectors);
  EchelonBasis basis(v.size(), field, true);
  for (const auto& u : vectors) basis.insert(to_sparse(u));
  auto cert = basis.certificate(to_sparse(v));
  if (!cert) return std::nullopt;
  return to_dense(*cert, vectors.size(), field);
}

SparseVector to_sparse(std::span<const Scalar> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim, int field_order) {
  Vector out(dim, Scalar(Rational(), field_order));
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// a += factor * b on sparse vectors.
void axpy(SparseVector& a, const Scalar& factor, const SparseVector& b) {
  if (b.empty() || factor.is_zero()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.cbegin();
  while (ia != a.end() || ib != b.cend()) {
    if (ib == b.cend() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Scalar s = ia->second + factor * ib->second;
      if (!s.is_zero()) out.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  a = std::move(out);
}

}  // namespace

EchelonBasis::EchelonBasis(std::size_t dim, int field_order, bool track)
    : dim_(dim), field_order_(field_order == 2 ? 1 : field_order), track_(track), row_of_pivot_(dim, -1) {}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& v) const {
  // Dense accumulator over the ambient coordinates; rows are sparse.
  std::vector<Scalar> work(dim_, Scalar(Rational(), field_order_));
  for (const auto& [i, x] : v) {
    if (i >= dim_) throw std::invalid_argument("vector index out of range");
    work[i] = x;
  }
  Reduction red;
  for (std::size_t col = 0; col < dim_; ++col) {
    if (work[col].is_zero()) continue;
    auto r = row_of_pivot_[col];
    if (r < 0) continue;
    const Row& row = rows_[static_cast<std::size_t>(r)];
    Scalar factor = work[col];
    for (const auto& [j, x] : row.entries) work[j] -= factor * x;
    if (track_) axpy(red.combination, -factor, row.combination);
  }
  red.residual = to_sparse(work);
  return red;
}

bool EchelonBasis::insert(const SparseVector& v, SparseVector* relation) {
  std::size_t input = inputs_++;
  Reduction red = reduce(v);
  if (track_) axpy(red.combination, Scalar(Rational(1), field_order_), {{input, Scalar(Rational(1), field_order_)}});
  if (red.residual.empty()) {
    // combination now expresses v - (span part) = 0 over inputs
    if (relation) *relation = std::move(red.combination);
    return false;
  }
  Scalar inv = red.residual.front().second.inverse();
  for (auto& [j, x] : red.residual) x *= inv;
  for (auto& [j, x] : red.combination) x *= inv;
  row_of_pivot_[red.residual.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back({std::move(red.residual), std::move(red.combination)});
  return true;
}

std::optional<SparseVector> EchelonBasis::certificate(const SparseVector& v) const {
  if (!track_) throw std::logic_error("certificate requires a tracking echelon basis");
  Reduction red = reduce(v);
  if (!red.residual.empty()) return std::nullopt;
  // v - sum(rows) = 0  =>  v = -combination
  for (auto& [i, x] : red.combination) x = -x;
  return red.combination;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.entries);
  return out;
}

}  // namespace godeaux
