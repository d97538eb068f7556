#pragma once

#include "godeaux/arith.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace godeaux {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int field_order = 1);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, int field_order = 1);
  static Matrix identity(std::size_t n, int field_order = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int field_order() const { return field_order_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int field_order_ = 1;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; pivot on the first nonzero entry in column order.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : M x = 0}, one vector per free column (free entry = 1).
std::vector<Vector> kernel_basis(const Matrix& m);

// Vectors must share one length; throws std::invalid_argument otherwise.
std::size_t span_dim(std::span<const Vector> vectors);
// Coordinates c with sum c_i vectors[i] = v, or nullopt.
std::optional<Vector> in_span(const Vector& v, std::span<const Vector> vectors);

// Sparse vector: (index, value) pairs, indices strictly increasing, values nonzero.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> dense);
Vector to_dense(const SparseVector& v, std::size_t dim, int field_order = 1);

// Incrementally built row-echelon basis of a subspace of K^dim. Rows are kept
// normalised (pivot entry 1) and pivots are unique. When tracking is enabled
// every stored row remembers its combination of the inserted inputs, which
// gives membership certificates and kernel vectors.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim, int field_order = 1, bool track = false);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }

  struct Reduction {
    SparseVector residual;
    SparseVector combination;  // over input indices; empty unless tracking
  };

  // Residual of v after subtracting pivot rows; zero iff v is in the span.
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

  // Inserts v as input number inputs(). Returns true when it enlarged the span.
  // When it did not, the returned relation (if tracking) expresses the
  // dependency: sum relation_i * input_i = 0 with coefficient 1 on v.
  bool insert(const SparseVector& v, SparseVector* relation = nullptr);

  // Coordinates of v over the inserted inputs (tracking required).
  std::optional<SparseVector> certificate(const SparseVector& v) const;

  std::vector<std::size_t> pivots() const;
  // Stored echelon rows in insertion order.
  std::vector<SparseVector> rows() const;

 private:
  struct Row {
    SparseVector entries;
    SparseVector combination;
  };

  std::size_t dim_;
  int field_order_;
  bool track_;
  std::size_t inputs_ = 0;
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;  // -1 when column is not a pivot
};

}  // namespace godeaux
