#pragma once

// Exact linear algebra over prime fields and exhaustive enumeration of the
// rational points of Grassmannians, partial flag manifolds and maximal
// isotropic Grassmannians.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "schubert/combinat.hpp"

namespace schubert::ffalg {

using Element = std::uint32_t;

class PrimeField {
public:
  /// Throws invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;  // a != 0
  Element from_int(long long v) const;
  /// Signed representative in (-p/2, p/2], for printing.
  long long to_signed(Element a) const;

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t p_;
};

class FieldMatrix {
public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(PrimeField field, std::size_t n);
  static FieldMatrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows);
  static FieldMatrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> data() const { return data_; }

  FieldMatrix stacked(const FieldMatrix& below) const;
  FieldMatrix top_rows(std::size_t count) const;
  /// Submatrix on the given 0-based columns, in the given order.
  FieldMatrix select_columns(std::span<const int> cols) const;
  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& rhs) const;
  std::vector<Element> apply(std::span<const Element> x) const;  // M x

  std::size_t rank() const;
  Element det() const;
  /// Rows form a basis of {x : M x = 0}.
  FieldMatrix kernel() const;
  /// Reduced row-echelon form with zero rows removed; pivot columns optional.
  FieldMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  bool operator==(const FieldMatrix&) const = default;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// A subspace of F_p^n stored by its reduced row-echelon basis.
class Subspace {
public:
  /// The row space of `spanning` (rows need not be independent).
  explicit Subspace(const FieldMatrix& spanning);

  const FieldMatrix& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Element> v) const;
  /// Dimension of the intersection with another subspace of the same ambient space.
  std::size_t intersection_dim(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const;

private:
  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// E_1 c ... c E_m: the first steps[i] rows of `frame` span E_i.
class FlagPoint {
public:
  FlagPoint(std::vector<int> steps, FieldMatrix frame);

  const std::vector<int>& steps() const { return steps_; }
  const FieldMatrix& frame() const { return frame_; }
  Subspace component(std::size_t i) const;

  bool operator==(const FlagPoint& o) const;

private:
  std::vector<int> steps_;
  FieldMatrix frame_;
};

/// Split symmetric form on F^{2r+1}: <e_i, e_j> = 1 iff i + j = n + 1.
class BilinearForm {
public:
  explicit BilinearForm(int r) : r_(r) {}
  int r() const { return r_; }
  int n() const { return 2 * r_ + 1; }
  Element apply(const PrimeField& f, std::span<const Element> u, std::span<const Element> v) const;
  /// The vector of the functional x -> <v, x>.
  std::vector<Element> dual(std::span<const Element> v) const;
  bool is_isotropic(const FieldMatrix& basis) const;

private:
  int r_;
};

using BasisVisitor = std::function<void(const FieldMatrix&)>;

/// Gaussian binomial [n choose r]_p.
combinat::BigInt grassmannian_cardinality(std::uint32_t p, int r, int n);
combinat::BigInt flag_cardinality(std::uint32_t p, const std::vector<int>& steps, int n);
combinat::BigInt isotropic_cardinality(std::uint32_t p, int r);

/// Schubert cells of G(r, n) relative to F_i = span(e_1..e_i), by decreasing
/// dimension and then lexicographically.
std::vector<combinat::GrassIndex> grassmannian_cells(int r, int n);

/// The p^{|alpha|} points of the cell alpha. Row j of the visited basis has a 1
/// in column alpha_j, zeros in the other alpha columns and free entries in the
/// columns left of alpha_j; free entries run lexicographically.
void enumerate_cell(const PrimeField& field, const combinat::GrassIndex& cell, const BasisVisitor& visit);

void enumerate_grassmannian(const PrimeField& field, int r, int n,
                            const std::function<void(const Subspace&)>& visit);

/// Flags whose top component lies in `top_cell`; the visited frame's first
/// steps[i] rows span E_i.
void enumerate_flags_in_cell(const PrimeField& field, const std::vector<int>& steps, int n,
                             const combinat::GrassIndex& top_cell, const BasisVisitor& visit);
void enumerate_flags(const PrimeField& field, const std::vector<int>& steps, int n,
                     const std::function<void(const FlagPoint&)>& visit);

/// Maximal isotropic r-planes of F_p^{2r+1}; the visited matrix is an r x (2r+1)
/// basis (not necessarily reduced). Requires p odd.
void enumerate_isotropic_bases(const PrimeField& field, int r, const BasisVisitor& visit);
void enumerate_isotropic(const PrimeField& field, int r, const std::function<void(const Subspace&)>& visit);

/// dim(H n F_i) for i = 0..n.
std::vector<int> flag_intersection_dims(const FieldMatrix& basis);
/// The Schubert cell containing the row space of `basis`.
combinat::GrassIndex grassmannian_cell_of(const FieldMatrix& basis);

bool schubert_membership(const Subspace& point, const combinat::GrassIndex& index);
bool schubert_membership(const FlagPoint& point, const combinat::FlagIndex& index);
bool schubert_membership(const Subspace& point, const combinat::StrictPartition& index);
/// Dispatching form; throws on a quantum index or a kind/point mismatch.
bool schubert_membership(const Subspace& point, const combinat::SchubertIndex& index);

}  // namespace schubert::ffalg
