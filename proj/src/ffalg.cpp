#include "schubert/ffalg.hpp"

#include <algorithm>
#include <string>

#include "schubert/error.hpp"

namespace schubert::ffalg {

using combinat::BigInt;
using combinat::GrassIndex;

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p >= 2 && p < (1u << 31), "field modulus must be a prime below 2^31, got " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d)
    require(p % d != 0, "field modulus must be prime, got " + std::to_string(p));
}

Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1 % p_;
  Element base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element PrimeField::inv(Element a) const {
  require(a % p_ != 0, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Element PrimeField::from_int(long long v) const {
  const long long p = p_;
  return static_cast<Element>(((v % p) + p) % p);
}

long long PrimeField::to_signed(Element a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(field, v);
}

FieldMatrix FieldMatrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

FieldMatrix FieldMatrix::stacked(const FieldMatrix& below) const {
  require(cols_ == below.cols_ && field_ == below.field_, "cannot stack matrices of different shape or field");
  FieldMatrix m(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

FieldMatrix FieldMatrix::top_rows(std::size_t count) const {
  require(count <= rows_, "top_rows beyond matrix height");
  FieldMatrix m(field_, count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), m.data_.begin());
  return m;
}

FieldMatrix FieldMatrix::select_columns(std::span<const int> cols) const {
  FieldMatrix m(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, static_cast<std::size_t>(cols[j]));
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  require(cols_ == rhs.rows_ && field_ == rhs.field_, "matrix product shape mismatch");
  FieldMatrix m(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) = field_.add(m(i, j), field_.mul(a, rhs(k, j)));
    }
  return m;
}

std::vector<Element> FieldMatrix::apply(std::span<const Element> x) const {
  require(x.size() == cols_, "vector length does not match matrix width");
  std::vector<Element> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
  return y;
}

namespace {

// Gauss-Jordan on m in place; returns pivot columns. With `reduce` false only
// forward elimination is done. `sign_flips` counts row swaps.
std::vector<std::size_t> eliminate(FieldMatrix& m, bool reduce, std::size_t* sign_flips = nullptr) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
      if (sign_flips) ++*sign_flips;
    }
    if (reduce) {
      const Element scale = f.inv(m(row, col));
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    }
    const Element pivot_inv = reduce ? 1 : f.inv(m(row, col));
    for (std::size_t i = reduce ? 0 : row + 1; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Element factor = f.mul(m(i, col), pivot_inv);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t FieldMatrix::rank() const {
  FieldMatrix copy = *this;
  return eliminate(copy, false).size();
}

Element FieldMatrix::det() const {
  require(rows_ == cols_, "determinant of a non-square " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                              " matrix");
  FieldMatrix copy = *this;
  std::size_t flips = 0;
  if (eliminate(copy, false, &flips).size() < rows_) return 0;
  Element d = 1;
  for (std::size_t i = 0; i < rows_; ++i) d = field_.mul(d, copy(i, i));
  return flips % 2 ? field_.neg(d) : d;
}

FieldMatrix FieldMatrix::rref(std::vector<std::size_t>* pivots) const {
  FieldMatrix copy = *this;
  auto piv = eliminate(copy, true);
  FieldMatrix out = copy.top_rows(piv.size());
  if (pivots) *pivots = std::move(piv);
  return out;
}

FieldMatrix FieldMatrix::kernel() const {
  std::vector<std::size_t> pivots;
  const FieldMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  FieldMatrix k(field_, cols_ - pivots.size(), cols_);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(out, pivots[i]) = field_.neg(r(i, free));
    ++out;
  }
  return k;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const FieldMatrix& spanning) : basis_(spanning.field(), 0, spanning.cols()) {
  basis_ = spanning.rref(&pivots_);
}

bool Subspace::contains(std::span<const Element> v) const {
  require(v.size() == ambient(), "vector length does not match ambient dimension");
  std::vector<Element> w(v.begin(), v.end());
  const auto& f = field();
  for (std::size_t i = 0; i < dim(); ++i) {
    const Element c = w[pivots_[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < ambient(); ++j) w[j] = f.sub(w[j], f.mul(c, basis_(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Element e) { return e == 0; });
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  require(ambient() == other.ambient(), "subspaces of different ambient spaces");
  return dim() + other.dim() - basis_.stacked(other.basis_).rank();
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return std::lexicographical_compare(basis_.data().begin(), basis_.data().end(), o.basis_.data().begin(),
                                      o.basis_.data().end());
}

FlagPoint::FlagPoint(std::vector<int> steps, FieldMatrix frame) : steps_(std::move(steps)), frame_(std::move(frame)) {
  require(!steps_.empty() && frame_.rows() == static_cast<std::size_t>(steps_.back()) &&
              frame_.rank() == frame_.rows(),
          "flag frame must have full rank r_m");
}

Subspace FlagPoint::component(std::size_t i) const {
  return Subspace(frame_.top_rows(static_cast<std::size_t>(steps_.at(i))));
}

bool FlagPoint::operator==(const FlagPoint& o) const {
  if (steps_ != o.steps_) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i)
    if (!(component(i) == o.component(i))) return false;
  return true;
}

Element BilinearForm::apply(const PrimeField& f, std::span<const Element> u, std::span<const Element> v) const {
  const std::size_t dim = static_cast<std::size_t>(n());
  require(u.size() == dim && v.size() == dim, "vector length does not match the form");
  Element s = 0;
  for (std::size_t i = 0; i < dim; ++i) s = f.add(s, f.mul(u[i], v[dim - 1 - i]));
  return s;
}

std::vector<Element> BilinearForm::dual(std::span<const Element> v) const {
  std::vector<Element> d(v.rbegin(), v.rend());
  return d;
}

bool BilinearForm::is_isotropic(const FieldMatrix& basis) const {
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = i; j < basis.rows(); ++j)
      if (apply(basis.field(), basis.row(i), basis.row(j)) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

BigInt grassmannian_cardinality(std::uint32_t p, int r, int n) {
  BigInt num = 1, den = 1, pp = p;
  for (int i = 0; i < r; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

BigInt flag_cardinality(std::uint32_t p, const std::vector<int>& steps, int n) {
  BigInt out = 1;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int above = i + 1 < steps.size() ? steps[i + 1] : n;
    out *= grassmannian_cardinality(p, steps[i], above);
  }
  return out;
}

BigInt isotropic_cardinality(std::uint32_t p, int r) {
  BigInt out = 1, pp = p;
  for (int i = 1; i <= r; ++i) {
    BigInt a;
    mpz_pow_ui(a.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(i));
    out *= a + 1;
  }
  return out;
}

std::vector<GrassIndex> grassmannian_cells(int r, int n) {
  combinat::BruhatPoset poset(combinat::SpaceDescriptor::grassmannian(r, n));
  std::vector<GrassIndex> cells;
  for (std::size_t id = 0; id < poset.size(); ++id) cells.push_back(std::get<GrassIndex>(poset.element(id)));
  std::stable_sort(cells.begin(), cells.end(), [](const GrassIndex& a, const GrassIndex& b) {
    return a.rank() > b.rank();
  });
  return cells;
}

void enumerate_cell(const PrimeField& field, const GrassIndex& cell, const BasisVisitor& visit) {
  const std::size_t r = cell.alpha.size();
  const std::size_t n = static_cast<std::size_t>(cell.n);
  FieldMatrix m(field, r, n);
  std::vector<bool> in_alpha(n + 1, false);
  for (int a : cell.alpha) in_alpha[static_cast<std::size_t>(a)] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t j = 0; j < r; ++j) {
    m(j, static_cast<std::size_t>(cell.alpha[j] - 1)) = 1;
    for (int c = 1; c < cell.alpha[j]; ++c)
      if (!in_alpha[static_cast<std::size_t>(c)]) free.emplace_back(j, static_cast<std::size_t>(c - 1));
  }
  const Element p = field.modulus();
  while (true) {
    visit(m);
    // odometer, last free entry fastest
    std::size_t k = free.size();
    while (k > 0) {
      auto [i, j] = free[k - 1];
      if (++m(i, j) < p) break;
      m(i, j) = 0;
      --k;
    }
    if (k == 0) return;
  }
}

namespace {

void check_guard(const BigInt& count, const std::string& what) {
  if (count > kCapacityGuard)
    fail(ErrorCode::capacity, what + " has " + count.get_str() + " points, above the guard of 10^7");
}

// Frames C (k x k, invertible) whose first steps[i] rows span the i-th member
// of a flag in F^k.
void inner_frames(const PrimeField& field, std::span<const int> steps, std::size_t k, const BasisVisitor& visit) {
  if (steps.empty()) {
    visit(FieldMatrix::identity(field, k));
    return;
  }
  const int s = steps.back();
  for (const auto& cell : grassmannian_cells(s, static_cast<int>(k))) {
    std::vector<bool> in_alpha(k, false);
    for (int a : cell.alpha) in_alpha[static_cast<std::size_t>(a - 1)] = true;
    enumerate_cell(field, cell, [&](const FieldMatrix& sub) {
      inner_frames(field, steps.first(steps.size() - 1), static_cast<std::size_t>(s), [&](const FieldMatrix& c) {
        FieldMatrix frame(field, k, k);
        const FieldMatrix top = c * sub;
        for (std::size_t i = 0; i < top.rows(); ++i)
          for (std::size_t j = 0; j < k; ++j) frame(i, j) = top(i, j);
        std::size_t row = top.rows();
        for (std::size_t j = 0; j < k; ++j)
          if (!in_alpha[j]) frame(row++, j) = 1;
        visit(frame);
      });
    });
  }
}

void isotropic_rec(const PrimeField& field, int r, const BasisVisitor& visit) {
  const std::size_t n = static_cast<std::size_t>(2 * r + 1);
  if (r == 0) {
    visit(FieldMatrix(field, 0, 1));
    return;
  }
  const BilinearForm inner(r - 1);
  const Element half = field.inv(2);
  isotropic_rec(field, r - 1, [&](const FieldMatrix& sub) {
    // H contains e_1: H = e_1 + H'' with H'' isotropic in span(e_2..e_{n-1})
    FieldMatrix h(field, static_cast<std::size_t>(r), n);
    h(0, 0) = 1;
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j) h(i + 1, j + 1) = sub(i, j);
    visit(h);

    // e_1 not in H: H = {x - <y,x> e_1 : x in H''} + <e_n + y - <y,y>/2 e_1>,
    // y ranging over a complement of H'' in span(e_2..e_{n-1})
    std::vector<std::size_t> pivots;
    sub.rref(&pivots);
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < sub.cols(); ++j)
      if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) complement.push_back(j);
    std::vector<Element> y(sub.cols(), 0);
    std::vector<Element> t(complement.size(), 0);
    FieldMatrix g(field, static_cast<std::size_t>(r), n);
    while (true) {
      for (std::size_t c = 0; c < complement.size(); ++c) y[complement[c]] = t[c];
      for (std::size_t i = 0; i < sub.rows(); ++i) {
        g(i, 0) = field.neg(inner.apply(field, y, sub.row(i)));
        for (std::size_t j = 0; j < sub.cols(); ++j) g(i, j + 1) = sub(i, j);
      }
      const std::size_t last = sub.rows();
      g(last, 0) = field.neg(field.mul(inner.apply(field, y, y), half));
      for (std::size_t j = 0; j < sub.cols(); ++j) g(last, j + 1) = y[j];
      g(last, n - 1) = 1;
      visit(g);
      std::size_t k = t.size();
      while (k > 0) {
        if (++t[k - 1] < field.modulus()) break;
        t[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  });
}

}  // namespace

void enumerate_grassmannian(const PrimeField& field, int r, int n, const std::function<void(const Subspace&)>& visit) {
  require(r >= 1 && r < n, "grassmannian needs 0 < r < n");
  check_guard(grassmannian_cardinality(field.modulus(), r, n), "G(" + std::to_string(r) + "," + std::to_string(n) + ")");
  for (const auto& cell : grassmannian_cells(r, n))
    enumerate_cell(field, cell, [&](const FieldMatrix& m) { visit(Subspace(m)); });
}

void enumerate_flags_in_cell(const PrimeField& field, const std::vector<int>& steps, int n, const GrassIndex& top_cell,
                             const BasisVisitor& visit) {
  require(!steps.empty() && top_cell.n == n && static_cast<int>(top_cell.alpha.size()) == steps.back(),
          "top cell does not match the flag type");
  const std::span<const int> inner(steps.data(), steps.size() - 1);
  enumerate_cell(field, top_cell, [&](const FieldMatrix& top) {
    inner_frames(field, inner, top.rows(), [&](const FieldMatrix& c) { visit(c * top); });
  });
}

void enumerate_flags(const PrimeField& field, const std::vector<int>& steps, int n,
                     const std::function<void(const FlagPoint&)>& visit) {
  const auto space = combinat::SpaceDescriptor::flag(steps, n);
  check_guard(flag_cardinality(field.modulus(), steps, n), space.name());
  for (const auto& cell : grassmannian_cells(steps.back(), n))
    enumerate_flags_in_cell(field, steps, n, cell, [&](const FieldMatrix& frame) { visit(FlagPoint(steps, frame)); });
}

void enumerate_isotropic_bases(const PrimeField& field, int r, const BasisVisitor& visit) {
  require(r >= 1, "orthogonal grassmannian needs r >= 1");
  if (field.modulus() == 2)
    fail(ErrorCode::characteristic, "the orthogonal grassmannian needs a field of characteristic other than 2");
  check_guard(isotropic_cardinality(field.modulus(), r), "OG(" + std::to_string(r) + ")");
  isotropic_rec(field, r, visit);
}

void enumerate_isotropic(const PrimeField& field, int r, const std::function<void(const Subspace&)>& visit) {
  enumerate_isotropic_bases(field, r, [&](const FieldMatrix& m) { visit(Subspace(m)); });
}

std::vector<int> flag_intersection_dims(const FieldMatrix& basis) {
  const std::size_t n = basis.cols();
  const int r = static_cast<int>(basis.rank());
  std::vector<int> dims(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<int> tail;
    for (std::size_t j = i; j < n; ++j) tail.push_back(static_cast<int>(j));
    dims[i] = r - static_cast<int>(basis.select_columns(tail).rank());
  }
  return dims;
}

GrassIndex grassmannian_cell_of(const FieldMatrix& basis) {
  const auto dims = flag_intersection_dims(basis);
  GrassIndex g{static_cast<int>(basis.cols()), {}};
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] > dims[i - 1]) g.alpha.push_back(static_cast<int>(i));
  return g;
}

bool schubert_membership(const Subspace& point, const GrassIndex& index) {
  require(static_cast<int>(point.ambient()) == index.n && point.dim() == index.alpha.size(),
          "point and Schubert index belong to different grassmannians");
  const auto dims = flag_intersection_dims(point.basis());
  for (std::size_t j = 0; j < index.alpha.size(); ++j)
    if (dims[static_cast<std::size_t>(index.alpha[j])] < static_cast<int>(j + 1)) return false;
  return true;
}

bool schubert_membership(const FlagPoint& point, const combinat::FlagIndex& index) {
  require(point.steps() == index.steps && static_cast<int>(point.frame().cols()) == index.n,
          "flag point and Schubert index belong to different flag manifolds");
  for (std::size_t i = 0; i < index.steps.size(); ++i)
    if (!schubert_membership(point.component(i), index.projection(i))) return false;
  return true;
}

bool schubert_membership(const Subspace& point, const combinat::StrictPartition& index) {
  require(static_cast<int>(point.ambient()) == 2 * index.r + 1 && static_cast<int>(point.dim()) == index.r,
          "point and Schubert index belong to different orthogonal grassmannians");
  return schubert_membership(point, index.grassmannian_index());
}

bool schubert_membership(const Subspace& point, const combinat::SchubertIndex& index) {
  if (const auto* g = std::get_if<GrassIndex>(&index)) return schubert_membership(point, *g);
  if (const auto* s = std::get_if<combinat::StrictPartition>(&index)) return schubert_membership(point, *s);
  fail(ErrorCode::invalid_argument, "membership of a subspace needs a grassmannian or orthogonal index");
}

}  // namespace schubert::ffalg
