#include "schubert/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include "schubert/error.hpp"

namespace schubert::geometry {

using combinat::GrassIndex;

namespace {

constexpr int kRandomTrials = 1000;

// Determinant of the square submatrix on `cols`, without heap allocation for
// the sizes that occur in practice.
Element minor(const FieldMatrix& m, std::span<const int> cols) {
  const std::size_t r = m.rows();
  const auto& f = m.field();
  if (r == 0) return 1;
  if (r == 1) return m(0, static_cast<std::size_t>(cols[0] - 1));
  if (r == 2) {
    const auto c0 = static_cast<std::size_t>(cols[0] - 1), c1 = static_cast<std::size_t>(cols[1] - 1);
    return f.sub(f.mul(m(0, c0), m(1, c1)), f.mul(m(0, c1), m(1, c0)));
  }
  if (r > 8) return m.select_columns(std::vector<int>(cols.begin(), cols.end())).det();
  std::array<Element, 64> a{};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i * r + j] = m(i, static_cast<std::size_t>(cols[j] - 1));
  Element det = 1;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t sel = c;
    while (sel < r && a[sel * r + c] == 0) ++sel;
    if (sel == r) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < r; ++j) std::swap(a[sel * r + j], a[c * r + j]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * r + c]);
    const Element inv = f.inv(a[c * r + c]);
    for (std::size_t i = c + 1; i < r; ++i) {
      if (!a[i * r + c]) continue;
      const Element factor = f.mul(a[i * r + c], inv);
      for (std::size_t j = c; j < r; ++j) a[i * r + j] = f.sub(a[i * r + j], f.mul(factor, a[c * r + j]));
    }
  }
  return det;
}

std::optional<Subspace> random_general(const PrimeField& field, std::size_t rows, std::size_t n, std::mt19937_64& rng) {
  FieldMatrix m(field, rows, n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Element>(rng() % field.modulus());
  if (m.rank() < rows) return std::nullopt;
  Subspace s(m);
  if (!is_general(s)) return std::nullopt;
  return s;
}

FieldMatrix random_isotropic(const PrimeField& field, int r, std::mt19937_64& rng) {
  const std::size_t n = static_cast<std::size_t>(2 * r + 1);
  if (r == 0) return FieldMatrix(field, 0, 1);
  const FieldMatrix sub = random_isotropic(field, r - 1, rng);
  const ffalg::BilinearForm inner(r - 1);
  std::vector<Element> y(sub.cols(), 0);
  for (auto& e : y) e = static_cast<Element>(rng() % field.modulus());
  FieldMatrix g(field, static_cast<std::size_t>(r), n);
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    g(i, 0) = field.neg(inner.apply(field, y, sub.row(i)));
    for (std::size_t j = 0; j < sub.cols(); ++j) g(i, j + 1) = sub(i, j);
  }
  const std::size_t last = sub.rows();
  g(last, 0) = field.neg(field.mul(inner.apply(field, y, y), field.inv(2)));
  for (std::size_t j = 0; j < sub.cols(); ++j) g(last, j + 1) = y[j];
  g(last, n - 1) = 1;
  return g;
}

[[noreturn]] void no_general(const PrimeField& field, const std::string& what) {
  fail(ErrorCode::no_general_subspace, "no general " + what + " was found over F_" +
                                           std::to_string(field.modulus()) + "; try a larger prime");
}

}  // namespace

const std::vector<std::vector<int>>& plucker_indices(int r, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({r, n});
  if (inserted) {
    for (std::size_t id = 0;; ++id) {
      // lexicographic r-subsets of [1, n]
      if (id == 0) {
        std::vector<int> c(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i + 1;
        it->second.push_back(c);
        continue;
      }
      std::vector<int> c = it->second.back();
      int i = r - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      it->second.push_back(std::move(c));
    }
  }
  return it->second;
}

Element PluckerVector::at(const GrassIndex& index) const {
  require(index.n == n && static_cast<int>(index.alpha.size()) == r, "Plücker index of the wrong shape");
  const auto& idx = plucker_indices(r, n);
  auto it = std::lower_bound(idx.begin(), idx.end(), index.alpha);
  require(it != idx.end() && *it == index.alpha, "not an r-subset of [n]");
  return coords[static_cast<std::size_t>(it - idx.begin())];
}

bool PluckerVector::all_nonzero() const {
  return std::all_of(coords.begin(), coords.end(), [](Element e) { return e != 0; });
}

PluckerVector plucker_coordinates(const FieldMatrix& basis) {
  PluckerVector p{static_cast<int>(basis.rows()), static_cast<int>(basis.cols()), {}};
  const auto& idx = plucker_indices(p.r, p.n);
  p.coords.reserve(idx.size());
  for (const auto& cols : idx) p.coords.push_back(minor(basis, cols));
  return p;
}

PluckerVector plucker_coordinates(const Subspace& s) { return plucker_coordinates(s.basis()); }

std::vector<Element> laplace_coefficients(const Subspace& k) {
  const int n = static_cast<int>(k.ambient());
  const int r = n - static_cast<int>(k.dim());
  require(r >= 1 && r < n, "condition subspace must have dimension strictly between 0 and n");
  const auto& f = k.field();
  // rows of H sit at positions n-r+1..n of the stacked matrix
  const int row_sum = r * (2 * n - r + 1) / 2;
  std::vector<Element> out;
  std::vector<int> complement;
  for (const auto& beta : plucker_indices(r, n)) {
    complement.clear();
    int col_sum = 0;
    for (int c : beta) col_sum += c;
    for (int c = 1, b = 0; c <= n; ++c) {
      if (b < r && beta[static_cast<std::size_t>(b)] == c)
        ++b;
      else
        complement.push_back(c);
    }
    const Element m = minor(k.basis(), complement);
    out.push_back((row_sum + col_sum) % 2 ? f.neg(m) : m);
  }
  return out;
}

TorusWeights::TorusWeights(std::vector<int> characters) : characters_(std::move(characters)) {
  require(!characters_.empty(), "torus weights must be nonempty");
  for (std::size_t i = 1; i < characters_.size(); ++i)
    require(characters_[i - 1] < characters_[i], "torus characters must be strictly increasing");
}

TorusWeights TorusWeights::standard(int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = j + 1;
  return TorusWeights(std::move(c));
}

long long TorusWeights::weight(const GrassIndex& alpha) const {
  require(alpha.n == size(), "weight vector length does not match the ambient dimension");
  long long s = 0;
  for (int a : alpha.alpha) s += characters_[static_cast<std::size_t>(a - 1)];
  return s;
}

bool TorusWeights::preserves_split_form() const {
  const std::size_t n = characters_.size();
  for (std::size_t j = 0; j < n; ++j)
    if (characters_[j] + characters_[n - 1 - j] != characters_[0] + characters_[n - 1]) return false;
  return true;
}

Subspace torus_act(Element s, const Subspace& k, const TorusWeights& weights) {
  const auto& f = k.field();
  require(s % f.modulus() != 0, "torus parameter must be a unit");
  require(weights.size() == static_cast<int>(k.ambient()), "weight vector length does not match the ambient dimension");
  FieldMatrix m = k.basis();
  const Element s_inv = f.inv(s);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const int e = weights.characters()[j];
    const Element scale = e >= 0 ? f.pow(s, static_cast<std::uint64_t>(e)) : f.pow(s_inv, static_cast<std::uint64_t>(-e));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = f.mul(m(i, j), scale);
  }
  return Subspace(m);
}

bool incidence(const Subspace& h, const Subspace& k) {
  require(h.ambient() == k.ambient() && h.dim() + k.dim() == h.ambient(),
          "incidence needs dim H + dim K = n, got " + std::to_string(h.dim()) + " + " + std::to_string(k.dim()) +
              " in dimension " + std::to_string(h.ambient()));
  return k.basis().stacked(h.basis()).det() == 0;
}

bool is_general(const Subspace& s) { return plucker_coordinates(s).all_nonzero(); }

bool is_general_isotropic(const Subspace& k) {
  const std::size_t n = k.ambient(), r = k.dim();
  require(n == 2 * r + 1, "isotropic genericity needs dim K = r in F^{2r+1}");
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << r); ++choice) {
    FieldMatrix fixed(k.field(), r, n);
    for (std::size_t j = 0; j < r; ++j) fixed(j, (choice >> j) & 1 ? n - 1 - j : j) = 1;
    if (k.basis().stacked(fixed).rank() < 2 * r) return false;
  }
  return true;
}

Subspace sample_general_subspace(const PrimeField& field, int r, int n, std::uint64_t seed) {
  require(r >= 1 && r < n, "general subspace needs 0 < r < n");
  const auto rows = static_cast<std::size_t>(n - r);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < kRandomTrials; ++trial)
    if (auto s = random_general(field, rows, static_cast<std::size_t>(n), rng)) return *s;
  if (ffalg::grassmannian_cardinality(field.modulus(), n - r, n) > kCapacityGuard)
    no_general(field, std::to_string(n - r) + "-plane (all Plücker coordinates nonzero)");
  std::optional<Subspace> found;
  ffalg::enumerate_grassmannian(field, n - r, n, [&](const Subspace& s) {
    if (!found && is_general(s)) found = s;
  });
  if (!found) no_general(field, std::to_string(n - r) + "-plane in F^" + std::to_string(n) + " (all Plücker coordinates nonzero)");
  return *found;
}

Subspace sample_general_isotropic(const PrimeField& field, int r, std::uint64_t seed) {
  require(r >= 1, "orthogonal grassmannian needs r >= 1");
  if (field.modulus() == 2)
    fail(ErrorCode::characteristic, "the orthogonal grassmannian needs a field of characteristic other than 2");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    Subspace s(random_isotropic(field, r, rng));
    if (is_general_isotropic(s)) return s;
  }
  if (ffalg::isotropic_cardinality(field.modulus(), r) > kCapacityGuard) no_general(field, "isotropic plane (transverse to every fixed isotropic coordinate plane)");
  std::optional<Subspace> found;
  ffalg::enumerate_isotropic(field, r, [&](const Subspace& s) {
    if (!found && is_general_isotropic(s)) found = s;
  });
  if (!found) no_general(field, "isotropic " + std::to_string(r) + "-plane (transverse to every fixed isotropic coordinate plane)");
  return *found;
}

IncidenceData incidence_data(const FieldMatrix& h_rows, const Subspace& k, const ffalg::BilinearForm* form) {
  const auto& f = h_rows.field();
  const std::size_t n = h_rows.cols();
  const std::size_t r = h_rows.rows();
  require(k.ambient() == n, "condition subspace lives in a different ambient space");
  if (form)
    require(form->n() == static_cast<int>(n) && k.dim() == r, "isotropic conditions need dim K = dim H = r");
  else
    require(k.dim() + r == n, "condition subspace must be complementary in dimension");

  const FieldMatrix stacked = h_rows.stacked(k.basis());
  // (a, b) with sum a_j h_j + sum b_i k_i = 0
  const FieldMatrix relations = stacked.transpose().kernel();
  if (relations.rows() != 1)
    fail(ErrorCode::singular_point, "point meets the condition subspace in dimension " +
                                        std::to_string(relations.rows()) + ", not 1");
  IncidenceData out;
  out.coefficients.assign(relations.row(0).begin(), relations.row(0).begin() + static_cast<std::ptrdiff_t>(r));
  out.v.assign(n, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t c = 0; c < n; ++c) out.v[c] = f.add(out.v[c], f.mul(out.coefficients[j], h_rows(j, c)));

  const FieldMatrix normals = stacked.kernel();
  if (!form) {
    require(normals.rows() == 1, "H + K is not a hyperplane");
    out.normal.assign(normals.row(0).begin(), normals.row(0).end());
    return out;
  }
  // annihilator of H + K is 2-dimensional and contains <v, .>; take a vector outside it
  const auto dual = form->dual(out.v);
  FieldMatrix pair(f, 2, n);
  std::copy(dual.begin(), dual.end(), pair.row(1).begin());
  for (std::size_t i = 0; i < normals.rows(); ++i) {
    std::copy(normals.row(i).begin(), normals.row(i).end(), pair.row(0).begin());
    if (pair.rank() == 2) {
      out.normal.assign(normals.row(i).begin(), normals.row(i).end());
      return out;
    }
  }
  fail(ErrorCode::singular_point, "H + K is not of codimension 2 in an isotropic incidence");
}

std::vector<std::size_t> chart_complement(const Subspace& h) {
  std::vector<std::size_t> out;
  const auto& piv = h.pivots();
  for (std::size_t c = 0; c < h.ambient(); ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) out.push_back(c);
  return out;
}

ConditionFunctional tangent_functional(const Subspace& h, const Subspace& k, const ffalg::BilinearForm* form) {
  ConditionFunctional out{incidence_data(h.basis(), k, form), {}};
  const auto& f = h.field();
  const auto complement = chart_complement(h);
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (std::size_t c : complement)
      out.covector.push_back(f.mul(out.incidence.coefficients[j], out.incidence.normal[c]));
  return out;
}

}  // namespace schubert::geometry
