#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "schubert/error.hpp"
#include "schubert/geometry.hpp"

using namespace schubert;
using namespace schubert::geometry;
using combinat::GrassIndex;

namespace {

Subspace random_subspace(const PrimeField& f, std::size_t rows, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    FieldMatrix m(f, rows, n);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Element>(rng() % f.modulus());
    if (m.rank() == rows) return Subspace(m);
  }
}

// 2x2 minor of rows a, b on 0-based columns i < j.
Element minor2(const PrimeField& f, const FieldMatrix& m, std::size_t i, std::size_t j) {
  return f.sub(f.mul(m(0, i), m(1, j)), f.mul(m(0, j), m(1, i)));
}

bool proportional(const PrimeField& f, const std::vector<Element>& a, const std::vector<Element>& b) {
  FieldMatrix m(f, 2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(0, i) = a[i];
    m(1, i) = b[i];
  }
  auto nonzero = [](const std::vector<Element>& v) { return std::any_of(v.begin(), v.end(), [](Element e) { return e != 0; }); };
  return nonzero(a) && nonzero(b) && m.rank() == 1;
}

}  // namespace

TEST_CASE("plücker coordinates of a general plane over F_3") {
  const PrimeField f(3);
  const auto m = FieldMatrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  const auto p = plucker_coordinates(m);
  CHECK(p.coords == std::vector<Element>{1, 1, 2, 2, 2, 1});
  CHECK(p.at(GrassIndex{4, {3, 4}}) == 1);
  CHECK(p.all_nonzero());
  CHECK(is_general(Subspace(m)));
  const auto& idx = plucker_indices(2, 4);
  REQUIRE(idx.size() == 6);
  for (std::size_t b = 0; b < idx.size(); ++b)
    CHECK(p.coords[b] == minor2(f, m, static_cast<std::size_t>(idx[b][0] - 1), static_cast<std::size_t>(idx[b][1] - 1)));
}

TEST_CASE("no general 2-plane exists over F_2") {
  try {
    sample_general_subspace(PrimeField(2), 2, 4, 1);
    FAIL("expected no general subspace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_general_subspace);
  }
  long general = 0;
  ffalg::enumerate_grassmannian(PrimeField(2), 2, 4, [&](const Subspace& s) { general += is_general(s); });
  CHECK(general == 0);
}

TEST_CASE("sampled subspaces are general and reproducible") {
  const PrimeField f(7);
  const auto a = sample_general_subspace(f, 2, 5, 99);
  CHECK(a.dim() == 3);
  CHECK(is_general(a));
  CHECK(a == sample_general_subspace(f, 2, 5, 99));
  const auto k = sample_general_isotropic(PrimeField(5), 3, 4);
  CHECK(ffalg::BilinearForm(3).is_isotropic(k.basis()));
  CHECK(is_general_isotropic(k));
  CHECK_THROWS_AS(sample_general_isotropic(PrimeField(2), 2, 1), Error);
}

TEST_CASE("laplace expansion of the incidence determinant") {
  std::mt19937_64 rng(5);
  for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}, {1, 4}}) {
    const PrimeField f(5);
    const auto k = random_subspace(f, static_cast<std::size_t>(n - r), static_cast<std::size_t>(n), rng);
    const auto coeff = laplace_coefficients(k);
    ffalg::enumerate_grassmannian(f, r, n, [&](const Subspace& h) {
      const auto p = plucker_coordinates(h);
      Element sum = 0;
      for (std::size_t b = 0; b < coeff.size(); ++b) sum = f.add(sum, f.mul(p.coords[b], coeff[b]));
      CHECK(sum == k.basis().stacked(h.basis()).det());
      CHECK(incidence(h, k) == (h.intersection_dim(k) > 0));
    });
  }
}

TEST_CASE("torus action scales plücker coordinates by characters") {
  const PrimeField f(11);
  std::mt19937_64 rng(8);
  for (const auto& chars : {std::vector<int>{1, 2, 3, 4, 5}, std::vector<int>{-2, 0, 1, 4, 9}}) {
    const TorusWeights w(chars);
    const auto k = sample_general_subspace(f, 2, 5, rng());
    for (Element s = 1; s < 11; ++s) {
      const auto ks = torus_act(s, k, w);
      const auto p = plucker_coordinates(k), ps = plucker_coordinates(ks);
      const auto& idx = plucker_indices(3, 5);
      std::optional<Element> scale;
      for (std::size_t b = 0; b < idx.size(); ++b) {
        const long e = w.weight(GrassIndex{5, idx[b]});
        const Element sw = e >= 0 ? f.pow(s, static_cast<std::uint64_t>(e)) : f.pow(f.inv(s), static_cast<std::uint64_t>(-e));
        const Element expected = f.mul(sw, p.coords[b]);
        const Element ratio = f.mul(ps.coords[b], f.inv(expected));
        if (!scale) scale = ratio;
        CHECK(ratio == *scale);
      }
    }
  }
  CHECK(TorusWeights::standard(7).preserves_split_form());
  CHECK_FALSE(TorusWeights({1, 2, 4}).preserves_split_form());
  CHECK_THROWS_AS(TorusWeights({1, 1, 2}), Error);
}

TEST_CASE("tangent functional is the derivative of the incidence determinant") {
  std::mt19937_64 rng(21);
  for (auto [p, r, n] : {std::tuple{7u, 2, 4}, {5u, 2, 5}, {5u, 3, 6}}) {
    const PrimeField f(p);
    const auto k = sample_general_subspace(f, r, n, rng());
    int checked = 0;
    ffalg::enumerate_grassmannian(f, r, n, [&](const Subspace& h) {
      if (checked >= 25 || h.intersection_dim(k) != 1) return;
      ++checked;
      const auto tf = tangent_functional(h, k);
      // d/dt det[K; H + t E_{jc}] is f(1) - f(0): only one row moves
      std::vector<Element> gradient;
      for (std::size_t j = 0; j < h.dim(); ++j)
        for (std::size_t c : chart_complement(h)) {
          FieldMatrix moved = h.basis();
          moved(j, c) = f.add(moved(j, c), 1);
          gradient.push_back(f.sub(k.basis().stacked(moved).det(), k.basis().stacked(h.basis()).det()));
        }
      CHECK(proportional(f, tf.covector, gradient));
      // v spans the intersection and the normal kills H + K
      CHECK(k.contains(tf.incidence.v));
      CHECK(h.contains(tf.incidence.v));
      const auto span = k.basis().stacked(h.basis());
      for (std::size_t i = 0; i < span.rows(); ++i) {
        Element dot = 0;
        for (std::size_t c = 0; c < span.cols(); ++c) dot = f.add(dot, f.mul(span(i, c), tf.incidence.normal[c]));
        CHECK(dot == 0);
      }
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("incidence data rejects singular points") {
  const PrimeField f(5);
  const auto k = Subspace(FieldMatrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const auto h = Subspace(FieldMatrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  try {
    incidence_data(h.basis(), k);
    FAIL("expected a singular point");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_point);
  }
}
