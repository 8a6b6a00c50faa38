#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "schubert/combinat.hpp"
#include "schubert/error.hpp"
#include "schubert/ffalg.hpp"

using namespace schubert;
using namespace schubert::ffalg;
using combinat::GrassIndex;

namespace {

// Gaussian binomial by the product formula over plain integers.
long gaussian(long p, int r, int n) {
  long num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    long a = 1, b = 1;
    for (int k = 0; k < n - i; ++k) a *= p;
    for (int k = 0; k < i + 1; ++k) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Determinant by the permutation expansion.
Element leibniz(const FieldMatrix& m) {
  const auto& f = m.field();
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Element total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Element term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FieldMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Element>(rng() % f.modulus());
  return m;
}

// Every r-dimensional row space of F_p^n, by running over all r x n matrices.
std::set<FieldMatrix, bool (*)(const FieldMatrix&, const FieldMatrix&)> brute_planes(const PrimeField& f, int r, int n) {
  auto less = [](const FieldMatrix& a, const FieldMatrix& b) {
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
  };
  std::set<FieldMatrix, bool (*)(const FieldMatrix&, const FieldMatrix&)> out(less);
  const std::size_t entries = static_cast<std::size_t>(r * n);
  std::vector<Element> digits(entries, 0);
  while (true) {
    FieldMatrix m(f, static_cast<std::size_t>(r), static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < entries; ++k) m(k / static_cast<std::size_t>(n), k % static_cast<std::size_t>(n)) = digits[k];
    if (m.rank() == static_cast<std::size_t>(r)) out.insert(Subspace(m).basis());
    std::size_t k = 0;
    while (k < entries && ++digits[k] == f.modulus()) digits[k++] = 0;
    if (k == entries) break;
  }
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.to_signed(6) == -1);
  for (Element a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_NOTHROW(PrimeField(2147483647u));
}

TEST_CASE("determinant, rank and kernel against direct definitions") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const auto m = random_matrix(f, n, n, rng);
      CHECK(m.det() == leibniz(m));
      const auto top = random_matrix(f, 3, 6, rng);
      const auto wide = top.stacked(random_matrix(f, 1, 3, rng) * top);
      const auto k = wide.kernel();
      CHECK(wide.rank() + k.rows() == 6);
      CHECK(k.rank() == k.rows());
      for (std::size_t i = 0; i < k.rows(); ++i) {
        const auto image = wide.apply(k.row(i));
        CHECK(std::all_of(image.begin(), image.end(), [](Element e) { return e == 0; }));
      }
      CHECK(wide.rank() <= 3);
    }
  }
  CHECK_THROWS_AS(FieldMatrix(PrimeField(5), 2, 3).det(), Error);
}

TEST_CASE("subspaces are stored by reduced echelon basis") {
  const PrimeField f(5);
  const auto a = Subspace(FieldMatrix::from_rows(f, {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}}));
  const auto b = Subspace(FieldMatrix::from_rows(f, {{3, 1, 4, 2}, {1, 2, 3, 4}}));
  CHECK(a.dim() == b.dim());
  CHECK(a == b);
  CHECK(a.contains(std::vector<Element>{4, 3, 2, 1}));
  CHECK(a.dim() == 1);  // every row is a multiple of the first
  CHECK(a.intersection_dim(Subspace(FieldMatrix::identity(f, 4))) == 1);
  const auto line = Subspace(FieldMatrix::from_rows(f, {{0, 0, 1, 0}}));
  CHECK(line.pivots() == std::vector<std::size_t>{2});
}

TEST_CASE("grassmannian enumeration gives every plane once") {
  for (auto [p, r, n] : {std::tuple{2u, 2, 4}, {3u, 2, 4}, {3u, 1, 3}, {2u, 3, 5}, {5u, 2, 3}}) {
    const PrimeField f(p);
    std::vector<FieldMatrix> seen;
    enumerate_grassmannian(f, r, n, [&](const Subspace& s) { seen.push_back(s.basis()); });
    const auto brute = brute_planes(f, r, n);
    CHECK(seen.size() == brute.size());
    CHECK(static_cast<long>(seen.size()) == gaussian(p, r, n));
    CHECK(grassmannian_cardinality(p, r, n) == gaussian(p, r, n));
    for (const auto& m : seen) CHECK(brute.count(m) == 1);
    std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
    });
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
  CHECK(grassmannian_cardinality(7, 2, 4) == 2850);
  CHECK(grassmannian_cardinality(3, 2, 5) == 1210);
}

TEST_CASE("cells have p^|alpha| points and the cell is recovered from the basis") {
  const PrimeField f(3);
  const auto cells = grassmannian_cells(2, 5);
  CHECK(cells.size() == 10);
  CHECK(cells.front().alpha == std::vector<int>{4, 5});
  for (const auto& cell : cells) {
    long count = 0;
    enumerate_cell(f, cell, [&](const FieldMatrix& m) {
      ++count;
      CHECK(grassmannian_cell_of(m) == cell);
    });
    long expected = 1;
    for (int i = 0; i < cell.rank(); ++i) expected *= 3;
    CHECK(count == expected);
  }
}

TEST_CASE("schubert membership agrees with the order on cells") {
  const PrimeField f(3);
  const combinat::BruhatPoset poset(combinat::SpaceDescriptor::grassmannian(2, 4));
  enumerate_grassmannian(f, 2, 4, [&](const Subspace& h) {
    const auto cell = grassmannian_cell_of(h.basis());
    for (const auto& x : poset.elements()) {
      const auto& alpha = std::get<GrassIndex>(x);
      CHECK(schubert_membership(h, alpha) == combinat::grassmannian_leq(cell, alpha));
    }
  });
}

TEST_CASE("flag enumeration and membership") {
  const PrimeField f(2);
  const std::vector<int> steps{1, 2};
  long count = 0;
  const combinat::BruhatPoset poset(combinat::SpaceDescriptor::flag(steps, 3));
  std::map<std::string, long> by_cell;
  enumerate_flags(f, steps, 3, [&](const FlagPoint& e) {
    ++count;
    CHECK(e.component(0).dim() == 1);
    CHECK(e.component(1).dim() == 2);
    CHECK(e.component(1).contains(e.frame().row(0)));
    // the smallest index whose Schubert variety contains the flag
    std::vector<combinat::SchubertIndex> holders;
    for (const auto& x : poset.elements())
      if (schubert_membership(e, std::get<combinat::FlagIndex>(x))) holders.push_back(x);
    REQUIRE(!holders.empty());
    const auto least = *std::min_element(holders.begin(), holders.end(),
                                         [](const auto& a, const auto& b) { return combinat::rank(a) < combinat::rank(b); });
    for (const auto& x : holders) CHECK(poset.leq(least, x));
    ++by_cell[combinat::to_string(least)];
  });
  CHECK(count == 21);
  CHECK(flag_cardinality(2, steps, 3) == 21);
  for (const auto& x : poset.elements()) CHECK(by_cell[combinat::to_string(x)] == 1L << combinat::rank(x));
  CHECK(flag_cardinality(3, {1, 3}, 4) == gaussian(3, 1, 4) * gaussian(3, 2, 3));
}

TEST_CASE("isotropic enumeration") {
  for (std::uint32_t p : {3u, 5u}) {
    const PrimeField f(p);
    for (int r = 1; r <= 3; ++r) {
      if (p == 5 && r == 3) continue;
      const BilinearForm form(r);
      std::vector<FieldMatrix> seen;
      std::map<std::vector<int>, long> cells;
      enumerate_isotropic(f, r, [&](const Subspace& s) {
        CHECK(s.dim() == static_cast<std::size_t>(r));
        CHECK(form.is_isotropic(s.basis()));
        seen.push_back(s.basis());
        ++cells[grassmannian_cell_of(s.basis()).alpha];
      });
      long expected = 1;
      for (int i = 1; i <= r; ++i) {
        long q = 1;
        for (int k = 0; k < i; ++k) q *= p;
        expected *= q + 1;
      }
      CHECK(static_cast<long>(seen.size()) == expected);
      CHECK(isotropic_cardinality(p, r) == expected);
      std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
      });
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      // one cell per strict partition, of size p^|lambda|
      const combinat::BruhatPoset poset(combinat::SpaceDescriptor::orthogonal(r));
      CHECK(cells.size() == poset.size());
      for (const auto& x : poset.elements()) {
        const auto& lambda = std::get<combinat::StrictPartition>(x);
        long size = 1;
        for (int k = 0; k < lambda.rank(); ++k) size *= p;
        CHECK(cells[lambda.grassmannian_index().alpha] == size);
      }
    }
  }
  CHECK(isotropic_cardinality(5, 3) == 19656);
  CHECK_THROWS_AS(enumerate_isotropic(PrimeField(2), 2, [](const Subspace&) {}), Error);
}

TEST_CASE("isotropic membership agrees with the strict-partition order") {
  const PrimeField f(3);
  const combinat::BruhatPoset poset(combinat::SpaceDescriptor::orthogonal(2));
  enumerate_isotropic(f, 2, [&](const Subspace& h) {
    const auto cell = grassmannian_cell_of(h.basis());
    for (const auto& x : poset.elements()) {
      const auto& lambda = std::get<combinat::StrictPartition>(x);
      CHECK(schubert_membership(h, lambda) == combinat::grassmannian_leq(cell, lambda.grassmannian_index()));
    }
  });
}

TEST_CASE("enumeration refuses sizes above the guard") {
  try {
    enumerate_grassmannian(PrimeField(101), 3, 7, [](const Subspace&) {});
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::capacity);
  }
}
