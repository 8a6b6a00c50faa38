#pragma once

// Plücker coordinates, the Laplace expansion of the incidence determinant,
// torus actions, sampling of general subspaces and tangent functionals of
// simple Schubert conditions.

#include <cstdint>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/ffalg.hpp"

namespace schubert::geometry {

using ffalg::Element;
using ffalg::FieldMatrix;
using ffalg::PrimeField;
using ffalg::Subspace;

/// All r-subsets of [1, n] (1-based) in lexicographic order; the coordinate
/// order of every PluckerVector.
const std::vector<std::vector<int>>& plucker_indices(int r, int n);

struct PluckerVector {
  int r = 0;
  int n = 0;
  std::vector<Element> coords;

  Element at(const combinat::GrassIndex& index) const;
  bool all_nonzero() const;
};

/// Maximal minors of an arbitrary r x n basis (no normalization).
PluckerVector plucker_coordinates(const FieldMatrix& basis);
/// Maximal minors of the reduced basis; the leading pivot coordinate is 1.
PluckerVector plucker_coordinates(const Subspace& s);

/// Coefficients k_beta with det[K; H] = sum_beta p_beta(H) k_beta for every
/// r-plane H, where K is an (n-r)-plane. Aligned with plucker_indices(r, n).
std::vector<Element> laplace_coefficients(const Subspace& k);

/// Characters i_1 < ... < i_n of a diagonal torus action s.e_j = s^{i_j} e_j.
class TorusWeights {
public:
  explicit TorusWeights(std::vector<int> characters);
  static TorusWeights standard(int n);  // i_j = j

  const std::vector<int>& characters() const { return characters_; }
  int size() const { return static_cast<int>(characters_.size()); }
  /// sum_j i_{alpha_j}
  long long weight(const combinat::GrassIndex& alpha) const;
  /// i_j + i_{n+1-j} constant, so the split form is preserved up to scale.
  bool preserves_split_form() const;

  bool operator==(const TorusWeights&) const = default;

private:
  std::vector<int> characters_;
};

Subspace torus_act(Element s, const Subspace& k, const TorusWeights& weights);

/// dim H + dim K = n; true iff the stacked square determinant vanishes.
bool incidence(const Subspace& h, const Subspace& k);

bool is_general(const Subspace& s);
/// K maximal isotropic in F^{2r+1} meeting each of the 2^r torus-fixed
/// maximal isotropic coordinate planes only in 0.
bool is_general_isotropic(const Subspace& k);

/// An (n-r)-plane with no vanishing Plücker coordinate: 1000 seeded random
/// trials, then an exhaustive scan under the point guard.
Subspace sample_general_subspace(const PrimeField& field, int r, int n, std::uint64_t seed);
/// A maximal isotropic r-plane of F_p^{2r+1} satisfying is_general_isotropic,
/// same search policy.
Subspace sample_general_isotropic(const PrimeField& field, int r, std::uint64_t seed);

/// Where a point meets a condition subspace: H n K = <v>, v = sum a_j h_j over
/// the given rows of H, and a normal functional to the hyperplane Lambda
/// (H + K when complementary, v-perp otherwise) that kills H + K.
struct IncidenceData {
  std::vector<Element> coefficients;  // a_j
  std::vector<Element> v;
  std::vector<Element> normal;
};

/// Throws singular_point unless dim(H n K) = 1. With a form, H and K are
/// maximal isotropic and the normal is chosen outside <v, .>.
IncidenceData incidence_data(const FieldMatrix& h_rows, const Subspace& k, const ffalg::BilinearForm* form = nullptr);

/// Covector of phi -> lambda(phi(v)) on Hom(H, V/H), in the chart basis
/// phi_{j,c}: h_j -> e_c for rows j of the reduced basis of H and non-pivot
/// columns c, ordered row-major.
struct ConditionFunctional {
  IncidenceData incidence;
  std::vector<Element> covector;
};

ConditionFunctional tangent_functional(const Subspace& h, const Subspace& k, const ffalg::BilinearForm* form = nullptr);

/// Non-pivot columns of the reduced basis of H.
std::vector<std::size_t> chart_complement(const Subspace& h);

}  // namespace schubert::geometry
