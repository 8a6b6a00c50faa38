#pragma once

// Enumerative instances over prime fields: construction, exhaustive solving,
// transversality certification, and the report that ties the solution count
// to the chain count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/ffalg.hpp"
#include "schubert/geometry.hpp"

namespace schubert::verifier {

using combinat::BigInt;
using combinat::SchubertIndex;
using combinat::SpaceDescriptor;
using ffalg::Element;
using ffalg::FieldMatrix;
using ffalg::PrimeField;
using ffalg::Subspace;

enum class Mode { family, independent };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct Condition {
  int family = 1;
  Subspace subspace;
  std::optional<Element> parameter;  // torus parameter s in family mode
};

struct Instance {
  SpaceDescriptor space;
  PrimeField field{2};
  Mode mode = Mode::independent;
  std::uint64_t seed = 0;
  std::vector<Condition> conditions;
  std::optional<SchubertIndex> restriction;
  geometry::TorusWeights weights = geometry::TorusWeights::standard(1);

  std::vector<combinat::CoverLabel> labels() const;
};

struct BuildOptions {
  /// Family of each condition; empty means all family 1. Its length must be
  /// the dimension of the space, or of the restriction when one is given.
  std::vector<int> labels;
  std::optional<SchubertIndex> restriction;
  std::optional<geometry::TorusWeights> weights;
};

/// Throws no_general_subspace, not_enough_units, characteristic or
/// invalid_argument.
Instance build_instance(const SpaceDescriptor& space, const PrimeField& field, Mode mode, std::uint64_t seed,
                        const BuildOptions& options = {});

/// A point of the space: for grassmannian and OG the reduced basis; for flags
/// a frame whose first r_i rows span E_i.
struct Solution {
  FieldMatrix frame;
  /// Reduced bases of the components stacked; the canonical encoding.
  FieldMatrix canonical;
};

/// Worker count: SCHUBERT_THREADS if set, else hardware concurrency.
unsigned default_threads();

/// Every point satisfying all conditions (and lying in the restriction),
/// sorted by canonical encoding. Throws capacity above the point guard.
std::vector<Solution> solve(const Instance& instance, unsigned threads = 0);

enum class PointVerdict { transverse, nontransverse, singular_point, singular_in_restriction };
std::string_view to_string(PointVerdict verdict);

struct Certificate {
  int tangent_rank = 0;        // rank of the stacked tangent functionals
  int jacobian_rank = 0;       // rank of the chart Jacobian
  int tangent_dimension = 0;   // dimension of the tangent space at the point
  bool proportional = false;   // each functional is a nonzero multiple of its gradient row
  PointVerdict verdict = PointVerdict::nontransverse;

  bool operator==(const Certificate&) const = default;
};

Certificate certify_transverse(const Solution& point, const Instance& instance);

enum class Verdict { confirmed, count_mismatch, nontransverse_found, no_generic_config };
std::string_view to_string(Verdict verdict);

struct AttemptRecord {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::string outcome;  // a Verdict string, or "escalate" after a genericity failure
  BigInt solutions = 0;
  std::string detail;

  bool operator==(const AttemptRecord&) const = default;
};

struct VerificationReport {
  SpaceDescriptor space;
  std::optional<std::string> restriction;
  std::uint32_t prime = 0;
  Mode mode = Mode::independent;
  std::uint64_t seed = 0;
  std::vector<FieldMatrix> conditions;
  std::vector<int> labels;
  std::vector<std::optional<Element>> parameters;
  BigInt expected = 0;
  std::vector<FieldMatrix> solutions;
  std::vector<Certificate> certificates;
  std::vector<AttemptRecord> attempts;
  Verdict verdict = Verdict::no_generic_config;

  bool operator==(const VerificationReport&) const;
};

struct VerifyOptions {
  BuildOptions build;
  int max_attempts = 20;  // per prime
  unsigned threads = 0;
};

/// Retries with fresh seeds and escalates up the prime ladder until an attempt
/// is confirmed. Failure is a verdict; only capacity, characteristic and
/// argument errors throw.
VerificationReport verify(const SpaceDescriptor& space, const std::vector<std::uint32_t>& primes, Mode mode,
                          std::uint64_t seed, const VerifyOptions& options = {});

std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

struct PieriResult {
  bool holds = false;
  std::size_t lhs_points = 0;  // points of Omega_alpha with p_alpha = 0
  std::size_t rhs_points = 0;  // points of the union of the covered Omega_beta
};

/// Set-theoretic check of Omega_alpha n {p_alpha = 0} = U_{beta covered by alpha} Omega_beta.
PieriResult pieri_limit_check(int r, int n, const combinat::GrassIndex& alpha, const PrimeField& field);

/// True iff no point of the space meets K(s) for every unit s. The condition
/// family is inferred from dim K (flags) or K is isotropic (OG).
bool empty_common_intersection_check(const SpaceDescriptor& space, const Subspace& k,
                                     const geometry::TorusWeights& weights, const PrimeField& field,
                                     unsigned threads = 0);

}  // namespace schubert::verifier
