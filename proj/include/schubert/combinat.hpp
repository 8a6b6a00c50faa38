#pragma once

// Index sets, Bruhat-type orders and saturated-chain counting for the
// Grassmannian, partial flag manifolds, the odd orthogonal Grassmannian and
// the quantum Grassmannian.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace schubert::combinat {

using BigInt = mpz_class;

enum class SpaceKind { grassmannian, flag, orthogonal, quantum };

std::string_view to_string(SpaceKind kind);

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::grassmannian;
  int r = 0;               // plane dimension (grassmannian, quantum, OG rank)
  int n = 0;               // ambient dimension; 2r+1 for OG
  int q = 0;               // map degree, quantum only
  std::vector<int> steps;  // r_1 < ... < r_m, flag only

  static SpaceDescriptor grassmannian(int r, int n);
  static SpaceDescriptor flag(std::vector<int> steps, int n);
  static SpaceDescriptor orthogonal(int r);
  static SpaceDescriptor quantum(int r, int n, int q);

  int dimension() const;
  /// Number of simple-condition families (m for flags, 1 otherwise).
  int families() const;
  /// Dimension of the subspace a family-`family` condition is imposed on.
  int condition_step(int family) const;
  std::string name() const;

  bool operator==(const SpaceDescriptor&) const = default;
};

struct GrassIndex {
  int n = 0;
  std::vector<int> alpha;  // 1 <= alpha_1 < ... < alpha_r <= n
  int rank() const;
  bool operator==(const GrassIndex&) const = default;
};

struct FlagIndex {
  int n = 0;
  std::vector<int> steps;
  std::vector<int> w;  // one-line notation, descents only at steps
  int rank() const;    // inversion count
  /// Sorted first r_i values of w: the Grassmannian index of E_{r_i}.
  GrassIndex projection(std::size_t step) const;
  bool operator==(const FlagIndex&) const = default;
};

struct StrictPartition {
  int r = 0;
  std::vector<int> lambda;  // r >= lambda_1 > ... > lambda_l > 0
  int rank() const;
  /// The Grassmannian cell of G(r, 2r+1) containing this orthogonal cell.
  GrassIndex grassmannian_index() const;
  bool operator==(const StrictPartition&) const = default;
};

struct QuantumIndex {
  int r = 0, n = 0, q = 0;
  std::vector<int> alpha;
  int a = 0;
  int rank() const;  // a*n + sum(alpha_i - i)
  bool operator==(const QuantumIndex&) const = default;
};

using SchubertIndex = std::variant<GrassIndex, FlagIndex, StrictPartition, QuantumIndex>;

int rank(const SchubertIndex& index);
std::string to_string(const SchubertIndex& index);
/// Text form used by the CLI and reports: "2,4" (grassmannian), "3,1,2"
/// (flag permutation), "3,1" or "" (strict partition), "1:2,4" (quantum).
SchubertIndex parse_index(const SpaceDescriptor& space, std::string_view text);
/// Throws invalid_argument unless `index` is a valid element of `space`.
void validate(const SpaceDescriptor& space, const SchubertIndex& index);

struct CoverLabel {
  int family = 1;  // 1-based
};

bool grassmannian_leq(const GrassIndex& u, const GrassIndex& v);
bool quantum_leq(const QuantumIndex& u, const QuantumIndex& v);
int inversions(std::span<const int> w);

/// Number of elements of the index set, computed without materializing it.
BigInt index_set_size(const SpaceDescriptor& space);

/// Immutable graded poset of Schubert indices with one cover relation per
/// condition family. Safe to share across threads once constructed.
class BruhatPoset {
public:
  explicit BruhatPoset(SpaceDescriptor space);
  ~BruhatPoset();
  BruhatPoset(const BruhatPoset&) = delete;
  BruhatPoset& operator=(const BruhatPoset&) = delete;

  const SpaceDescriptor& space() const { return space_; }
  std::size_t size() const { return keys_.size(); }
  int rank(std::size_t id) const { return ranks_[id]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  SchubertIndex element(std::size_t id) const;
  std::vector<SchubertIndex> elements() const;
  std::size_t id_of(const SchubertIndex& index) const;

  std::span<const std::size_t> covers_down(std::size_t id, CoverLabel label) const;
  std::vector<SchubertIndex> covers_down(const SchubertIndex& v, CoverLabel label) const;

  /// Bruhat order. Closed form for grassmannian/quantum; for flags and OG the
  /// transitive closure of the union of the cover relations.
  bool leq(const SchubertIndex& u, const SchubertIndex& v) const;

  /// Saturated chains bottom = w_0 <_{labels[0]} w_1 <_{labels[1]} ... = top.
  BigInt count_chains(const SchubertIndex& top, std::span<const CoverLabel> labels) const;
  BigInt count_chains(std::size_t top, std::span<const CoverLabel> labels) const;

private:
  struct Closure;

  SpaceDescriptor space_;
  std::vector<std::vector<int>> keys_;
  std::map<std::vector<int>, std::size_t> ids_;
  std::vector<int> ranks_;
  // CSR cover lists, one per family
  std::vector<std::vector<std::size_t>> cover_offsets_;
  std::vector<std::vector<std::size_t>> cover_targets_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::unique_ptr<Closure> closure_;

  const std::vector<bool>& down_set(std::size_t id) const;
};

/// Standard Young tableaux of the r x c rectangle, by the hook-length formula.
BigInt syt_rectangle_oracle(int r, int c);

}  // namespace schubert::combinat
