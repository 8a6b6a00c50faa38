#include "schubert/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "schubert/error.hpp"

namespace schubert::combinat {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

int grass_rank(std::span<const int> alpha) {
  int s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += alpha[i] - static_cast<int>(i) - 1;
  return s;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    require(ec == std::errc(), "malformed integer list '" + std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
    require(pos == text.size() || text[pos] == ',' || text[pos] == ' ',
            "malformed integer list '" + std::string(text) + "'");
  }
  return out;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Iterate over all r-subsets of [1, n] in lexicographic order.
template <typename F>
void for_each_combination(int n, int r, F&& f) {
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 1);
  if (r == 0) {
    f(c);
    return;
  }
  while (true) {
    f(c);
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool is_strictly_increasing(std::span<const int> v, int lo, int hi) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) return false;
    if (i && v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::grassmannian: return "grassmannian";
    case SpaceKind::flag: return "flag";
    case SpaceKind::orthogonal: return "orthogonal";
    case SpaceKind::quantum: return "quantum";
  }
  return "unknown";
}

SpaceDescriptor SpaceDescriptor::grassmannian(int r, int n) {
  require(n >= 2 && r >= 1 && r < n, "grassmannian needs 0 < r < n");
  SpaceDescriptor s;
  s.kind = SpaceKind::grassmannian;
  s.r = r;
  s.n = n;
  return s;
}

SpaceDescriptor SpaceDescriptor::flag(std::vector<int> steps, int n) {
  require(!steps.empty(), "flag manifold needs at least one step");
  require(is_strictly_increasing(steps, 1, n - 1), "flag steps must satisfy 0 < r_1 < ... < r_m < n");
  SpaceDescriptor s;
  s.kind = SpaceKind::flag;
  s.steps = std::move(steps);
  s.n = n;
  s.r = s.steps.back();
  return s;
}

SpaceDescriptor SpaceDescriptor::orthogonal(int r) {
  require(r >= 1, "orthogonal grassmannian needs r >= 1");
  SpaceDescriptor s;
  s.kind = SpaceKind::orthogonal;
  s.r = r;
  s.n = 2 * r + 1;
  return s;
}

SpaceDescriptor SpaceDescriptor::quantum(int r, int n, int q) {
  require(n >= 2 && r >= 1 && r < n, "quantum grassmannian needs 0 < r < n");
  require(q >= 0, "map degree must be nonnegative");
  SpaceDescriptor s;
  s.kind = SpaceKind::quantum;
  s.r = r;
  s.n = n;
  s.q = q;
  return s;
}

int SpaceDescriptor::dimension() const {
  switch (kind) {
    case SpaceKind::grassmannian: return r * (n - r);
    case SpaceKind::flag: {
      int d = 0, prev = 0;
      for (int step : steps) {
        d += prev * (step - prev);
        prev = step;
      }
      return d + prev * (n - prev);
    }
    case SpaceKind::orthogonal: return r * (r + 1) / 2;
    case SpaceKind::quantum: return q * n + r * (n - r);
  }
  return 0;
}

int SpaceDescriptor::families() const {
  return kind == SpaceKind::flag ? static_cast<int>(steps.size()) : 1;
}

int SpaceDescriptor::condition_step(int family) const {
  require(family >= 1 && family <= families(), "cover label out of range for " + name());
  return kind == SpaceKind::flag ? steps[static_cast<std::size_t>(family - 1)] : r;
}

std::string SpaceDescriptor::name() const {
  switch (kind) {
    case SpaceKind::grassmannian:
      return "G(" + std::to_string(r) + "," + std::to_string(n) + ")";
    case SpaceKind::flag:
      return "Fl(" + join(steps) + ";" + std::to_string(n) + ")";
    case SpaceKind::orthogonal:
      return "OG(" + std::to_string(r) + ")";
    case SpaceKind::quantum:
      return "M^" + std::to_string(q) + "_{" + std::to_string(r) + "," + std::to_string(n) + "}";
  }
  return "?";
}

int GrassIndex::rank() const { return grass_rank(alpha); }

int FlagIndex::rank() const { return inversions(w); }

GrassIndex FlagIndex::projection(std::size_t step) const {
  GrassIndex g{n, std::vector<int>(w.begin(), w.begin() + steps.at(step))};
  std::sort(g.alpha.begin(), g.alpha.end());
  return g;
}

int StrictPartition::rank() const { return std::accumulate(lambda.begin(), lambda.end(), 0); }

GrassIndex StrictPartition::grassmannian_index() const {
  GrassIndex g{2 * r + 1, {}};
  std::vector<bool> flipped(static_cast<std::size_t>(r + 1), false);
  for (int part : lambda) {
    g.alpha.push_back(r + 1 + part);
    flipped[static_cast<std::size_t>(r + 1 - part)] = true;
  }
  for (int j = 1; j <= r; ++j)
    if (!flipped[static_cast<std::size_t>(j)]) g.alpha.push_back(j);
  std::sort(g.alpha.begin(), g.alpha.end());
  return g;
}

int QuantumIndex::rank() const { return a * n + grass_rank(alpha); }

int inversions(std::span<const int> w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int rank(const SchubertIndex& index) {
  return std::visit([](const auto& x) { return x.rank(); }, index);
}

std::string to_string(const SchubertIndex& index) {
  struct {
    std::string operator()(const GrassIndex& x) const { return join(x.alpha); }
    std::string operator()(const FlagIndex& x) const { return join(x.w); }
    std::string operator()(const StrictPartition& x) const { return join(x.lambda); }
    std::string operator()(const QuantumIndex& x) const {
      return std::to_string(x.a) + ":" + join(x.alpha);
    }
  } v;
  return std::visit(v, index);
}

void validate(const SpaceDescriptor& space, const SchubertIndex& index) {
  switch (space.kind) {
    case SpaceKind::grassmannian: {
      const auto* g = std::get_if<GrassIndex>(&index);
      require(g && g->n == space.n && static_cast<int>(g->alpha.size()) == space.r &&
                  is_strictly_increasing(g->alpha, 1, space.n),
              "not an index of " + space.name() + ": " + to_string(index));
      return;
    }
    case SpaceKind::flag: {
      const auto* f = std::get_if<FlagIndex>(&index);
      require(f && f->n == space.n && f->steps == space.steps &&
                  static_cast<int>(f->w.size()) == space.n,
              "not an index of " + space.name() + ": " + to_string(index));
      std::vector<int> sorted = f->w;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < space.n; ++i)
        require(sorted[static_cast<std::size_t>(i)] == i + 1, "flag index is not a permutation: " + to_string(index));
      for (int i = 1; i < space.n; ++i) {
        if (f->w[static_cast<std::size_t>(i - 1)] > f->w[static_cast<std::size_t>(i)])
          require(std::find(space.steps.begin(), space.steps.end(), i) != space.steps.end(),
                  "flag index has a descent outside the steps: " + to_string(index));
      }
      return;
    }
    case SpaceKind::orthogonal: {
      const auto* s = std::get_if<StrictPartition>(&index);
      require(s && s->r == space.r, "not an index of " + space.name() + ": " + to_string(index));
      for (std::size_t i = 0; i < s->lambda.size(); ++i) {
        require(s->lambda[i] >= 1 && s->lambda[i] <= space.r &&
                    (i == 0 || s->lambda[i] < s->lambda[i - 1]),
                "not a strict partition inside the staircase: " + to_string(index));
      }
      return;
    }
    case SpaceKind::quantum: {
      const auto* x = std::get_if<QuantumIndex>(&index);
      require(x && x->r == space.r && x->n == space.n && x->q == space.q && x->a >= 0 &&
                  x->a <= space.q && static_cast<int>(x->alpha.size()) == space.r &&
                  is_strictly_increasing(x->alpha, 1, space.n),
              "not an index of " + space.name() + ": " + to_string(index));
      return;
    }
  }
}

SchubertIndex parse_index(const SpaceDescriptor& space, std::string_view text) {
  SchubertIndex out;
  switch (space.kind) {
    case SpaceKind::grassmannian:
      out = GrassIndex{space.n, parse_ints(text)};
      break;
    case SpaceKind::flag:
      out = FlagIndex{space.n, space.steps, parse_ints(text)};
      break;
    case SpaceKind::orthogonal:
      out = StrictPartition{space.r, parse_ints(text == "-" ? std::string_view{} : text)};
      break;
    case SpaceKind::quantum: {
      auto colon = text.find(':');
      require(colon != std::string_view::npos, "quantum index must look like 'a:alpha_1,...'");
      auto a = parse_ints(text.substr(0, colon));
      require(a.size() == 1, "quantum index must look like 'a:alpha_1,...'");
      out = QuantumIndex{space.r, space.n, space.q, parse_ints(text.substr(colon + 1)), a[0]};
      break;
    }
  }
  validate(space, out);
  return out;
}

bool grassmannian_leq(const GrassIndex& u, const GrassIndex& v) {
  require(u.n == v.n && u.alpha.size() == v.alpha.size(), "indices from different grassmannians");
  for (std::size_t i = 0; i < u.alpha.size(); ++i)
    if (u.alpha[i] > v.alpha[i]) return false;
  return true;
}

bool quantum_leq(const QuantumIndex& u, const QuantumIndex& v) {
  require(u.r == v.r && u.n == v.n && u.q == v.q, "indices from different quantum grassmannians");
  if (u.a > v.a) return false;
  const int shift = v.a - u.a;
  for (int i = 0; i + shift < u.r; ++i)
    if (u.alpha[static_cast<std::size_t>(i)] > v.alpha[static_cast<std::size_t>(i + shift)]) return false;
  return true;
}

BigInt index_set_size(const SpaceDescriptor& space) {
  switch (space.kind) {
    case SpaceKind::grassmannian: return binomial(space.n, space.r);
    case SpaceKind::quantum: return binomial(space.n, space.r) * (space.q + 1);
    case SpaceKind::orthogonal: {
      BigInt out;
      mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(space.r));
      return out;
    }
    case SpaceKind::flag: {
      BigInt out = factorial(space.n);
      int prev = 0;
      for (int step : space.steps) {
        out /= factorial(step - prev);
        prev = step;
      }
      return out / factorial(space.n - prev);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct BruhatPoset::Closure {
  explicit Closure(std::size_t n) : once(new std::once_flag[n]), sets(n) {}
  std::unique_ptr<std::once_flag[]> once;
  std::vector<std::vector<bool>> sets;
};

namespace {

std::vector<int> key_of(const SchubertIndex& index) {
  struct {
    std::vector<int> operator()(const GrassIndex& x) const { return x.alpha; }
    std::vector<int> operator()(const FlagIndex& x) const { return x.w; }
    std::vector<int> operator()(const StrictPartition& x) const { return x.lambda; }
    std::vector<int> operator()(const QuantumIndex& x) const {
      std::vector<int> k{x.a};
      k.insert(k.end(), x.alpha.begin(), x.alpha.end());
      return k;
    }
  } v;
  return std::visit(v, index);
}

int key_rank(const SpaceDescriptor& space, std::span<const int> key) {
  switch (space.kind) {
    case SpaceKind::grassmannian: return grass_rank(key);
    case SpaceKind::flag: return inversions(key);
    case SpaceKind::orthogonal: return std::accumulate(key.begin(), key.end(), 0);
    case SpaceKind::quantum: return key[0] * space.n + grass_rank(key.subspan(1));
  }
  return 0;
}

std::vector<std::vector<int>> generate_keys(const SpaceDescriptor& space) {
  std::vector<std::vector<int>> keys;
  switch (space.kind) {
    case SpaceKind::grassmannian:
      for_each_combination(space.n, space.r, [&](const std::vector<int>& c) { keys.push_back(c); });
      break;
    case SpaceKind::quantum:
      for (int a = 0; a <= space.q; ++a) {
        for_each_combination(space.n, space.r, [&](const std::vector<int>& c) {
          std::vector<int> k{a};
          k.insert(k.end(), c.begin(), c.end());
          keys.push_back(std::move(k));
        });
      }
      break;
    case SpaceKind::orthogonal:
      for (unsigned mask = 0; mask < (1u << space.r); ++mask) {
        std::vector<int> lambda;
        for (int part = space.r; part >= 1; --part)
          if (mask & (1u << (part - 1))) lambda.push_back(part);
        keys.push_back(std::move(lambda));
      }
      break;
    case SpaceKind::flag: {
      // block label of each value; every multiset permutation gives one w
      std::vector<int> label;
      int prev = 0, block = 0;
      for (int step : space.steps) {
        label.insert(label.end(), static_cast<std::size_t>(step - prev), block++);
        prev = step;
      }
      label.insert(label.end(), static_cast<std::size_t>(space.n - prev), block++);
      do {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(space.n));
        for (int b = 0; b < block; ++b)
          for (int v = 0; v < space.n; ++v)
            if (label[static_cast<std::size_t>(v)] == b) w.push_back(v + 1);
        keys.push_back(std::move(w));
      } while (std::next_permutation(label.begin(), label.end()));
      break;
    }
  }
  return keys;
}

// Lower covers of `key` for one family, as keys.
std::vector<std::vector<int>> cover_keys(const SpaceDescriptor& space, const std::vector<int>& key,
                                         int family) {
  std::vector<std::vector<int>> out;
  switch (space.kind) {
    case SpaceKind::grassmannian:
    case SpaceKind::quantum: {
      const std::size_t off = space.kind == SpaceKind::quantum ? 1 : 0;
      const std::size_t r = static_cast<std::size_t>(space.r);
      for (std::size_t i = 0; i < r; ++i) {
        const int lowered = key[off + i] - 1;
        const int floor = i == 0 ? 0 : key[off + i - 1];
        if (lowered > floor) {
          auto k = key;
          k[off + i] = lowered;
          out.push_back(std::move(k));
        }
      }
      // drop in degree: alpha^(a) covers (alpha_2..alpha_r, n)^(a-1) when alpha_1 = 1
      if (off && key[0] > 0 && key[1] == 1 && key[r] < space.n) {
        std::vector<int> k{key[0] - 1};
        k.insert(k.end(), key.begin() + 2, key.end());
        k.push_back(space.n);
        out.push_back(std::move(k));
      }
      break;
    }
    case SpaceKind::orthogonal:
      for (std::size_t i = 0; i < key.size(); ++i) {
        const int lowered = key[i] - 1;
        const int next = i + 1 < key.size() ? key[i + 1] : 0;
        if (lowered > next || (lowered == 0 && next == 0)) {
          auto k = key;
          if (lowered == 0)
            k.pop_back();
          else
            k[i] = lowered;
          out.push_back(std::move(k));
        }
      }
      break;
    case SpaceKind::flag: {
      // Monk: u = w t_{ab}, positions a <= r_i < b, one fewer inversion
      const int cut = space.steps[static_cast<std::size_t>(family - 1)];
      const int inv = inversions(key);
      for (int a = 0; a < cut; ++a) {
        for (int b = cut; b < space.n; ++b) {
          if (key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]) continue;
          auto k = key;
          std::swap(k[static_cast<std::size_t>(a)], k[static_cast<std::size_t>(b)]);
          if (inversions(k) == inv - 1) out.push_back(std::move(k));
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

BruhatPoset::BruhatPoset(SpaceDescriptor space) : space_(std::move(space)) {
  const BigInt count = index_set_size(space_);
  if (count > kCapacityGuard) {
    fail(ErrorCode::capacity, space_.name() + " has " + count.get_str() +
                                  " Schubert indices, above the guard of 10^7");
  }
  keys_ = generate_keys(space_);
  ranks_.reserve(keys_.size());
  for (std::size_t id = 0; id < keys_.size(); ++id) {
    ids_.emplace(keys_[id], id);
    ranks_.push_back(key_rank(space_, keys_[id]));
    if (ranks_[id] == 0) bottom_ = id;
    if (ranks_[id] > ranks_[top_]) top_ = id;
  }

  const int families = space_.families();
  cover_offsets_.assign(static_cast<std::size_t>(families), {});
  cover_targets_.assign(static_cast<std::size_t>(families), {});
  for (int f = 0; f < families; ++f) {
    auto& offsets = cover_offsets_[static_cast<std::size_t>(f)];
    auto& targets = cover_targets_[static_cast<std::size_t>(f)];
    offsets.reserve(keys_.size() + 1);
    offsets.push_back(0);
    for (const auto& key : keys_) {
      for (const auto& k : cover_keys(space_, key, f + 1)) {
        auto it = ids_.find(k);
        if (it != ids_.end()) targets.push_back(it->second);
      }
      offsets.push_back(targets.size());
    }
  }
  if (space_.kind == SpaceKind::flag || space_.kind == SpaceKind::orthogonal)
    closure_ = std::make_unique<Closure>(keys_.size());
}

BruhatPoset::~BruhatPoset() = default;

SchubertIndex BruhatPoset::element(std::size_t id) const {
  const auto& key = keys_.at(id);
  switch (space_.kind) {
    case SpaceKind::grassmannian: return GrassIndex{space_.n, key};
    case SpaceKind::flag: return FlagIndex{space_.n, space_.steps, key};
    case SpaceKind::orthogonal: return StrictPartition{space_.r, key};
    case SpaceKind::quantum:
      return QuantumIndex{space_.r, space_.n, space_.q, std::vector<int>(key.begin() + 1, key.end()), key[0]};
  }
  return {};
}

std::vector<SchubertIndex> BruhatPoset::elements() const {
  std::vector<SchubertIndex> out;
  out.reserve(size());
  for (std::size_t id = 0; id < size(); ++id) out.push_back(element(id));
  return out;
}

std::size_t BruhatPoset::id_of(const SchubertIndex& index) const {
  validate(space_, index);
  return ids_.at(key_of(index));
}

std::span<const std::size_t> BruhatPoset::covers_down(std::size_t id, CoverLabel label) const {
  require(label.family >= 1 && label.family <= space_.families(),
          "cover label out of range for " + space_.name());
  const auto f = static_cast<std::size_t>(label.family - 1);
  const auto& offsets = cover_offsets_[f];
  return std::span<const std::size_t>(cover_targets_[f]).subspan(offsets.at(id), offsets[id + 1] - offsets[id]);
}

std::vector<SchubertIndex> BruhatPoset::covers_down(const SchubertIndex& v, CoverLabel label) const {
  std::vector<SchubertIndex> out;
  for (std::size_t id : covers_down(id_of(v), label)) out.push_back(element(id));
  return out;
}

const std::vector<bool>& BruhatPoset::down_set(std::size_t id) const {
  std::call_once(closure_->once[id], [&] {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{id};
    seen[id] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (int f = 1; f <= space_.families(); ++f) {
        for (std::size_t u : covers_down(x, CoverLabel{f})) {
          if (!seen[u]) {
            seen[u] = true;
            stack.push_back(u);
          }
        }
      }
    }
    closure_->sets[id] = std::move(seen);
  });
  return closure_->sets[id];
}

bool BruhatPoset::leq(const SchubertIndex& u, const SchubertIndex& v) const {
  const std::size_t uid = id_of(u);
  const std::size_t vid = id_of(v);
  switch (space_.kind) {
    case SpaceKind::grassmannian:
      return grassmannian_leq(std::get<GrassIndex>(u), std::get<GrassIndex>(v));
    case SpaceKind::quantum:
      return quantum_leq(std::get<QuantumIndex>(u), std::get<QuantumIndex>(v));
    case SpaceKind::flag:
    case SpaceKind::orthogonal:
      return down_set(vid)[uid];
  }
  return false;
}

BigInt BruhatPoset::count_chains(const SchubertIndex& top, std::span<const CoverLabel> labels) const {
  return count_chains(id_of(top), labels);
}

BigInt BruhatPoset::count_chains(std::size_t top, std::span<const CoverLabel> labels) const {
  const int k = rank(top);
  require(static_cast<int>(labels.size()) == k,
          "expected " + std::to_string(k) + " cover labels for an index of rank " + std::to_string(k) +
              ", got " + std::to_string(labels.size()));
  for (const auto& label : labels)
    require(label.family >= 1 && label.family <= space_.families(),
            "cover label out of range for " + space_.name());

  // layers[j]: elements of rank j from which `top` is reachable upward by labels[j..k-1]
  std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(k) + 1);
  layers[static_cast<std::size_t>(k)] = {top};
  for (int j = k; j > 0; --j) {
    auto& below = layers[static_cast<std::size_t>(j - 1)];
    for (std::size_t x : layers[static_cast<std::size_t>(j)])
      for (std::size_t u : covers_down(x, labels[static_cast<std::size_t>(j - 1)])) below.push_back(u);
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
  }

  std::unordered_map<std::size_t, BigInt> counts;
  for (std::size_t x : layers[0]) counts[x] = x == bottom_ ? 1 : 0;
  for (int j = 1; j <= k; ++j) {
    std::unordered_map<std::size_t, BigInt> next;
    for (std::size_t x : layers[static_cast<std::size_t>(j)]) {
      BigInt total = 0;
      for (std::size_t u : covers_down(x, labels[static_cast<std::size_t>(j - 1)])) {
        auto it = counts.find(u);
        if (it != counts.end()) total += it->second;
      }
      next.emplace(x, std::move(total));
    }
    counts = std::move(next);
  }
  return counts.at(top);
}

BigInt syt_rectangle_oracle(int r, int c) {
  require(r >= 1 && c >= 1 && r * c <= 64, "rectangle must satisfy r, c >= 1 and r*c <= 64");
  BigInt hooks = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) hooks *= (r - i - 1) + (c - j - 1) + 1;
  return factorial(r * c) / hooks;
}

}  // namespace schubert::combinat
