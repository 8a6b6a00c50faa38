#include "schubert/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "schubert/error.hpp"

namespace schubert::verifier {

using combinat::CoverLabel;
using combinat::FlagIndex;
using combinat::GrassIndex;
using combinat::SpaceKind;
using combinat::StrictPartition;
using geometry::TorusWeights;

std::string_view to_string(Mode mode) { return mode == Mode::family ? "family" : "independent"; }

Mode parse_mode(std::string_view text) {
  if (text == "family") return Mode::family;
  if (text == "independent") return Mode::independent;
  fail(ErrorCode::invalid_argument, "mode must be 'family' or 'independent', got '" + std::string(text) + "'");
}

std::string_view to_string(PointVerdict verdict) {
  switch (verdict) {
    case PointVerdict::transverse: return "transverse";
    case PointVerdict::nontransverse: return "nontransverse";
    case PointVerdict::singular_point: return "singular-point";
    case PointVerdict::singular_in_restriction: return "singular-in-restriction";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::count_mismatch: return "count-mismatch";
    case Verdict::nontransverse_found: return "nontransverse-found";
    case Verdict::no_generic_config: return "no-generic-config";
  }
  return "?";
}

std::vector<CoverLabel> Instance::labels() const {
  std::vector<CoverLabel> out;
  for (const auto& c : conditions) out.push_back(CoverLabel{c.family});
  return out;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_solvable(const SpaceDescriptor& space, const PrimeField& field) {
  require(space.kind != SpaceKind::quantum,
          "quantum Grassmannian instances are counted by chains only, not solved over finite fields");
  if (space.kind == SpaceKind::orthogonal && field.modulus() == 2)
    fail(ErrorCode::characteristic, "the orthogonal grassmannian needs a field of characteristic other than 2");
}

Subspace sample_condition(const SpaceDescriptor& space, const PrimeField& field, int family, std::uint64_t seed) {
  if (space.kind == SpaceKind::orthogonal) return geometry::sample_general_isotropic(field, space.r, seed);
  return geometry::sample_general_subspace(field, space.condition_step(family), space.n, seed);
}

// Restriction target of step `s` as a Grassmannian index.
GrassIndex restriction_target(const SchubertIndex& w, std::size_t s) {
  if (const auto* g = std::get_if<GrassIndex>(&w)) return *g;
  if (const auto* f = std::get_if<FlagIndex>(&w)) return f->projection(s);
  return std::get<StrictPartition>(w).grassmannian_index();
}

std::vector<int> point_steps(const SpaceDescriptor& space) {
  return space.kind == SpaceKind::flag ? space.steps : std::vector<int>{space.r};
}

FieldMatrix canonical_form(const SpaceDescriptor& space, const FieldMatrix& frame) {
  if (space.kind != SpaceKind::flag) return Subspace(frame).basis();
  FieldMatrix out(frame.field(), 0, frame.cols());
  for (int step : space.steps) out = out.stacked(Subspace(frame.top_rows(static_cast<std::size_t>(step))).basis());
  return out;
}

bool canonical_less(const Solution& a, const Solution& b) {
  const auto x = a.canonical.data(), y = b.canonical.data();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Tests whether a point satisfies every condition of an instance.
class PointFilter {
public:
  explicit PointFilter(const Instance& inst) : inst_(inst), steps_(point_steps(inst.space)) {
    for (const auto& c : inst.conditions) {
      const int step = inst.space.kind == SpaceKind::orthogonal ? inst.space.r : inst.space.condition_step(c.family);
      step_of_.push_back(static_cast<std::size_t>(std::find(steps_.begin(), steps_.end(), step) - steps_.begin()));
      if (inst.space.kind != SpaceKind::orthogonal) laplace_.push_back(geometry::laplace_coefficients(c.subspace));
    }
  }

  bool accepts(const FieldMatrix& frame) const {
    const auto& f = inst_.field;
    if (inst_.space.kind == SpaceKind::orthogonal) {
      const std::size_t full = 2 * frame.rows();
      for (const auto& c : inst_.conditions)
        if (frame.stacked(c.subspace.basis()).rank() == full) return false;
    } else {
      std::vector<std::optional<geometry::PluckerVector>> pl(steps_.size());
      for (std::size_t i = 0; i < inst_.conditions.size(); ++i) {
        auto& p = pl[step_of_[i]];
        if (!p) p = geometry::plucker_coordinates(frame.top_rows(static_cast<std::size_t>(steps_[step_of_[i]])));
        Element s = 0;
        const auto& k = laplace_[i];
        for (std::size_t b = 0; b < k.size(); ++b) s = f.add(s, f.mul(p->coords[b], k[b]));
        if (s != 0) return false;
      }
    }
    if (!inst_.restriction) return true;
    if (inst_.space.kind == SpaceKind::flag)
      return ffalg::schubert_membership(ffalg::FlagPoint(steps_, frame), std::get<FlagIndex>(*inst_.restriction));
    return ffalg::schubert_membership(Subspace(frame), *inst_.restriction);
  }

private:
  const Instance& inst_;
  std::vector<int> steps_;
  std::vector<std::size_t> step_of_;
  std::vector<std::vector<Element>> laplace_;
};

void check_point_guard(const Instance& inst) {
  const auto p = inst.field.modulus();
  BigInt count;
  switch (inst.space.kind) {
    case SpaceKind::grassmannian: count = ffalg::grassmannian_cardinality(p, inst.space.r, inst.space.n); break;
    case SpaceKind::flag: count = ffalg::flag_cardinality(p, inst.space.steps, inst.space.n); break;
    case SpaceKind::orthogonal: count = ffalg::isotropic_cardinality(p, inst.space.r); break;
    case SpaceKind::quantum: break;
  }
  if (count > kCapacityGuard)
    fail(ErrorCode::capacity, inst.space.name() + " over F_" + std::to_string(p) + " has " + count.get_str() +
                                  " points, above the guard of 10^7");
}

}  // namespace

Instance build_instance(const SpaceDescriptor& space, const PrimeField& field, Mode mode, std::uint64_t seed,
                        const BuildOptions& options) {
  require_solvable(space, field);
  Instance inst{space, field, mode, seed, {}, options.restriction, options.weights.value_or(TorusWeights::standard(space.n))};
  if (inst.restriction) combinat::validate(space, *inst.restriction);
  require(inst.weights.size() == space.n, "torus weights must have one character per coordinate");

  const int count = inst.restriction ? combinat::rank(*inst.restriction) : space.dimension();
  std::vector<int> labels = options.labels;
  if (labels.empty()) labels.assign(static_cast<std::size_t>(count), 1);
  require(static_cast<int>(labels.size()) == count,
          "expected " + std::to_string(count) + " condition labels, got " + std::to_string(labels.size()));
  for (int label : labels) space.condition_step(label);

  std::mt19937_64 rng(seed);
  if (mode == Mode::family) {
    if (space.kind == SpaceKind::orthogonal)
      require(inst.weights.preserves_split_form(), "family mode on OG needs weights with i_j + i_{n+1-j} constant");
    const std::uint32_t units = field.modulus() - 1;
    if (units < static_cast<std::uint32_t>(count))
      fail(ErrorCode::not_enough_units, "family mode needs " + std::to_string(count) + " distinct units but F_" +
                                            std::to_string(field.modulus()) + " has only " + std::to_string(units));
    std::vector<Element> s(units);
    for (std::uint32_t i = 0; i < units; ++i) s[i] = i + 1;
    for (std::uint32_t i = units - 1; i > 0; --i) std::swap(s[i], s[rng() % (i + 1)]);
    std::map<int, Subspace> base;
    for (int label : labels)
      if (!base.count(label)) base.emplace(label, sample_condition(space, field, label, rng()));
    for (std::size_t i = 0; i < labels.size(); ++i)
      inst.conditions.push_back(
          Condition{labels[i], geometry::torus_act(s[i], base.at(labels[i]), inst.weights), s[i]});
  } else {
    for (int label : labels) inst.conditions.push_back(Condition{label, sample_condition(space, field, label, rng()), {}});
  }
  return inst;
}

unsigned default_threads() {
  if (const char* env = std::getenv("SCHUBERT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Solution> solve(const Instance& inst, unsigned threads) {
  require_solvable(inst.space, inst.field);
  check_point_guard(inst);
  const unsigned workers = threads ? threads : default_threads();
  const PointFilter filter(inst);
  const auto& space = inst.space;

  std::vector<GrassIndex> cells;
  if (space.kind != SpaceKind::orthogonal) cells = ffalg::grassmannian_cells(point_steps(space).back(), space.n);

  std::vector<std::vector<Solution>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      auto keep = [&](const FieldMatrix& frame) {
        if (filter.accepts(frame)) found[w].push_back(Solution{frame, canonical_form(space, frame)});
      };
      if (space.kind == SpaceKind::orthogonal) {
        std::size_t counter = 0;
        ffalg::enumerate_isotropic_bases(inst.field, space.r, [&](const FieldMatrix& m) {
          if (counter++ % workers == w) keep(Subspace(m).basis());
        });
        return;
      }
      for (std::size_t c = w; c < cells.size(); c += workers) {
        if (space.kind == SpaceKind::grassmannian)
          ffalg::enumerate_cell(inst.field, cells[c], [&](const FieldMatrix& m) {
            if (filter.accepts(m)) found[w].push_back(Solution{Subspace(m).basis(), Subspace(m).basis()});
          });
        else
          ffalg::enumerate_flags_in_cell(inst.field, space.steps, space.n, cells[c], keep);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Solution> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Local chart (I + X) G at a point; X supported on entries (j, k) with
// block(j) < block(k), where G's first r_m rows are the point's frame and the
// remaining rows are unit vectors on the non-pivot columns.
struct Chart {
  FieldMatrix g;
  std::vector<int> steps;
  std::vector<std::pair<std::size_t, std::size_t>> coords;

  Chart(const FieldMatrix& frame, std::vector<int> steps_in) : g(frame.field(), frame.cols(), frame.cols()), steps(std::move(steps_in)) {
    const std::size_t n = frame.cols(), top = frame.rows();
    std::vector<std::size_t> pivots;
    frame.rref(&pivots);
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = frame(i, j);
    std::size_t row = top;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) g(row++, c) = 1;
    for (std::size_t j = 0; j < top; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (block(j) < block(k)) coords.emplace_back(j, k);
  }

  std::size_t block(std::size_t row) const {
    std::size_t b = 0;
    while (b < steps.size() && static_cast<std::size_t>(steps[b]) <= row) ++b;
    return b;
  }

  // First `count` rows of G with row j replaced by row k of G.
  FieldMatrix replaced(std::size_t count, std::size_t j, std::size_t k) const {
    FieldMatrix m = g.top_rows(count);
    for (std::size_t c = 0; c < g.cols(); ++c) m(j, c) = g(k, c);
    return m;
  }
};

std::vector<Element> restrict_to(const FieldMatrix& tangent, std::span<const Element> raw) {
  return tangent.apply(raw);
}

std::size_t rank_of(const PrimeField& f, const std::vector<std::vector<Element>>& rows, std::size_t width) {
  FieldMatrix m(f, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  return m.rank();
}

bool is_zero(std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [](Element e) { return e == 0; });
}

}  // namespace

Certificate certify_transverse(const Solution& point, const Instance& inst) {
  const auto& f = inst.field;
  const auto& space = inst.space;
  const bool orthogonal = space.kind == SpaceKind::orthogonal;
  const Chart chart(point.frame, point_steps(space));
  const std::size_t n = static_cast<std::size_t>(space.n);
  const std::size_t width = chart.coords.size();
  const std::size_t top = point.frame.rows();

  // Linear constraints cutting out the tangent space inside the chart.
  std::vector<std::vector<Element>> constraints;
  const ffalg::BilinearForm form(space.r);
  if (orthogonal) {
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t j = i; j < top; ++j) {
        std::vector<Element> row(width, 0);
        for (std::size_t c = 0; c < width; ++c) {
          const auto [a, k] = chart.coords[c];
          if (a == i) row[c] = f.add(row[c], form.apply(f, chart.g.row(k), chart.g.row(j)));
          if (a == j) row[c] = f.add(row[c], form.apply(f, chart.g.row(i), chart.g.row(k)));
        }
        constraints.push_back(std::move(row));
      }
  }
  int expected_dim = space.dimension();
  if (inst.restriction) {
    expected_dim = combinat::rank(*inst.restriction);
    for (std::size_t s = 0; s < chart.steps.size(); ++s) {
      const auto target = restriction_target(*inst.restriction, s);
      const auto ri = static_cast<std::size_t>(chart.steps[s]);
      for (const auto& beta : geometry::plucker_indices(static_cast<int>(ri), space.n)) {
        if (combinat::grassmannian_leq(GrassIndex{space.n, beta}, target)) continue;
        std::vector<int> cols(beta.begin(), beta.end());
        for (int& c : cols) --c;
        std::vector<Element> row(width, 0);
        for (std::size_t c = 0; c < width; ++c) {
          const auto [a, k] = chart.coords[c];
          if (a < ri) row[c] = chart.replaced(ri, a, k).select_columns(cols).det();
        }
        constraints.push_back(std::move(row));
      }
    }
  }
  FieldMatrix cons(f, constraints.size(), width);
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) cons(i, j) = constraints[i][j];
  const FieldMatrix tangent = cons.kernel();  // rows span the tangent space

  Certificate cert;
  cert.tangent_dimension = static_cast<int>(tangent.rows());
  const std::size_t d = tangent.rows();

  std::vector<std::vector<Element>> functionals, gradients;
  bool singular = false;
  cert.proportional = true;
  for (const auto& cond : inst.conditions) {
    const auto ri = static_cast<std::size_t>(orthogonal ? space.r : space.condition_step(cond.family));
    const FieldMatrix e_rows = point.frame.top_rows(ri);

    // route (a): phi -> lambda(phi(v)) through the projection to the ri-th component
    std::vector<Element> raw(width, 0);
    try {
      if (space.kind == SpaceKind::flag) {
        const auto data = geometry::incidence_data(e_rows, cond.subspace);
        for (std::size_t c = 0; c < width; ++c) {
          const auto [a, k] = chart.coords[c];
          if (a >= ri) continue;
          Element lk = 0;
          for (std::size_t x = 0; x < n; ++x) lk = f.add(lk, f.mul(data.normal[x], chart.g(k, x)));
          raw[c] = f.mul(data.coefficients[a], lk);
        }
      } else {
        raw = geometry::tangent_functional(Subspace(point.frame), cond.subspace, orthogonal ? &form : nullptr).covector;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_point) throw;
      singular = true;
    }

    // route (b): gradient of the incidence determinant by single-row replacement
    std::vector<Element> grad(d, 0);
    if (orthogonal) {
      for (std::size_t ec = 0; ec < n && is_zero(grad); ++ec) {
        FieldMatrix unit(f, 1, n);
        unit(0, ec) = 1;
        std::vector<Element> g_raw(width, 0);
        for (std::size_t c = 0; c < width; ++c) {
          const auto [a, k] = chart.coords[c];
          g_raw[c] = chart.replaced(ri, a, k).stacked(cond.subspace.basis()).stacked(unit).det();
        }
        grad = restrict_to(tangent, g_raw);
      }
    } else {
      std::vector<Element> g_raw(width, 0);
      for (std::size_t c = 0; c < width; ++c) {
        const auto [a, k] = chart.coords[c];
        if (a < ri) g_raw[c] = cond.subspace.basis().stacked(chart.replaced(ri, a, k)).det();
      }
      grad = restrict_to(tangent, g_raw);
    }

    const auto fun = restrict_to(tangent, raw);
    if (is_zero(fun) || is_zero(grad) || rank_of(f, {fun, grad}, d) != 1) cert.proportional = false;
    functionals.push_back(fun);
    gradients.push_back(grad);
  }

  const std::size_t l = inst.conditions.size();
  cert.tangent_rank = singular ? 0 : static_cast<int>(rank_of(f, functionals, d));
  cert.jacobian_rank = static_cast<int>(rank_of(f, gradients, d));
  if (singular) {
    cert.proportional = false;
    cert.verdict = PointVerdict::singular_point;
  } else if (cert.tangent_dimension > expected_dim) {
    cert.verdict = PointVerdict::singular_in_restriction;
  } else if (static_cast<std::size_t>(cert.tangent_rank) == l && static_cast<std::size_t>(cert.jacobian_rank) == l &&
             d == l) {
    cert.verdict = PointVerdict::transverse;
  } else {
    cert.verdict = PointVerdict::nontransverse;
  }
  return cert;
}

// ---------------------------------------------------------------------------

bool VerificationReport::operator==(const VerificationReport& o) const {
  return space == o.space && restriction == o.restriction && prime == o.prime && mode == o.mode && seed == o.seed &&
         conditions == o.conditions && labels == o.labels && parameters == o.parameters && expected == o.expected &&
         solutions == o.solutions && certificates == o.certificates && attempts == o.attempts && verdict == o.verdict;
}

VerificationReport verify(const SpaceDescriptor& space, const std::vector<std::uint32_t>& primes, Mode mode,
                          std::uint64_t seed, const VerifyOptions& options) {
  require(!primes.empty(), "prime ladder is empty");
  require(options.max_attempts >= 1, "max attempts must be positive");
  std::vector<PrimeField> fields;
  for (auto p : primes) {
    fields.emplace_back(p);
    require_solvable(space, fields.back());
  }

  VerificationReport report;
  report.space = space;
  if (options.build.restriction) report.restriction = combinat::to_string(*options.build.restriction);
  report.mode = mode;
  report.seed = seed;
  report.prime = primes.back();

  const combinat::BruhatPoset poset(space);
  const std::size_t target = options.build.restriction ? poset.id_of(*options.build.restriction) : poset.top();

  bool any_solved = false, any_mismatch = false, any_nontransverse = false;
  for (const auto& field : fields) {
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
      AttemptRecord rec;
      rec.prime = field.modulus();
      rec.seed = splitmix(seed ^ splitmix((static_cast<std::uint64_t>(field.modulus()) << 32) ^
                                          static_cast<std::uint64_t>(attempt)));
      Instance inst;
      try {
        inst = build_instance(space, field, mode, rec.seed, options.build);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::no_general_subspace && e.code() != ErrorCode::not_enough_units) throw;
        rec.outcome = "escalate";
        rec.detail = e.what();
        report.attempts.push_back(std::move(rec));
        break;  // deterministic failure at this prime: move up the ladder
      }
      const auto labels = inst.labels();
      const BigInt expected = poset.count_chains(target, labels);
      auto solutions = solve(inst, options.threads);
      rec.solutions = static_cast<unsigned long>(solutions.size());

      std::vector<Certificate> certs;
      Verdict verdict;
      if (solutions.size() != expected) {
        verdict = Verdict::count_mismatch;
        any_mismatch = true;
        if (expected > 0 && BigInt(static_cast<unsigned long>(solutions.size())) > 4 * expected)
          rec.detail = "degenerate configuration: more than 4x the expected number of points";
        else
          rec.detail = "some solutions are not rational over this field, or the configuration is special";
      } else {
        bool all = true;
        for (const auto& s : solutions) {
          certs.push_back(certify_transverse(s, inst));
          all = all && certs.back().verdict == PointVerdict::transverse && certs.back().proportional;
        }
        verdict = all ? Verdict::confirmed : Verdict::nontransverse_found;
        if (!all) {
          any_nontransverse = true;
          rec.detail = "a solution failed certification";
        }
      }
      rec.outcome = std::string(to_string(verdict));
      report.attempts.push_back(std::move(rec));

      any_solved = true;
      report.prime = field.modulus();
      report.conditions.clear();
      report.labels.clear();
      report.parameters.clear();
      for (const auto& c : inst.conditions) {
        report.conditions.push_back(c.subspace.basis());
        report.labels.push_back(c.family);
        report.parameters.push_back(c.parameter);
      }
      report.expected = expected;
      report.solutions.clear();
      for (const auto& s : solutions) report.solutions.push_back(s.canonical);
      report.certificates = std::move(certs);
      if (verdict == Verdict::confirmed) {
        report.verdict = Verdict::confirmed;
        return report;
      }
    }
  }
  if (!any_solved) {
    report.expected = poset.count_chains(target, std::vector<CoverLabel>(
                                                     static_cast<std::size_t>(poset.rank(target)),
                                                     CoverLabel{options.build.labels.empty() ? 1 : options.build.labels[0]}));
    if (!options.build.labels.empty()) {
      std::vector<CoverLabel> labels;
      for (int l : options.build.labels) labels.push_back(CoverLabel{l});
      report.expected = poset.count_chains(target, labels);
    }
  }
  report.verdict = any_nontransverse ? Verdict::nontransverse_found
                   : any_mismatch    ? Verdict::count_mismatch
                                     : Verdict::no_generic_config;
  return report;
}

// ---------------------------------------------------------------------------

PieriResult pieri_limit_check(int r, int n, const GrassIndex& alpha, const PrimeField& field) {
  const auto space = SpaceDescriptor::grassmannian(r, n);
  combinat::validate(space, alpha);
  const combinat::BruhatPoset poset(space);
  std::vector<GrassIndex> covered;
  for (const auto& b : poset.covers_down(alpha, CoverLabel{1})) covered.push_back(std::get<GrassIndex>(b));

  PieriResult out;
  out.holds = true;
  ffalg::enumerate_grassmannian(field, r, n, [&](const Subspace& h) {
    const bool lhs = ffalg::schubert_membership(h, alpha) && geometry::plucker_coordinates(h).at(alpha) == 0;
    const bool rhs = std::any_of(covered.begin(), covered.end(),
                                 [&](const GrassIndex& b) { return ffalg::schubert_membership(h, b); });
    out.lhs_points += lhs;
    out.rhs_points += rhs;
    if (lhs != rhs) out.holds = false;
  });
  return out;
}

bool empty_common_intersection_check(const SpaceDescriptor& space, const Subspace& k, const TorusWeights& weights,
                                     const PrimeField& field, unsigned threads) {
  require_solvable(space, field);
  require(k.field() == field && static_cast<int>(k.ambient()) == space.n, "condition subspace does not match the space");
  int family = 1;
  if (space.kind == SpaceKind::orthogonal) {
    require(static_cast<int>(k.dim()) == space.r && ffalg::BilinearForm(space.r).is_isotropic(k.basis()),
            "OG conditions are maximal isotropic subspaces");
    require(weights.preserves_split_form(), "torus weights must preserve the split form up to scale");
  } else {
    const auto steps = point_steps(space);
    auto it = std::find(steps.begin(), steps.end(), space.n - static_cast<int>(k.dim()));
    require(it != steps.end(), "condition subspace has no complementary step in " + space.name());
    family = static_cast<int>(it - steps.begin()) + 1;
  }
  Instance inst{space, field, Mode::family, 0, {}, std::nullopt, weights};
  for (Element s = 1; s < field.modulus(); ++s)
    inst.conditions.push_back(Condition{family, geometry::torus_act(s, k, weights), s});
  return solve(inst, threads).empty();
}

}  // namespace schubert::verifier
