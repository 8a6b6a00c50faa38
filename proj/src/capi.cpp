#include "schubert/schubert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "schubert/error.hpp"
#include "schubert/verifier.hpp"

using namespace schubert;

struct schubert_space {
  combinat::SpaceDescriptor descriptor;
};

struct schubert_report {
  verifier::VerificationReport report;
  std::string verdict;
  std::string json;
  std::string expected;
};

namespace {

thread_local std::string last_error;

template <class F>
schubert_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SCHUBERT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<schubert_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SCHUBERT_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCHUBERT_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) { require(p != nullptr, std::string(what) + " must not be null"); }

schubert_status make_space(schubert_space** out, combinat::SpaceDescriptor (*factory)(int, int, int), int a, int b,
                           int c) {
  return guarded([&] {
    need(out, "out");
    *out = new schubert_space{factory(a, b, c)};
  });
}

std::vector<combinat::CoverLabel> to_labels(const int* labels, size_t count) {
  std::vector<combinat::CoverLabel> out;
  for (size_t i = 0; i < count; ++i) out.push_back(combinat::CoverLabel{labels[i]});
  return out;
}

}  // namespace

extern "C" {

const char* schubert_last_error(void) { return last_error.c_str(); }

const char* schubert_status_string(schubert_status status) {
  switch (status) {
    case SCHUBERT_OK: return "ok";
    case SCHUBERT_INVALID_ARGUMENT: return "invalid argument";
    case SCHUBERT_CAPACITY: return "capacity exceeded";
    case SCHUBERT_CHARACTERISTIC: return "unsupported characteristic";
    case SCHUBERT_NO_GENERAL_SUBSPACE: return "no general subspace";
    case SCHUBERT_NOT_ENOUGH_UNITS: return "not enough units";
    case SCHUBERT_SINGULAR_POINT: return "singular point";
    case SCHUBERT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void schubert_string_free(char* s) { std::free(s); }

schubert_status schubert_space_grassmannian(int r, int n, schubert_space** out) {
  return make_space(out, [](int a, int b, int) { return combinat::SpaceDescriptor::grassmannian(a, b); }, r, n, 0);
}

schubert_status schubert_space_flag(const int* steps, size_t count, int n, schubert_space** out) {
  return guarded([&] {
    need(out, "out");
    require(steps != nullptr || count == 0, "steps must not be null");
    *out = new schubert_space{combinat::SpaceDescriptor::flag(std::vector<int>(steps, steps + count), n)};
  });
}

schubert_status schubert_space_orthogonal(int r, schubert_space** out) {
  return make_space(out, [](int a, int, int) { return combinat::SpaceDescriptor::orthogonal(a); }, r, 0, 0);
}

schubert_status schubert_space_quantum(int r, int n, int q, schubert_space** out) {
  return make_space(out, [](int a, int b, int c) { return combinat::SpaceDescriptor::quantum(a, b, c); }, r, n, q);
}

void schubert_space_free(schubert_space* space) { delete space; }

int schubert_space_dimension(const schubert_space* space) { return space ? space->descriptor.dimension() : -1; }

int schubert_space_families(const schubert_space* space) { return space ? space->descriptor.families() : -1; }

schubert_status schubert_space_name(const schubert_space* space, char** out) {
  return guarded([&] {
    need(space, "space");
    need(out, "out");
    *out = dup(space->descriptor.name());
  });
}

schubert_status schubert_space_index_count(const schubert_space* space, char** out) {
  return guarded([&] {
    need(space, "space");
    need(out, "out");
    *out = dup(combinat::index_set_size(space->descriptor).get_str());
  });
}

schubert_status schubert_count_chains(const schubert_space* space, const char* index, const int* labels, size_t count,
                                      char** out) {
  return guarded([&] {
    need(space, "space");
    need(out, "out");
    require(labels != nullptr || count == 0, "labels must not be null");
    const combinat::BruhatPoset poset(space->descriptor);
    const std::size_t top = index ? poset.id_of(combinat::parse_index(space->descriptor, index)) : poset.top();
    auto chain = to_labels(labels, count);
    if (count == 0) chain.assign(static_cast<std::size_t>(poset.rank(top)), combinat::CoverLabel{1});
    *out = dup(poset.count_chains(top, chain).get_str());
  });
}

schubert_status schubert_syt_count(int r, int c, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(combinat::syt_rectangle_oracle(r, c).get_str());
  });
}

void schubert_verify_options_init(schubert_verify_options* options) {
  if (options) *options = schubert_verify_options{};
}

schubert_status schubert_verify(const schubert_space* space, const schubert_verify_options* options,
                                schubert_report** out) {
  return guarded([&] {
    need(space, "space");
    need(options, "options");
    need(out, "out");
    require(options->primes != nullptr && options->prime_count > 0, "at least one prime is required");
    const auto& d = space->descriptor;
    verifier::VerifyOptions vo;
    if (options->labels) vo.build.labels.assign(options->labels, options->labels + options->label_count);
    if (options->restriction) vo.build.restriction = combinat::parse_index(d, options->restriction);
    if (options->weights)
      vo.build.weights = geometry::TorusWeights(std::vector<int>(options->weights, options->weights + options->weight_count));
    if (options->max_attempts > 0) vo.max_attempts = options->max_attempts;
    vo.threads = options->threads;
    const auto mode = options->mode ? verifier::parse_mode(options->mode) : verifier::Mode::independent;
    std::vector<std::uint32_t> primes(options->primes, options->primes + options->prime_count);
    auto report = verifier::verify(d, primes, mode, options->seed, vo);
    auto* handle = new schubert_report{std::move(report), {}, {}, {}};
    handle->verdict = std::string(verifier::to_string(handle->report.verdict));
    handle->json = verifier::to_json(handle->report);
    handle->expected = handle->report.expected.get_str();
    *out = handle;
  });
}

void schubert_report_free(schubert_report* report) { delete report; }

const char* schubert_report_verdict(const schubert_report* report) { return report ? report->verdict.c_str() : ""; }

const char* schubert_report_json(const schubert_report* report) { return report ? report->json.c_str() : ""; }

const char* schubert_report_expected(const schubert_report* report) { return report ? report->expected.c_str() : ""; }

size_t schubert_report_solution_count(const schubert_report* report) {
  return report ? report->report.solutions.size() : 0;
}

uint32_t schubert_report_prime(const schubert_report* report) { return report ? report->report.prime : 0; }

int schubert_report_all_proportional(const schubert_report* report) {
  if (!report) return 0;
  const auto& r = report->report;
  if (r.certificates.size() != r.solutions.size()) return 0;
  for (const auto& c : r.certificates)
    if (!c.proportional) return 0;
  return 1;
}

schubert_status schubert_pieri_check(int r, int n, const char* alpha, uint32_t prime, int* holds, size_t* lhs_points,
                                     size_t* rhs_points) {
  return guarded([&] {
    need(alpha, "alpha");
    need(holds, "holds");
    const auto space = combinat::SpaceDescriptor::grassmannian(r, n);
    const auto index = std::get<combinat::GrassIndex>(combinat::parse_index(space, alpha));
    const auto result = verifier::pieri_limit_check(r, n, index, ffalg::PrimeField(prime));
    *holds = result.holds ? 1 : 0;
    if (lhs_points) *lhs_points = result.lhs_points;
    if (rhs_points) *rhs_points = result.rhs_points;
  });
}

schubert_status schubert_empty_intersection_check(const schubert_space* space, const long long* k_rows, size_t rows,
                                                  uint64_t seed, const int* weights, size_t weight_count,
                                                  uint32_t prime, unsigned threads, int* empty) {
  return guarded([&] {
    need(space, "space");
    need(empty, "empty");
    const auto& d = space->descriptor;
    const ffalg::PrimeField field(prime);
    const auto w = weights ? geometry::TorusWeights(std::vector<int>(weights, weights + weight_count))
                           : geometry::TorusWeights::standard(d.n);
    std::optional<ffalg::Subspace> k;
    if (k_rows) {
      std::vector<std::vector<long long>> m(rows, std::vector<long long>(static_cast<std::size_t>(d.n)));
      for (size_t i = 0; i < rows; ++i)
        for (int j = 0; j < d.n; ++j) m[i][static_cast<std::size_t>(j)] = k_rows[i * static_cast<std::size_t>(d.n) + j];
      k.emplace(ffalg::FieldMatrix::from_rows(field, m));
    } else if (d.kind == combinat::SpaceKind::orthogonal) {
      k.emplace(geometry::sample_general_isotropic(field, d.r, seed));
    } else {
      require(d.kind != combinat::SpaceKind::quantum, "quantum spaces have no point check");
      k.emplace(geometry::sample_general_subspace(field, d.condition_step(1), d.n, seed));
    }
    *empty = verifier::empty_common_intersection_check(d, *k, w, field, threads) ? 1 : 0;
  });
}

}  // extern "C"
