// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/verifier.hpp"

using namespace schubert;
using namespace schubert::verifier;
using combinat::BruhatPoset;
using combinat::CoverLabel;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<VerificationReport> certified;  // reports of criteria 4-7, for criterion 9

bool run(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = out.pass && in_time;
  std::printf("%s  [%2d] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", number, title.c_str(), out.detail.c_str(), secs,
              in_time ? "" : ", over time limit");
  std::fflush(stdout);
  return pass;
}

std::vector<CoverLabel> ones(int count) { return std::vector<CoverLabel>(static_cast<std::size_t>(count)); }

bool all_transverse(const VerificationReport& r) {
  if (r.certificates.size() != r.solutions.size()) return false;
  for (const auto& c : r.certificates)
    if (c.verdict != PointVerdict::transverse || c.tangent_rank != c.jacobian_rank) return false;
  return true;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << r.space.name() << " p=" << r.prime << " verdict=" << to_string(r.verdict) << " solutions=" << r.solutions.size()
    << " expected=" << r.expected << " attempts=" << r.attempts.size();
  return s.str();
}

}  // namespace

int main() {
  int failures = 0;

  failures += !run(1, "G(3,7) chain count", 1.0, [] {
    const BruhatPoset poset(SpaceDescriptor::grassmannian(3, 7));
    const BigInt c = poset.count_chains(poset.top(), ones(12));
    return Outcome{c == 462, "count=" + c.get_str()};
  });

  failures += !run(2, "chain counts equal hook-length SYT counts, r(n-r) <= 16", 10.0, [] {
    int checked = 0;
    std::string bad;
    for (int n = 2; n <= 17; ++n)
      for (int r = 1; r < n; ++r) {
        if (r * (n - r) > 16) continue;
        const BruhatPoset poset(SpaceDescriptor::grassmannian(r, n));
        const BigInt c = poset.count_chains(poset.top(), ones(r * (n - r)));
        if (c != combinat::syt_rectangle_oracle(r, n - r)) bad += " G(" + std::to_string(r) + "," + std::to_string(n) + ")";
        ++checked;
      }
    return Outcome{bad.empty(), std::to_string(checked) + " Grassmannians checked" + (bad.empty() ? "" : ", mismatches:" + bad)};
  });

  failures += !run(3, "quantum chain counts r=2 n=5 q=0..3", 5.0, [] {
    const long expected[] = {5, 55, 610, 6765};
    std::string got;
    bool ok = true;
    for (int q = 0; q <= 3; ++q) {
      const BruhatPoset poset(SpaceDescriptor::quantum(2, 5, q));
      const BigInt c = poset.count_chains(poset.top(), ones(6 + 5 * q));
      ok = ok && c == expected[q];
      got += (q ? "," : "") + c.get_str();
    }
    return Outcome{ok, "counts=" + got};
  });

  failures += !run(4, "G(2,4) verified over F_p, p <= 7", 10.0, [] {
    const auto r = verify(SpaceDescriptor::grassmannian(2, 4), {3, 5, 7}, Mode::independent, 42);
    bool ranks = true;
    for (const auto& c : r.certificates) ranks = ranks && c.tangent_rank == 4 && c.jacobian_rank == 4;
    certified.push_back(r);
    return Outcome{r.verdict == Verdict::confirmed && r.solutions.size() == 2 && all_transverse(r) && ranks && r.prime <= 7,
                   summary(r)};
  });

  failures += !run(5, "G(2,5) over F_7, family mode on all 6 units", 60.0, [] {
    const auto r = verify(SpaceDescriptor::grassmannian(2, 5), {7}, Mode::family, 1);
    std::set<Element> units;
    for (const auto& p : r.parameters)
      if (p) units.insert(*p);
    certified.push_back(r);
    return Outcome{r.verdict == Verdict::confirmed && r.solutions.size() == 5 && all_transverse(r) && units.size() == 6,
                   summary(r) + " units=" + std::to_string(units.size())};
  });

  failures += !run(6, "OG(3) over F_5 or F_7, and p = 2 rejected", 60.0, [] {
    const auto r = verify(SpaceDescriptor::orthogonal(3), {5, 7}, Mode::independent, 1);
    certified.push_back(r);
    std::string p2 = "p=2 accepted";
    bool rejected = false;
    try {
      verify(SpaceDescriptor::orthogonal(3), {2}, Mode::independent, 1);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::characteristic;
      p2 = std::string("p=2: ") + e.what();
    }
    return Outcome{r.verdict == Verdict::confirmed && r.solutions.size() == 2 && all_transverse(r) && rejected,
                   summary(r) + "; " + p2};
  });

  failures += !run(7, "Fl(1,2;3) labels 1,1,2: solutions equal Monk chain count", 10.0, [] {
    VerifyOptions opts;
    opts.build.labels = {1, 1, 2};
    const auto r = verify(SpaceDescriptor::flag({1, 2}, 3), {5, 7}, Mode::independent, 1, opts);
    const BruhatPoset poset(SpaceDescriptor::flag({1, 2}, 3));
    const std::vector<CoverLabel> labels{{1}, {1}, {2}};
    const BigInt chains = poset.count_chains(poset.top(), labels);
    certified.push_back(r);
    return Outcome{r.verdict == Verdict::confirmed && BigInt(static_cast<unsigned long>(r.solutions.size())) == chains &&
                       all_transverse(r),
                   summary(r) + " monk_chains=" + chains.get_str()};
  });

  failures += !run(8, "limit identity for every alpha in G(2,4), G(2,5) over F_3", 30.0, [] {
    const PrimeField f(3);
    int checked = 0;
    std::string bad;
    for (int n : {4, 5}) {
      const BruhatPoset poset(SpaceDescriptor::grassmannian(2, n));
      for (const auto& x : poset.elements()) {
        const auto& alpha = std::get<combinat::GrassIndex>(x);
        if (!pieri_limit_check(2, n, alpha, f).holds) bad += " " + combinat::to_string(x);
        ++checked;
      }
    }
    return Outcome{bad.empty(), std::to_string(checked) + " indices checked" + (bad.empty() ? "" : ", failures:" + bad)};
  });

  failures += !run(9, "tangent functional proportional to Jacobian row at every solution of [4]-[7]", 0, [] {
    std::size_t points = 0;
    bool ok = certified.size() == 4;
    for (const auto& r : certified) {
      ok = ok && r.certificates.size() == r.solutions.size();
      for (const auto& c : r.certificates) {
        ok = ok && c.proportional;
        ++points;
      }
    }
    return Outcome{ok && points > 0, std::to_string(points) + " points in " + std::to_string(certified.size()) + " reports"};
  });

  failures += !run(10, "G(2,4) confirmed at >= 3 distinct primes", 30.0, [] {
    std::vector<std::uint32_t> confirmed;
    std::size_t escalations = 0;
    std::string log;
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      const auto r = verify(SpaceDescriptor::grassmannian(2, 4), {p}, Mode::independent, 42);
      for (const auto& a : r.attempts) escalations += a.outcome == "escalate";
      if (r.verdict == Verdict::confirmed && r.solutions.size() == 2 && all_transverse(r)) confirmed.push_back(p);
      log += " p=" + std::to_string(p) + ":" + std::string(to_string(r.verdict)) + "/" + std::to_string(r.attempts.size());
    }
    return Outcome{confirmed.size() >= 3, std::to_string(confirmed.size()) + " primes confirmed;" + log +
                                              "; escalations recorded=" + std::to_string(escalations)};
  });

  failures += !run(11, "no common point of the translates K(s) for general K over F_7", 30.0, [] {
    const PrimeField f(7);
    bool ok = true;
    std::string detail;
    for (int n : {4, 5}) {
      const auto space = SpaceDescriptor::grassmannian(2, n);
      const auto weights = geometry::TorusWeights::standard(n);
      const bool empty = empty_common_intersection_check(space, geometry::sample_general_subspace(f, 2, n, 0), weights, f);
      int trues = 0;
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        trues += empty_common_intersection_check(space, geometry::sample_general_subspace(f, 2, n, seed), weights, f);
      ok = ok && empty;
      detail += space.name() + (empty ? " true" : " false") + " (empty for " + std::to_string(trues) + "/20 sampled K) ";
    }
    return Outcome{ok, detail};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
