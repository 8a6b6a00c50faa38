#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/schubert.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

struct SpaceArgs {
  std::string kind = "grass";
  int r = 0;
  int n = 0;
  int q = 0;
  std::vector<int> steps;
};

struct Space {
  schubert_space* handle = nullptr;
  ~Space() { schubert_space_free(handle); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { schubert_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

void check(schubert_status status) {
  if (status != SCHUBERT_OK)
    throw CliError{std::string(schubert_status_string(status)) + ": " + schubert_last_error()};
}

void add_space_options(CLI::App* app, SpaceArgs& args) {
  app->add_option("--space", args.kind, "grass | flag | og | quantum")
      ->check(CLI::IsMember({"grass", "flag", "og", "quantum"}));
  app->add_option("--r", args.r, "plane dimension (grass, quantum) or rank (og)");
  app->add_option("--n", args.n, "ambient dimension");
  app->add_option("--q", args.q, "degree (quantum)");
  app->add_option("--steps", args.steps, "flag steps, comma separated")->delimiter(',');
}

void open_space(const SpaceArgs& a, Space& out) {
  if (a.kind == "grass") check(schubert_space_grassmannian(a.r, a.n, &out.handle));
  else if (a.kind == "flag") check(schubert_space_flag(a.steps.data(), a.steps.size(), a.n, &out.handle));
  else if (a.kind == "og") check(schubert_space_orthogonal(a.r, &out.handle));
  else check(schubert_space_quantum(a.r, a.n, a.q, &out.handle));
}

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot open output file '" + path + "'"};
  out << text;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Every r-subset of [1, n], lexicographically.
std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = i + 1;
  if (r < 0 || r > n) return out;
  while (true) {
    out.push_back(a);
    int i = r - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) return out;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct TableRow {
  std::string space;
  std::string params;
  int rank = 0;
  std::string count;  // empty when skipped
  std::string note;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus: chain counts and finite-field verification"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "write to this file instead of stdout");
  };

  SpaceArgs space_args;
  std::string index;
  std::vector<int> labels;
  auto* count = app.add_subcommand("count", "count saturated chains (the degree of the Schubert problem)");
  add_space_options(count, space_args);
  count->add_option("--w", index, "upper element of the chains (default: top)");
  count->add_option("--labels", labels, "cover family of each step, comma separated")->delimiter(',');
  add_io(count);

  std::vector<std::uint32_t> primes;
  std::string mode = "independent";
  std::uint64_t seed = 0;
  int max_attempts = 20;
  std::vector<int> weights;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "solve a random instance over F_p and certify transversality");
  add_space_options(verify, space_args);
  verify->add_option("--primes", primes, "prime ladder, comma separated")->delimiter(',')->required();
  verify->add_option("--mode", mode, "family | independent")->check(CLI::IsMember({"family", "independent"}));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--labels", labels, "condition families, comma separated")->delimiter(',');
  verify->add_option("--w", index, "restrict to the Schubert variety X_w");
  verify->add_option("--weights", weights, "torus characters, comma separated")->delimiter(',');
  verify->add_option("--max-attempts", max_attempts, "attempts per prime")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "worker threads (default SCHUBERT_THREADS or all cores)");
  add_io(verify);

  std::string alpha;
  std::uint32_t prime = 3;
  auto* pieri = app.add_subcommand("pieri", "check the limit identity for p_alpha = 0 on Omega_alpha");
  pieri->add_option("--r", space_args.r, "plane dimension")->required();
  pieri->add_option("--n", space_args.n, "ambient dimension")->required();
  pieri->add_option("--alpha", alpha, "index alpha (default: every index)");
  pieri->add_option("--prime", prime, "field size");
  add_io(pieri);

  auto* empty = app.add_subcommand("empty", "check that the translates K(s), s in F_p^x, have no common point");
  add_space_options(empty, space_args);
  empty->add_option("--prime", prime, "field size");
  empty->add_option("--seed", seed, "seed for the general subspace K");
  empty->add_option("--weights", weights, "torus characters, comma separated")->delimiter(',');
  empty->add_option("--threads", threads, "worker threads");
  add_io(empty);

  std::string table_kind = "grass";
  int from = 0, to = 0;
  auto* table = app.add_subcommand("table", "chain counts over a range of sizes");
  table->add_option("--space", table_kind, "grass | quantum | og")->check(CLI::IsMember({"grass", "quantum", "og"}));
  table->add_option("--r", space_args.r, "plane dimension (grass, quantum)");
  table->add_option("--n", space_args.n, "ambient dimension (quantum)");
  table->add_option("--from", from, "first size: n (grass), q (quantum) or r (og)")->required();
  table->add_option("--to", to, "last size")->required();
  add_io(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (count->parsed()) {
      Space space;
      open_space(space_args, space);
      OwnedString name, result;
      check(schubert_space_name(space.handle, &name.s));
      check(schubert_count_chains(space.handle, index.empty() ? nullptr : index.c_str(), labels.data(), labels.size(),
                                  &result.s));
      std::ostringstream out;
      if (format == "json")
        out << "{\"space\": \"" << json_escape(name.str()) << "\", \"w\": "
            << (index.empty() ? "null" : "\"" + index + "\"") << ", \"labels\": [" << join(labels, ',')
            << "], \"count\": \"" << result.str() << "\"}\n";
      else if (format == "csv")
        out << "space,w,labels,count\n\"" << name.str() << "\"," << index << ",\"" << join(labels, ' ') << "\","
            << result.str() << "\n";
      else
        out << result.str() << "\n";
      emit(out.str(), output);
      return 0;
    }

    if (verify->parsed()) {
      Space space;
      open_space(space_args, space);
      schubert_verify_options opts;
      schubert_verify_options_init(&opts);
      opts.primes = primes.data();
      opts.prime_count = primes.size();
      opts.mode = mode.c_str();
      opts.seed = seed;
      opts.labels = labels.empty() ? nullptr : labels.data();
      opts.label_count = labels.size();
      opts.restriction = index.empty() ? nullptr : index.c_str();
      opts.weights = weights.empty() ? nullptr : weights.data();
      opts.weight_count = weights.size();
      opts.max_attempts = max_attempts;
      opts.threads = threads;
      schubert_report* raw = nullptr;
      check(schubert_verify(space.handle, &opts, &raw));
      std::unique_ptr<schubert_report, decltype(&schubert_report_free)> report(raw, schubert_report_free);
      const std::string verdict = schubert_report_verdict(raw);
      OwnedString name;
      check(schubert_space_name(space.handle, &name.s));
      std::ostringstream summary;
      summary << name.str() << " p=" << schubert_report_prime(raw) << " expected=" << schubert_report_expected(raw)
              << " solutions=" << schubert_report_solution_count(raw) << " verdict=" << verdict;
      if (format == "json") {
        emit(std::string(schubert_report_json(raw)) + "\n", output);
        if (!output.empty()) std::cout << summary.str() << "\n";
      } else if (format == "csv") {
        std::ostringstream out;
        out << "space,prime,expected,solutions,verdict\n\"" << name.str() << "\"," << schubert_report_prime(raw) << ","
            << schubert_report_expected(raw) << "," << schubert_report_solution_count(raw) << "," << verdict << "\n";
        emit(out.str(), output);
      } else {
        emit(summary.str() + "\n", output);
      }
      return verdict == "confirmed" ? 0 : kExitFalse;
    }

    if (pieri->parsed()) {
      std::vector<std::string> alphas;
      if (!alpha.empty()) alphas.push_back(alpha);
      else
        for (const auto& a : subsets(space_args.r, space_args.n)) alphas.push_back(join(a));
      bool all = true;
      std::ostringstream out;
      if (format == "csv") out << "r,n,alpha,prime,holds,lhs_points,rhs_points\n";
      if (format == "json") out << "[";
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        int holds = 0;
        size_t lhs = 0, rhs = 0;
        check(schubert_pieri_check(space_args.r, space_args.n, alphas[i].c_str(), prime, &holds, &lhs, &rhs));
        all = all && holds;
        const char* verdict = holds ? "true" : "false";
        if (format == "csv")
          out << space_args.r << "," << space_args.n << ",\"" << alphas[i] << "\"," << prime << "," << verdict << ","
              << lhs << "," << rhs << "\n";
        else if (format == "json")
          out << (i ? ", " : "") << "{\"alpha\": \"" << alphas[i] << "\", \"prime\": " << prime
              << ", \"holds\": " << verdict << ", \"lhs_points\": \"" << lhs << "\", \"rhs_points\": \"" << rhs
              << "\"}";
        else
          out << "alpha=" << alphas[i] << " " << verdict << " (" << lhs << " = " << rhs << " points)\n";
      }
      if (format == "json") out << "]\n";
      if (format == "text" && alphas.size() > 1) out << (all ? "true" : "false") << "\n";
      emit(out.str(), output);
      return all ? 0 : kExitFalse;
    }

    if (empty->parsed()) {
      Space space;
      open_space(space_args, space);
      int result = 0;
      check(schubert_empty_intersection_check(space.handle, nullptr, 0, seed, weights.empty() ? nullptr : weights.data(),
                                              weights.size(), prime, threads, &result));
      const char* verdict = result ? "true" : "false";
      std::ostringstream out;
      if (format == "json") out << "{\"prime\": " << prime << ", \"seed\": \"" << seed << "\", \"empty\": " << verdict << "}\n";
      else if (format == "csv") out << "prime,seed,empty\n" << prime << "," << seed << "," << verdict << "\n";
      else out << verdict << "\n";
      emit(out.str(), output);
      return result ? 0 : kExitFalse;
    }

    if (table->parsed()) {
      if (to < from) throw CliError{"--to must not be below --from"};
      std::vector<TableRow> rows;
      for (int size = from; size <= to; ++size) {
        SpaceArgs a;
        TableRow row;
        if (table_kind == "grass") {
          a = SpaceArgs{"grass", space_args.r, size, 0, {}};
          row.params = "r=" + std::to_string(a.r) + " n=" + std::to_string(size);
        } else if (table_kind == "quantum") {
          a = SpaceArgs{"quantum", space_args.r, space_args.n, size, {}};
          row.params = "r=" + std::to_string(a.r) + " n=" + std::to_string(a.n) + " q=" + std::to_string(size);
        } else {
          a = SpaceArgs{"og", size, 0, 0, {}};
          row.params = "r=" + std::to_string(size);
        }
        Space space;
        open_space(a, space);
        OwnedString name, result;
        check(schubert_space_name(space.handle, &name.s));
        row.space = name.str();
        row.rank = schubert_space_dimension(space.handle);
        const auto status = schubert_count_chains(space.handle, nullptr, nullptr, 0, &result.s);
        if (status == SCHUBERT_CAPACITY) row.note = "skipped: capacity";
        else check(status);
        row.count = result.str();
        rows.push_back(row);
      }
      std::ostringstream out;
      if (format == "json") {
        out << "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
          out << (i ? ", " : "") << "{\"space\": \"" << json_escape(rows[i].space) << "\", \"rank\": " << rows[i].rank
              << ", \"count\": " << (rows[i].count.empty() ? "null" : "\"" + rows[i].count + "\"") << "}";
        out << "]\n";
      } else if (format == "csv") {
        out << "space,parameters,rank,count\n";
        for (const auto& r : rows)
          out << "\"" << r.space << "\",\"" << r.params << "\"," << r.rank << ","
              << (r.count.empty() ? "SKIPPED" : r.count) << "\n";
      } else {
        for (const auto& r : rows)
          out << r.space << " rank " << r.rank << ": " << (r.count.empty() ? r.note : r.count) << "\n";
      }
      emit(out.str(), output);
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  }
  return kExitError;
}
