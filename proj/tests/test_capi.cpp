#include <doctest.h>

#include <string>

#include "schubert/schubert.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  schubert_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("space handles") {
  schubert_space* g = nullptr;
  REQUIRE(schubert_space_grassmannian(3, 7, &g) == SCHUBERT_OK);
  CHECK(schubert_space_dimension(g) == 12);
  CHECK(schubert_space_families(g) == 1);
  char* name = nullptr;
  REQUIRE(schubert_space_name(g, &name) == SCHUBERT_OK);
  CHECK(take(name) == "G(3,7)");
  char* size = nullptr;
  REQUIRE(schubert_space_index_count(g, &size) == SCHUBERT_OK);
  CHECK(take(size) == "35");
  schubert_space_free(g);

  schubert_space* bad = nullptr;
  CHECK(schubert_space_grassmannian(5, 4, &bad) == SCHUBERT_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(schubert_last_error()).size() > 0);
  CHECK(schubert_space_grassmannian(2, 4, nullptr) == SCHUBERT_INVALID_ARGUMENT);
  const int steps[] = {2, 1};
  CHECK(schubert_space_flag(steps, 2, 4, &bad) == SCHUBERT_INVALID_ARGUMENT);
  schubert_space_free(nullptr);
}

TEST_CASE("chain counts through the C interface") {
  schubert_space* s = nullptr;
  char* out = nullptr;
  REQUIRE(schubert_space_grassmannian(3, 7, &s) == SCHUBERT_OK);
  REQUIRE(schubert_count_chains(s, nullptr, nullptr, 0, &out) == SCHUBERT_OK);
  CHECK(take(out) == "462");
  REQUIRE(schubert_count_chains(s, "2,4,6", nullptr, 0, &out) == SCHUBERT_OK);
  CHECK(take(out) == "16");  // tableaux of shape (3,2,1)
  CHECK(schubert_count_chains(s, "4,2,6", nullptr, 0, &out) == SCHUBERT_INVALID_ARGUMENT);
  schubert_space_free(s);

  REQUIRE(schubert_space_quantum(2, 5, 3, &s) == SCHUBERT_OK);
  REQUIRE(schubert_count_chains(s, nullptr, nullptr, 0, &out) == SCHUBERT_OK);
  CHECK(take(out) == "6765");
  schubert_space_free(s);

  const int steps[] = {1, 2};
  const int labels[] = {1, 1, 2};
  REQUIRE(schubert_space_flag(steps, 2, 3, &s) == SCHUBERT_OK);
  REQUIRE(schubert_count_chains(s, nullptr, labels, 3, &out) == SCHUBERT_OK);
  CHECK(take(out) == "1");
  CHECK(schubert_count_chains(s, nullptr, labels, 2, &out) == SCHUBERT_INVALID_ARGUMENT);
  schubert_space_free(s);

  REQUIRE(schubert_syt_count(4, 4, &out) == SCHUBERT_OK);
  CHECK(take(out) == "24024");

  REQUIRE(schubert_space_grassmannian(15, 30, &s) == SCHUBERT_OK);
  CHECK(schubert_count_chains(s, nullptr, nullptr, 0, &out) == SCHUBERT_CAPACITY);
  schubert_space_free(s);
}

TEST_CASE("verification reports") {
  schubert_space* s = nullptr;
  REQUIRE(schubert_space_grassmannian(2, 4, &s) == SCHUBERT_OK);
  const uint32_t primes[] = {3, 5, 7};
  schubert_verify_options opts;
  schubert_verify_options_init(&opts);
  opts.primes = primes;
  opts.prime_count = 3;
  opts.seed = 42;
  schubert_report* report = nullptr;
  REQUIRE(schubert_verify(s, &opts, &report) == SCHUBERT_OK);
  CHECK(std::string(schubert_report_verdict(report)) == "confirmed");
  CHECK(schubert_report_solution_count(report) == 2);
  CHECK(std::string(schubert_report_expected(report)) == "2");
  CHECK(schubert_report_all_proportional(report) == 1);
  CHECK(schubert_report_prime(report) <= 7);
  const std::string json = schubert_report_json(report);
  CHECK(json.find("\"verdict\": \"confirmed\"") != std::string::npos);
  CHECK(json.find("\"space\"") < json.find("\"prime\""));
  CHECK(json.find("\"expected\"") < json.find("\"solutions\""));
  schubert_report_free(report);

  opts.mode = "sideways";
  CHECK(schubert_verify(s, &opts, &report) == SCHUBERT_INVALID_ARGUMENT);
  opts.mode = nullptr;
  opts.prime_count = 0;
  CHECK(schubert_verify(s, &opts, &report) == SCHUBERT_INVALID_ARGUMENT);
  schubert_space_free(s);

  REQUIRE(schubert_space_orthogonal(3, &s) == SCHUBERT_OK);
  const uint32_t two[] = {2};
  opts.primes = two;
  opts.prime_count = 1;
  CHECK(schubert_verify(s, &opts, &report) == SCHUBERT_CHARACTERISTIC);
  schubert_space_free(s);
}

TEST_CASE("checks through the C interface") {
  int holds = 0;
  size_t lhs = 0, rhs = 0;
  REQUIRE(schubert_pieri_check(2, 4, "2,4", 3, &holds, &lhs, &rhs) == SCHUBERT_OK);
  CHECK(holds == 1);
  CHECK(lhs == rhs);
  CHECK(schubert_pieri_check(2, 4, "2,5", 3, &holds, nullptr, nullptr) == SCHUBERT_INVALID_ARGUMENT);

  schubert_space* s = nullptr;
  REQUIRE(schubert_space_grassmannian(2, 4, &s) == SCHUBERT_OK);
  int empty = 0;
  REQUIRE(schubert_empty_intersection_check(s, nullptr, 0, 0, nullptr, 0, 7, 1, &empty) == SCHUBERT_OK);
  CHECK(empty == 1);
  const long long fixed[] = {0, 0, 1, 0, 0, 0, 0, 1};
  REQUIRE(schubert_empty_intersection_check(s, fixed, 2, 0, nullptr, 0, 7, 1, &empty) == SCHUBERT_OK);
  CHECK(empty == 0);
  CHECK(schubert_empty_intersection_check(s, nullptr, 0, 0, nullptr, 0, 2, 1, &empty) == SCHUBERT_NO_GENERAL_SUBSPACE);
  schubert_space_free(s);
}
