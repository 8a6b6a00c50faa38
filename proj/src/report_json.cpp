#include <json.hpp>

#include "schubert/error.hpp"
#include "schubert/verifier.hpp"

namespace schubert::verifier {

using json = nlohmann::ordered_json;
using combinat::SpaceDescriptor;
using combinat::SpaceKind;

namespace {

json matrix_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (auto e : m.row(i)) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix matrix_from(const PrimeField& f, const json& j, std::size_t cols) {
  FieldMatrix m(f, j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].size() == cols, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = f.from_int(j[i][c].get<long long>());
  }
  return m;
}

SpaceKind kind_from(const std::string& s) {
  for (auto k : {SpaceKind::grassmannian, SpaceKind::flag, SpaceKind::orthogonal, SpaceKind::quantum})
    if (combinat::to_string(k) == s) return k;
  fail(ErrorCode::invalid_argument, "unknown space kind '" + s + "'");
}

PointVerdict point_verdict_from(const std::string& s) {
  for (auto v : {PointVerdict::transverse, PointVerdict::nontransverse, PointVerdict::singular_point,
                 PointVerdict::singular_in_restriction})
    if (to_string(v) == s) return v;
  fail(ErrorCode::invalid_argument, "unknown point verdict '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (auto v : {Verdict::confirmed, Verdict::count_mismatch, Verdict::nontransverse_found, Verdict::no_generic_config})
    if (to_string(v) == s) return v;
  fail(ErrorCode::invalid_argument, "unknown verdict '" + s + "'");
}

}  // namespace

std::string to_json(const VerificationReport& r) {
  json space;
  space["kind"] = std::string(combinat::to_string(r.space.kind));
  space["name"] = r.space.name();
  space["r"] = r.space.r;
  space["n"] = r.space.n;
  space["q"] = r.space.q;
  space["steps"] = r.space.steps;
  space["dimension"] = r.space.dimension();
  space["restriction"] = r.restriction ? json(*r.restriction) : json(nullptr);

  json j;
  j["space"] = std::move(space);
  j["prime"] = r.prime;
  j["mode"] = std::string(to_string(r.mode));
  j["seed"] = std::to_string(r.seed);
  j["conditions"] = json::array();
  for (const auto& c : r.conditions) j["conditions"].push_back(matrix_json(c));
  j["labels"] = r.labels;
  j["parameters"] = json::array();
  for (const auto& p : r.parameters) j["parameters"].push_back(p ? json(*p) : json(nullptr));
  j["expected"] = r.expected.get_str();
  j["solution_count"] = std::to_string(r.solutions.size());
  j["solutions"] = json::array();
  for (const auto& s : r.solutions) j["solutions"].push_back(matrix_json(s));
  j["certificates"] = json::array();
  for (const auto& c : r.certificates)
    j["certificates"].push_back({{"tangent_rank", c.tangent_rank},
                                 {"jacobian_rank", c.jacobian_rank},
                                 {"tangent_dimension", c.tangent_dimension},
                                 {"proportional", c.proportional},
                                 {"verdict", std::string(to_string(c.verdict))}});
  j["attempts"] = json::array();
  for (const auto& a : r.attempts)
    j["attempts"].push_back({{"prime", a.prime},
                             {"seed", std::to_string(a.seed)},
                             {"outcome", a.outcome},
                             {"solutions", a.solutions.get_str()},
                             {"detail", a.detail}});
  j["verdict"] = std::string(to_string(r.verdict));
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    VerificationReport r;
    const auto& s = j.at("space");
    r.space.kind = kind_from(s.at("kind").get<std::string>());
    r.space.r = s.at("r").get<int>();
    r.space.n = s.at("n").get<int>();
    r.space.q = s.at("q").get<int>();
    r.space.steps = s.at("steps").get<std::vector<int>>();
    if (!s.at("restriction").is_null()) r.restriction = s.at("restriction").get<std::string>();
    r.prime = j.at("prime").get<std::uint32_t>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.seed = std::stoull(j.at("seed").get<std::string>());
    if (r.prime >= 2) {
      const PrimeField f(r.prime);
      const auto n = static_cast<std::size_t>(r.space.n);
      for (const auto& c : j.at("conditions")) r.conditions.push_back(matrix_from(f, c, n));
      for (const auto& c : j.at("solutions")) r.solutions.push_back(matrix_from(f, c, n));
    }
    r.labels = j.at("labels").get<std::vector<int>>();
    for (const auto& p : j.at("parameters"))
      r.parameters.push_back(p.is_null() ? std::nullopt : std::optional<Element>(p.get<Element>()));
    r.expected = BigInt(j.at("expected").get<std::string>());
    for (const auto& c : j.at("certificates"))
      r.certificates.push_back(Certificate{c.at("tangent_rank").get<int>(), c.at("jacobian_rank").get<int>(),
                                           c.at("tangent_dimension").get<int>(), c.at("proportional").get<bool>(),
                                           point_verdict_from(c.at("verdict").get<std::string>())});
    for (const auto& a : j.at("attempts"))
      r.attempts.push_back(AttemptRecord{a.at("prime").get<std::uint32_t>(),
                                         std::stoull(a.at("seed").get<std::string>()),
                                         a.at("outcome").get<std::string>(),
                                         BigInt(a.at("solutions").get<std::string>()), a.at("detail").get<std::string>()});
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::invalid_argument, "malformed report: bad integer field");
  }
}

}  // namespace schubert::verifier
