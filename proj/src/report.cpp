#include "soule/report.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"
#include "soule/lattice.hpp"

namespace soule {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string short_real(const Real& x) { return x.str(6); }

json valuation_json(const Valuation& v) { return v ? json(*v) : json("inf"); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::optional<json> read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

}  // namespace

void RunConfig::validate() const {
  if (precision_bits < 128) throw PreconditionError("--prec must be at least 128");
  if (guard_bits < 16) throw PreconditionError("--guard must be at least 16");
  if (format != "json" && format != "csv") throw PreconditionError("--format must be json or csv");
  if (jobs < 1) throw PreconditionError("--jobs must be positive");
}

json to_json(const VerificationReport& r, bool with_timing) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  const std::string tol = short_real(r.tolerance);
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"label", row.label},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"abs_diff", short_real(row.abs_diff)},
                    {"scale", short_real(row.scale)},
                    {"tolerance", tol}});
  json j = {{"kind", "verification"},
            {"identity", r.identity},
            {"parameters", params},
            {"rows", rows},
            {"notes", r.notes},
            {"exact_ok", r.exact_ok},
            {"max_abs_diff", short_real(r.max_abs_diff)},
            {"tolerance", tol},
            {"pass", r.pass},
            {"precision_bits", r.precision_bits},
            {"guard_bits", r.guard_bits}};
  if (with_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

json to_json(const CriterionVerdict& v) {
  json table = json::array();
  for (const auto& e : v.table)
    table.push_back({{"m", e.m},
                     {"family", to_string(e.family)},
                     {"formula", e.family == Family::bernoulli ? "v_p(B_m)" : "v_p(B_{m,chi_K})"},
                     {"value", e.value.str()},
                     {"v_p", valuation_json(e.vp)}});
  return {{"kind", "criterion"},
          {"d_K", v.d_k},
          {"p", v.p},
          {"split", to_string(v.status)},
          {"range", "B_{1,chi_K}; B_m for even m in [2, p-3]; B_{m,chi_K} for odd m in [3, p-2]"},
          {"table", table},
          {"verdict", v.verdict},
          {"witnesses", v.witnesses}};
}

json to_json(const NuTable& t) {
  json rows = json::array();
  bool integral = true;
  for (const auto& [b, nu] : t.values) {
    rows.push_back({{"b", b}, {"nu", nu.str()}});
    integral = integral && nu.is_integer();
  }
  return {{"kind", "nu-table"},
          {"formula", "nu_n(c,b)"},
          {"d_K", t.d_k},
          {"p", t.p},
          {"n", t.n},
          {"c", t.c},
          {"all_integral", integral},
          {"rows", rows}};
}

json to_json(const PaperClaim& c) {
  return {{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"agree", c.agree}};
}

std::string nu_csv(const std::vector<NuTable>& tables) {
  std::ostringstream os;
  os << "c,b,nu,is_integer\n";
  for (const auto& t : tables)
    for (const auto& [b, nu] : t.values) os << t.c << ',' << b << ',' << nu.str() << ',' << (nu.is_integer() ? 1 : 0) << '\n';
  return os.str();
}

std::string criterion_csv(const std::vector<CriterionVerdict>& scan) {
  std::ostringstream os;
  os << "p,split,verdict,witnesses\n";
  for (const auto& v : scan) {
    std::string w;
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) w += (i ? " " : "") + std::to_string(v.witnesses[i]);
    os << v.p << ',' << to_string(v.status) << ',' << (v.verdict ? "pass" : "fail") << ',' << w << '\n';
  }
  return os.str();
}

std::string verification_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "identity,label,lhs,rhs,abs_diff,scale,tolerance,pass\n";
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      os << r.identity << ',' << csv_quote(row.label) << ',' << csv_quote(row.lhs) << ',' << csv_quote(row.rhs) << ','
         << short_real(row.abs_diff) << ',' << short_real(row.scale) << ',' << short_real(r.tolerance) << ','
         << (r.pass ? "pass" : "fail") << '\n';
  return os.str();
}

Report::Report(std::string command, RunConfig config) : command_(std::move(command)), config_(std::move(config)) {}

json Report::to_json(bool with_timestamp) const {
  json claims = json::array();
  for (const auto& c : claims_) claims.push_back(soule::to_json(c));
  json j = {{"command", command_},
            {"config",
             {{"precision_bits", config_.precision_bits},
              {"guard_bits", config_.guard_bits},
              {"format", config_.format},
              {"jobs", config_.jobs}}},
            {"results", results_},
            {"paper_claims", claims},
            {"version", SOULE_VERSION}};
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  return j;
}

void load_cache(const std::string& dir) {
  if (dir.empty()) return;
  const fs::path root(dir);
  if (auto j = read_json(root / "bernoulli.json"); j && j->is_array()) {
    std::vector<Rational> prefix;
    try {
      for (const auto& s : *j) prefix.push_back(Rational::parse(s.get<std::string>()));
      default_bernoulli_cache().seed(prefix);
    } catch (const std::exception&) {
      // A corrupt cache is recomputed from scratch.
    }
  }
  if (auto j = read_json(root / "series.json"); j && j->is_object()) {
    std::map<std::string, std::string> entries;
    for (const auto& [k, v] : j->items())
      if (v.is_string()) entries.emplace(k, v.get<std::string>());
    series_cache().load(entries);
  }
}

void save_cache(const std::string& dir) {
  if (dir.empty()) return;
  const fs::path root(dir);
  fs::create_directories(root);
  json bern = json::array();
  for (const auto& b : default_bernoulli_cache().snapshot()) bern.push_back(b.str());
  std::ofstream(root / "bernoulli.json") << bern.dump() << '\n';
  json series = json::object();
  for (const auto& [k, v] : series_cache().entries()) series[k] = v;
  std::ofstream(root / "series.json") << series.dump(1) << '\n';
}

}  // namespace soule
