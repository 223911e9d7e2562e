// soule: command-line front end for the verification library.
//
// Exit codes: 0 all checks pass, 1 usage or precondition error, 2 a
// mathematical verification failed.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soule/bernoulli.hpp"
#include "soule/errors.hpp"
#include "soule/fields.hpp"
#include "soule/group_ring.hpp"
#include "soule/padic.hpp"
#include "soule/report.hpp"
#include "soule/verify.hpp"

namespace {

using namespace soule;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct Options {
  RunConfig config;
  std::string out;
  bool stable = false;

  std::string m_range = "0..10";
  long chi = 0;
  std::vector<long> vp;

  std::string identity;
  long d_k = 4;
  long p = 5;
  int n = 1;
  std::vector<long> c{1};
  long na = 0;
  std::string alpha;
  long perturb_bits = 0;

  bool all_fields = false;
  long p_max = 70;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw PreconditionError("cannot open " + o.out + " for writing");
  f << text;
}

void emit_json(const Options& o, const Report& r) { emit(o, r.to_json(!o.stable).dump(2) + "\n"); }

std::pair<unsigned long, unsigned long> parse_range(const std::string& s) {
  static const std::regex single(R"(\s*(\d+)\s*)");
  static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch mt;
  if (std::regex_match(s, mt, single)) {
    const unsigned long v = std::stoul(mt[1]);
    return {v, v};
  }
  if (std::regex_match(s, mt, range)) {
    const unsigned long a = std::stoul(mt[1]), b = std::stoul(mt[2]);
    if (a <= b && b <= 2000) return {a, b};
  }
  throw PreconditionError("--m expects N or A..B with 0 <= A <= B <= 2000, got '" + s + "'");
}

OkElem parse_alpha(const QuadField& field, const std::string& s) {
  static const std::regex pair(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
  std::smatch mt;
  if (!std::regex_match(s, mt, pair)) throw PreconditionError("--alpha expects 'a,b' meaning a + b*omega");
  const OkElem x{std::stol(mt[1]), std::stol(mt[2])};
  if (field.norm(x) < 2) throw PreconditionError("--alpha must have norm at least 2");
  return x;
}

int cmd_bernoulli(const Options& o) {
  const auto [lo, hi] = parse_range(o.m_range);
  const bool generalized = o.chi != 0;
  const DirichletChar chi = generalized ? DirichletChar::kronecker(o.chi) : DirichletChar::trivial();
  if (generalized && lo == 0) throw PreconditionError("B_{m,chi} needs m >= 1");
  for (long q : o.vp)
    if (!is_prime(q)) throw PreconditionError("--vp expects primes");
  Report report("bernoulli", o.config);
  std::vector<std::vector<std::string>> csv;
  for (unsigned long m = lo; m <= hi; ++m) {
    const Rational b = generalized ? gen_bernoulli(m, chi) : bernoulli_number(m);
    json vals = json::object();
    std::vector<std::string> line{std::to_string(m), b.str()};
    for (long q : o.vp) {
      const Valuation v = padic_valuation(b, q);
      vals[std::to_string(q)] = v ? json(*v) : json("inf");
      line.push_back(v ? std::to_string(*v) : "inf");
    }
    report.add_result({{"kind", "bernoulli"},
                       {"formula", generalized ? "B_{m,chi}" : "B_m"},
                       {"chi", o.chi},
                       {"m", m},
                       {"value", b.str()},
                       {"v_p", vals}});
    csv.push_back(std::move(line));
    if (o.chi == -4 && m == 7) {
      report.add_claim({"B_{7,chi_{-4}} = 427/2", "427/2", b.str(), b == Rational(427, 2)});
      for (long q : o.vp)
        if (q == 61) {
          const Valuation v = padic_valuation(b, 61);
          report.add_claim({"61 | B_{7,chi_{-4}}", "v_61 = 1", "v_61 = " + (v ? std::to_string(*v) : "inf"), v == 1L});
        }
    }
  }
  if (o.config.format == "csv") {
    std::string text = "m,value";
    for (long q : o.vp) text += ",v_" + std::to_string(q);
    text += "\n";
    for (const auto& line : csv) {
      for (std::size_t i = 0; i < line.size(); ++i) text += (i ? "," : "") + line[i];
      text += "\n";
    }
    emit(o, text);
  } else {
    emit_json(o, report);
  }
  return kExitPass;
}

int cmd_verify(const Options& o) {
  const QuadField& field = QuadField::get(o.d_k);
  const PrecisionSpec prec = o.config.precision();
  std::vector<VerificationReport> runs;
  const std::string& id = o.identity;
  if (id == "kersey") {
    runs.push_back(verify_kersey(field, o.p, o.n, prec, o.config.jobs));
  } else if (id == "kersey-mult") {
    if (o.na == 0) throw PreconditionError("kersey-mult needs --Na");
    for (long c : o.c) runs.push_back(verify_kersey_mult(field, o.p, o.n, c, o.na, prec));
  } else if (id == "norm-units") {
    runs.push_back(verify_norm_unit_identities(field, o.p, o.n, prec));
  } else if (id == "distribution") {
    runs.push_back(verify_distribution(field, o.p, prec));
  } else if (id == "homogeneity") {
    runs.push_back(verify_homogeneity(field, o.p, o.n, prec));
  } else if (id == "lift-independence") {
    runs.push_back(verify_lift_independence(field, o.p, o.n, prec));
  } else if (id == "theta-a") {
    if (o.alpha.empty()) throw PreconditionError("theta-a needs --alpha");
    runs.push_back(verify_theta_a(field, parse_alpha(field, o.alpha), prec));
  } else {
    throw PreconditionError("unknown identity '" + id + "'");
  }
  if (o.perturb_bits > 0) {
    for (auto& r : runs) {
      for (auto& row : r.rows) row.abs_diff += pow2(-o.perturb_bits, prec.working()) * max(Real(1, prec.working()), row.scale);
      judge(r, prec);
      r.notes.push_back("self-test: every difference perturbed by 2^-" + std::to_string(o.perturb_bits));
    }
  }
  bool pass = true;
  Report report("verify " + id, o.config);
  for (const auto& r : runs) {
    report.add_result(to_json(r, !o.stable));
    pass = pass && r.pass;
  }
  if (o.config.format == "csv")
    emit(o, verification_csv(runs));
  else
    emit_json(o, report);
  for (const auto& r : runs)
    std::cerr << r.identity << ": " << (r.pass ? "pass" : "FAIL") << " (max scaled diff " << r.max_abs_diff.str(4)
              << ", tolerance " << r.tolerance.str(4) << ")\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_criterion(const Options& o) {
  std::vector<long> fields;
  if (o.all_fields) {
    for (long d : QuadField::discriminants()) fields.push_back(d);
  } else {
    fields.push_back(o.d_k);
  }
  Report report("criterion", o.config);
  std::vector<CriterionVerdict> all;
  for (long d : fields) {
    const QuadField& field = QuadField::get(d);
    auto scan = scan_primes(field, o.p_max, o.config.jobs);
    for (const auto& v : scan) report.add_result(to_json(v));
    for (auto& c : example_claims(field, scan)) report.add_claim(std::move(c));
    all.insert(all.end(), scan.begin(), scan.end());
  }
  if (o.config.format == "csv")
    emit(o, criterion_csv(all));
  else
    emit_json(o, report);
  for (const auto& c : report.claims())
    if (!c.agree) std::cerr << "paper claim differs: " << c.id << ": expected " << c.expected << ", computed " << c.computed << "\n";
  return kExitPass;
}

int cmd_nu_table(const Options& o) {
  const QuadField& field = QuadField::get(o.d_k);
  if (o.n < 1 || o.n > 6) throw PreconditionError("--n must be in [1, 6]");
  if (o.p < 5 || !is_prime(o.p)) throw PreconditionError("--p must be a prime >= 5");
  double size = static_cast<double>(o.d_k);
  for (int i = 0; i < o.n; ++i) size *= static_cast<double>(o.p);
  if (size > 1e5) throw PreconditionError("d_K p^n must be at most 10^5");
  const auto tables = nu_tables(field, o.p, o.n, o.config.jobs);
  if (o.config.format == "csv") {
    emit(o, nu_csv(tables));
  } else {
    Report report("nu-table", o.config);
    for (const auto& t : tables) report.add_result(to_json(t));
    emit_json(o, report);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic and cyclotomic unit verification toolkit"};
  app.set_version_flag("--version", SOULE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--prec", o.config.precision_bits, "Target precision in bits (>= 128)");
  app.add_option("--guard", o.config.guard_bits, "Guard bits (>= 16)");
  app.add_option("--jobs", o.config.jobs, "Worker threads");
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--format", o.config.format, "json or csv");
  app.add_option("--cache-dir", o.config.cache_dir, "Directory for memoized Bernoulli and q-series values");
  app.add_flag("--stable", o.stable, "Omit timestamps and timings from the report");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_m or B_{m,chi}");
  bern->add_option("--m", o.m_range, "Index N or range A..B");
  bern->add_option("--chi", o.chi, "Fundamental discriminant of chi (omit for B_m)");
  bern->add_option("--vp", o.vp, "Primes for valuations");

  auto* ver = app.add_subcommand("verify", "Run a numerical verification");
  ver->add_option("identity", o.identity,
                  "kersey | kersey-mult | norm-units | distribution | homogeneity | lift-independence | theta-a")
      ->required();
  ver->add_option("--dK", o.d_k, "Absolute discriminant of K");
  ver->add_option("--p", o.p, "Prime");
  ver->add_option("--n", o.n, "Level");
  ver->add_option("--c", o.c, "Galois index c (repeatable)");
  ver->add_option("--Na", o.na, "Norm of the auxiliary ideal");
  ver->add_option("--alpha", o.alpha, "Generator a,b of the ideal (a + b omega)");
  ver->add_option("--self-test-perturb", o.perturb_bits, "Add 2^-K to every difference (exercises the failure path)")
      ->group("");

  auto* crit = app.add_subcommand("criterion", "Scan primes against the surjectivity criterion");
  crit->add_option("--dK", o.d_k, "Absolute discriminant of K");
  crit->add_flag("--all", o.all_fields, "All nine fields");
  crit->add_option("--pmax", o.p_max, "Largest prime (<= 10000)");

  auto* nu = app.add_subcommand("nu-table", "Tabulate nu_n(c, b)");
  nu->add_option("--dK", o.d_k, "Absolute discriminant of K");
  nu->add_option("--p", o.p, "Prime");
  nu->add_option("--n", o.n, "Level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    o.config.validate();
    load_cache(o.config.cache_dir);
    int rc = kExitPass;
    if (bern->parsed()) rc = cmd_bernoulli(o);
    else if (ver->parsed()) rc = cmd_verify(o);
    else if (crit->parsed()) rc = cmd_criterion(o);
    else if (nu->parsed()) rc = cmd_nu_table(o);
    save_cache(o.config.cache_dir);
    return rc;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
