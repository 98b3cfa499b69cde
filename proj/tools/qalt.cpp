// qalt: verification suites, dimension tables and matrix dumps.
// Exit codes: 0 pass, 1 verification failure, 2 usage or size-bound error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qalt/combinatorics.hpp"
#include "qalt/suites.hpp"
#include "qalt/tensor.hpp"

using namespace qalt;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command, suite, op, out, mode = "exact", points;
  std::vector<std::string> expect;  // KEY=VALUE assertions on observations
  int m = -1, n = -1, r = -1;
  std::uint64_t seed = 0;
  std::size_t bound = 0;
  bool dump = false, timestamps = false;
};

std::vector<SpecializationPoint> parse_points(const std::string& text) {
  std::vector<SpecializationPoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational t;
    try {
      t = Rational(item);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad specialization point '" + item + "'");
    }
    t.canonicalize();
    if (t == 0) throw UsageError("specialization point 0 is not allowed");
    if (std::find(out.begin(), out.end(), SpecializationPoint(t)) != out.end())
      throw UsageError("specialization points must be distinct");
    out.emplace_back(t);
  }
  return out;
}

SuiteOptions suite_options(const RunConfig& cfg) {
  SuiteOptions o;
  o.mode = parse_rank_mode(cfg.mode);
  o.seed = cfg.seed;
  o.points = parse_points(cfg.points);
  o.bound = cfg.bound;
  return o;
}

void need_mn(const RunConfig& cfg) {
  if (cfg.m < 0 || cfg.n < 0) throw UsageError(cfg.command + " needs --m and --n");
}

json config_echo(const RunConfig& cfg) {
  json j = json::object();
  j["command"] = cfg.command;
  if (!cfg.suite.empty()) j["suite"] = cfg.suite;
  if (!cfg.op.empty()) j["op"] = cfg.op;
  if (cfg.m >= 0) j["m"] = cfg.m;
  if (cfg.n >= 0) j["n"] = cfg.n;
  j["r"] = cfg.r;
  j["seed"] = cfg.seed;
  j["mode"] = cfg.mode;
  if (!cfg.points.empty()) j["points"] = cfg.points;
  if (cfg.bound) j["bound"] = cfg.bound;
  return j;
}

// Named operator on V^r: T<i>, Tp<i>, U<i>, X<i>, phi or any rho label.
OperatorMatrix named_operator(const std::string& op, const GradedSpace& s) {
  auto index_after = [&](std::size_t k) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(op.substr(k), &used);
      if (k + used == op.size()) return i;
    } catch (const std::exception&) {
    }
    throw UsageError("bad operator index in '" + op + "'");
  };
  try {
    if (op == "phi") return phi_tensor(s);
    if (op.rfind("Tp", 0) == 0) return pi_Tprime(index_after(2), s);
    if (op.rfind("T", 0) == 0) return pi_T(index_after(1), s);
    if (op.rfind("U", 0) == 0) return pi_U(index_after(1), s);
    if (op.rfind("X", 0) == 0) return pi_X(index_after(1), s);
    return rho_generator(RhoGenerator::parse(op), s);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError("operator '" + op + "': " + e.what());
  }
}

json dump_section(const RunConfig& cfg) {
  const GradedSpace s(cfg.m, cfg.n, cfg.r);
  json j = json::object();
  for (int i = 1; i < cfg.r; ++i) j["T" + std::to_string(i)] = dump_matrix(pi_T(i, s));
  if (cfg.suite == "alt-centralizer")
    for (int i = 1; i + 1 < cfg.r; ++i) j["X" + std::to_string(i)] = dump_matrix(pi_X(i, s));
  if (cfg.suite == "schur-weyl")
    for (const auto& g : rho_generators(cfg.m, cfg.n)) j[g.label()] = dump_matrix(rho_generator(g, s));
  if (cfg.suite == "alt-centralizer" && cfg.m == cfg.n) j["phi"] = dump_matrix(phi_tensor(s));
  return j;
}

std::pair<json, bool> run_verify(const RunConfig& cfg) {
  const SuiteOptions opt = suite_options(cfg);
  SuiteReport rep;
  if (cfg.suite == "hecke" || cfg.suite == "alt") {
    if (cfg.dump) throw UsageError("--dump needs a matrix suite");
    rep = cfg.suite == "hecke" ? suite_hecke(cfg.r, opt) : suite_alt(cfg.r, opt);
  } else {
    need_mn(cfg);
    if (cfg.suite == "schur-weyl") rep = suite_schur_weyl(cfg.m, cfg.n, cfg.r, opt);
    else if (cfg.suite == "alt-centralizer") rep = suite_alt_centralizer(cfg.m, cfg.n, cfg.r, opt);
    else rep = suite_specialization(cfg.m, cfg.n, cfg.r, opt);
  }
  for (const auto& e : cfg.expect) {
    const auto eq = e.find('=');
    if (eq == std::string::npos) throw UsageError("--expect takes KEY=VALUE, got '" + e + "'");
    const std::string key = e.substr(0, eq), want = e.substr(eq + 1);
    const bool known = rep.observations.contains(key);
    const std::string got = known ? rep.observations.at(key).get<std::string>() : "not observed";
    rep.checks.push_back({"expected observation " + key, known && got == want, want, got, ""});
  }
  json j = json::object();
  j["config"] = config_echo(cfg);
  const json body = rep.to_json();
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (cfg.dump) j["matrices"] = dump_section(cfg);
  return {j, rep.passed()};
}

json run_dims(const RunConfig& cfg) {
  need_mn(cfg);
  const auto d = predicted_dimensions(cfg.m, cfg.n, cfg.r);
  json j = json::object();
  j["config"] = config_echo(cfg);
  j["table"] = json::array();
  for (const auto& rec : d.records)
    j["table"].push_back({{"lambda", rec.lambda.to_string()},
                          {"conjugate", conjugate(rec.lambda).to_string()},
                          {"d", std::to_string(rec.d)},
                          {"class", to_string(rec.cls)}});
  j["dimA"] = std::to_string(d.dimA);
  j["dimA0"] = std::to_string(d.dimA0);
  j["dimA1"] = std::to_string(d.dimA1);
  j["dimC"] = std::to_string(d.dimC);
  j["dimC0"] = std::to_string(d.dimC0);
  j["dimC1"] = std::to_string(d.dimC1);
  return j;
}

json run_dump(const RunConfig& cfg) {
  need_mn(cfg);
  const GradedSpace s(cfg.m, cfg.n, cfg.r);
  const OperatorMatrix op = named_operator(cfg.op, s);
  const auto pts = parse_points(cfg.points);
  json j = json::object();
  j["config"] = config_echo(cfg);
  j["dim"] = s.dim();
  if (pts.empty()) {
    j["matrix"] = dump_matrix(op);
  } else {
    j["at"] = pts.front().to_string();
    j["matrix"] = dump_matrix(specialize_matrix(op, pts.front()));
  }
  return j;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const RunConfig& cfg, json j) {
  if (cfg.timestamps) j["generated_at"] = utc_now();
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + cfg.out);
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool suite_flags) {
  cmd->add_option("--m", cfg.m, "even dimension m")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", cfg.n, "odd dimension n")->check(CLI::NonNegativeNumber);
  cmd->add_option("--r", cfg.r, "tensor power / Hecke rank")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
  cmd->add_flag("--timestamps", cfg.timestamps, "add a generation timestamp to the report");
  cmd->add_option("--points", cfg.points, "comma-separated specialization points, e.g. 2,3/2");
  if (!suite_flags) return;
  cmd->add_option("--seed", cfg.seed, "seed for sampled points and elements");
  cmd->add_option("--mode", cfg.mode, "exact or specialized")->check(CLI::IsMember({"exact", "specialized"}));
  cmd->add_option("--bound", cfg.bound, "size bound: max (m+n)^r, or max r for hecke/alt");
  cmd->add_flag("--dump", cfg.dump, "include generator matrix dumps in the report");
  cmd->add_option("--expect", cfg.expect, "assert an observation, e.g. dim_C=3 (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Verification suites for the q-alternating Hecke algebra and its super Schur-Weyl duality"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "hecke, alt, schur-weyl, alt-centralizer or specialize")
      ->required()
      ->check(CLI::IsMember({"hecke", "alt", "schur-weyl", "alt-centralizer", "specialize"}));
  add_common(verify, cfg, true);

  auto* dims = app.add_subcommand("dims", "predicted dimensions from hook combinatorics");
  add_common(dims, cfg, false);

  auto* dump = app.add_subcommand("dump", "dump one operator matrix on V^r");
  dump->add_option("--op", cfg.op, "T<i>, Tp<i>, U<i>, X<i>, phi, sigma, qh(b), e(i) or f(i)")->required();
  add_common(dump, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      cfg.command = "verify";
      auto [j, ok] = run_verify(cfg);
      std::cerr << cfg.suite << ": " << (ok ? "pass" : "FAIL") << "\n";
      emit(cfg, std::move(j));
      return ok ? 0 : 1;
    }
    if (dims->parsed()) {
      cfg.command = "dims";
      emit(cfg, run_dims(cfg));
    } else {
      cfg.command = "dump";
      emit(cfg, run_dump(cfg));
    }
    return 0;
  } catch (const std::invalid_argument& e) {  // usage, size bounds and parameter domains
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
