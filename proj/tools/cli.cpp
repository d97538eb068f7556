#include "cli.hpp"

#include "godeaux/report.hpp"
#include "godeaux/scenarios.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace godeaux::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kScenarios{"z3", "z4", "z5", "sc", "all"};

struct VerifyConfig {
  std::string scenario = "all";
  int max_degree = 12;
  std::string mode = "both";
  std::string alpha = "0", beta = "0", gamma = "0";
  std::uint64_t seed = 42;
  std::string format = "table";
  std::string report_path;
  bool timing = false;
};

struct HilbertConfig {
  std::string preset;
  std::string ring_path;
  std::string relations_path;
  int max_degree = 12;
  std::string alpha = "0", beta = "0", gamma = "0";
  std::uint64_t seed = 42;
  std::string format = "table";
};

struct ScBuildConfig {
  int max_degree = 12;
  std::string out_dir = "sc-build";
};

Z3Params parse_params(const std::string& a, const std::string& b, const std::string& g) {
  try {
    return {Rational::parse(a), Rational::parse(b), Rational::parse(g)};
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad parameter value: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw UsageError("cannot write '" + path.string() + "'");
}

VerificationReport run_scenario(const std::string& name, const VerifyConfig& cfg) {
  if (name == "z3") {
    Z3Options opt;
    opt.params = parse_params(cfg.alpha, cfg.beta, cfg.gamma);
    opt.mode = cfg.mode == "symbolic" ? Z3Mode::kSymbolic : cfg.mode == "numeric" ? Z3Mode::kNumeric : Z3Mode::kBoth;
    opt.max_degree = cfg.max_degree;
    opt.seed = cfg.seed;
    return run_z3(opt);
  }
  if (name == "z4") return run_z4(cfg.seed, cfg.max_degree);
  if (name == "z5") return run_z5(cfg.max_degree);
  return run_sc(cfg.max_degree, cfg.seed);
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  parse_params(cfg.alpha, cfg.beta, cfg.gamma);  // reject bad values before any work
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  if (cfg.scenario == "all") names = {"z3", "z4", "z5", "sc"};
  else names = {cfg.scenario};

  std::vector<std::function<VerificationReport()>> jobs;
  for (const auto& n : names) jobs.push_back([n, &cfg] { return run_scenario(n, cfg); });
  auto reports = run_parallel(jobs);

  VerificationReport report = reports.size() == 1 ? std::move(reports.front()) : VerificationReport("all");
  if (names.size() > 1)
    for (const auto& r : reports) report.merge(r);
  report.set_config("scenario", cfg.scenario);
  report.set_config("max_degree", std::to_string(cfg.max_degree));
  report.set_config("format", cfg.format);
  if (cfg.scenario == "z3" || cfg.scenario == "all") report.set_config("mode", cfg.mode);
  if (cfg.timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = cfg.format == "json" ? to_json(report) : to_table(report);
  if (cfg.report_path.empty()) {
    out << text;
  } else {
    write_file(cfg.report_path, text);
    out << report.checks().size() - report.failures() << "/" << report.checks().size() << " checks passed, report written to "
        << cfg.report_path << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

void print_table(const DimensionTable& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << std::setw(4) << "m";
  for (const auto& c : t.columns) out << std::setw(6) << c;
  out << "\n";
  for (std::size_t m = 0; m < t.rows.size(); ++m) {
    out << std::setw(4) << m;
    for (auto v : t.rows[m]) out << std::setw(6) << v;
    out << "\n";
  }
}

int cmd_hilbert(const HilbertConfig& cfg, std::ostream& out) {
  DimensionTable table;
  if (!cfg.preset.empty()) {
    table = preset_hilbert(cfg.preset, cfg.max_degree, parse_params(cfg.alpha, cfg.beta, cfg.gamma), cfg.seed);
  } else {
    Descriptor desc;
    std::vector<Polynomial> rels;
    try {
      desc = parse_ring_descriptor(read_file(cfg.ring_path));
      if (!cfg.relations_path.empty())
        for (auto& np : parse_polynomial_file(read_file(cfg.relations_path), desc)) rels.push_back(np.poly);
      if (desc->has_parameters()) throw UsageError("ring files with degree-0 parameters are not supported here");
      table = to_dimension_table(hilbert(GradedPresentation(desc, rels), cfg.max_degree));
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  print_table(table, cfg.format, out);
  return 0;
}

int cmd_sc_build(const ScBuildConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const MembershipPredicate pred = sc_predicate();
  SubringPresentation pres = presentation(pred, cfg.max_degree);

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw UsageError("cannot create '" + cfg.out_dir + "': " + ec.message());

  std::string gens, rels;
  std::vector<Polynomial> computed;
  for (const auto& g : pres.generators) {
    gens += render_polynomial(g.poly) + "\n";
    computed.push_back(g.poly);
  }
  for (const auto& r : pres.relations) rels += render_polynomial(r) + "\n";

  nlohmann::ordered_json j;
  j["max_degree"] = cfg.max_degree;
  j["generators"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    j["generators"].push_back({{"symbol", "g" + std::to_string(i + 1)},
                               {"degree", pres.generators[i].degree},
                               {"polynomial", render_polynomial(pres.generators[i].poly)}});
  nlohmann::ordered_json census = nlohmann::ordered_json::object();
  for (const auto& [m, c] : pres.census) census[std::to_string(m)] = c;
  j["census"] = census;
  j["relation_count"] = pres.relation_count();
  j["hilbert"] = pres.hilbert;
  j["warning"] = pres.warning ? nlohmann::ordered_json(*pres.warning) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json comparison = nlohmann::ordered_json::array();
  std::size_t contained = 0;
  const auto& claimed = sc_data().claimed;
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    bool in = subring_contains(pred, computed, claimed[i]);
    contained += in;
    comparison.push_back({{"index", i + 1},
                          {"polynomial", render_polynomial(claimed[i])},
                          {"in_computed_subring", in}});
  }
  j["comparison"] = comparison;
  j["version"] = version();

  const fs::path dir(cfg.out_dir);
  write_file(dir / "generators.txt", gens);
  write_file(dir / "relations.txt", rels);
  write_file(dir / "presentation.json", j.dump(2) + "\n");

  out << pres.generators.size() << " generators, " << pres.relation_count() << " relations up to degree "
      << cfg.max_degree << "\n";
  for (std::size_t i = 0; i < claimed.size(); ++i)
    out << "listed generator " << i + 1 << " in computed subring: " << (comparison[i]["in_computed_subring"] ? "true" : "false")
        << "\n";
  if (pres.warning) out << "warning: " << *pres.warning << "\n";
  out << "written to " << cfg.out_dir << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of canonical rings of Godeaux surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Run verification suites and write a report");
  verify->add_option("--scenario", vc.scenario, "z3, z4, z5, sc or all")->check(CLI::IsMember(kScenarios));
  verify->add_option("--max-degree", vc.max_degree, "Degree bound D")->check(CLI::Range(1, 40));
  verify->add_option("--mode", vc.mode, "Z/3 mode")->check(CLI::IsMember({"symbolic", "numeric", "both"}));
  verify->add_option("--alpha", vc.alpha, "Z/3 parameter alpha (rational)");
  verify->add_option("--beta", vc.beta, "Z/3 parameter beta (rational)");
  verify->add_option("--gamma", vc.gamma, "Z/3 parameter gamma (rational)");
  verify->add_option("--seed", vc.seed, "Seed for random samples");
  verify->add_option("--format", vc.format)->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--report", vc.report_path, "Write the report here instead of stdout");
  verify->add_flag("--timing", vc.timing, "Record wall time in the report");

  HilbertConfig hc;
  auto* hil = app.add_subcommand("hilbert", "Print the (m, w) dimension table of a ring");
  auto* preset = hil->add_option("--preset", hc.preset)->check(CLI::IsMember(preset_names()));
  auto* ring = hil->add_option("--ring", hc.ring_path, "Ring descriptor file");
  hil->add_option("--relations", hc.relations_path, "Polynomial file of relations")->needs(ring);
  preset->excludes(ring);
  hil->add_option("--max-degree", hc.max_degree)->check(CLI::Range(0, 40));
  hil->add_option("--alpha", hc.alpha);
  hil->add_option("--beta", hc.beta);
  hil->add_option("--gamma", hc.gamma);
  hil->add_option("--seed", hc.seed);
  hil->add_option("--format", hc.format)->check(CLI::IsMember({"json", "table"}));

  ScBuildConfig sc;
  auto* build = app.add_subcommand("sc-build", "Compute generators and relations of the simply connected example");
  build->add_option("--max-degree", sc.max_degree)->check(CLI::Range(1, 40));
  build->add_option("--out-dir", sc.out_dir, "Output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*hil && hc.preset.empty() && hc.ring_path.empty()) throw UsageError("hilbert needs --preset or --ring");
    if (*verify) return cmd_verify(vc, out);
    if (*hil) return cmd_hilbert(hc, out);
    return cmd_sc_build(sc, out);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace godeaux::cli
