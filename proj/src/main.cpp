// Command-line front end: every verb prints a deterministic artifact (JSON,
// CSV, DOT or plain text) to stdout or --out.  Exit codes: 0 success,
// 1 domain/usage error, 2 verification failure.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "todatop/complex.hpp"
#include "todatop/divisor.hpp"
#include "todatop/incidence.hpp"
#include "todatop/lie.hpp"
#include "todatop/tau.hpp"
#include "todatop/toda.hpp"
#include "todatop/verify.hpp"

namespace {

using namespace todatop;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  f << text;
  return 0;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stod(cur));
  return out;
}

struct CommonOpts {
  std::string family = "A";
  int rank = 2;
  std::string coeff = "Z";
  std::string format;
  std::string variant = "standard";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format,
                bool with_coeff, bool with_variant) {
  cmd->add_option("--family", o.family, "Family letter (A, B, C, D, E, F, G)")->required();
  cmd->add_option("--rank", o.rank, "Rank of the root system")->required();
  if (with_coeff)
    cmd->add_option("--coeff", o.coeff, "Coefficient ring: Z, Q, Z2")
        ->check(CLI::IsMember({"Z", "Q", "Z2"}));
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format");
  if (with_variant)
    cmd->add_option("--variant", o.variant, "standard, schubert, or local")
        ->check(CLI::IsMember({"standard", "schubert", "local"}));
  cmd->add_option("--out", o.out, "Write to this file instead of stdout");
}

int run_homology(const CommonOpts& o, bool co) {
  const RootDatum& d = root_datum(family_from_char(o.family.at(0)), o.rank);
  const Coeff c = coeff_from_string(o.coeff);
  std::vector<AbelianGroup> groups;
  if (o.variant == "local") {
    if (c != Coeff::Q)
      throw std::invalid_argument("the local variant is defined over Q; use --coeff Q");
    for (long long b : local_betti_Q(d)) groups.push_back({b, {}});
  } else {
    const ChainComplexZ cx =
        (o.variant == "schubert") ? schubert_complex(d) : build_complex(d);
    groups = co ? cohomology(cx, c) : homology(cx, c);
  }
  if (o.format == "json") return emit(homology_json(groups), o.out);
  if (o.format == "csv") return emit(homology_csv(d, c, groups), o.out);
  throw std::invalid_argument("homology output supports --format json or csv");
}

int run_incidence(const CommonOpts& o) {
  const RootDatum& d = root_datum(family_from_char(o.family.at(0)), o.rank);
  if (o.format == "csv") return emit(incidence_csv(d), o.out);
  throw std::invalid_argument("incidence output supports --format csv");
}

int run_graph(const CommonOpts& o) {
  const RootDatum& d = root_datum(family_from_char(o.family.at(0)), o.rank);
  if (o.format != "dot") throw std::invalid_argument("graph output supports --format dot");
  if (o.variant == "local") return emit(graph_dot(d, local_graph(d), false), o.out);
  if (o.variant == "standard") return emit(graph_dot(d, incidence_graph(d), true), o.out);
  throw std::invalid_argument("graph supports --variant standard or local");
}

int run_tau(const CommonOpts& o) {
  const TauSystem sys = tau_system(family_from_char(o.family.at(0)), o.rank);
  if (o.format == "text") return emit(tau_text(sys), o.out);
  if (o.format == "json") return emit(tau_json(sys), o.out);
  throw std::invalid_argument("tau output supports --format text or json");
}

int run_divisor(int rank, const std::string& format, const std::string& out) {
  if (rank < 2) throw std::invalid_argument("divisor requires --rank >= 2");
  if (format != "csv") throw std::invalid_argument("divisor output supports --format csv");
  std::vector<DivisorSummary> rows;
  for (int l = 2; l <= rank; ++l) rows.push_back(divisor_summary(l));
  return emit(divisor_csv(rows), out);
}

struct SimulateOpts {
  std::string family = "A";
  int rank = 1;
  double t0 = 0, t1 = 1, dt = 1e-3;
  int stride = 100;
  std::string a_list, b_list, aux_list;
  bool tau_init = false;
  std::string out;
};

int run_simulate(const SimulateOpts& o) {
  const Family fam = family_from_char(o.family.at(0));
  const RootDatum& d = root_datum(fam, o.rank);
  TodaState init;
  init.t = o.t0;
  if (o.tau_init) {
    const TauSystem sys = tau_system(fam, o.rank);
    std::vector<mpq_class> pt(sys.nvars, 0);
    pt[0] = mpq_class(o.t0 * 1000000.0) / 1000000;
    const std::vector<double> aux = o.aux_list.empty() ? std::vector<double>{}
                                                       : parse_list(o.aux_list);
    for (size_t i = 0; i < aux.size() && (int)i + 1 < sys.nvars; ++i)
      pt[i + 1] = mpq_class(aux[i] * 1000000.0) / 1000000;
    const TodaPoint p = toda_solution_at(sys, pt);
    init.a = p.a;
    init.b = p.b;
  } else {
    if (o.a_list.empty() || o.b_list.empty())
      throw std::invalid_argument("simulate needs --a and --b (or --tau-init)");
    init.a = parse_list(o.a_list);
    init.b = parse_list(o.b_list);
    if ((int)init.a.size() != o.rank || (int)init.b.size() != o.rank)
      throw std::invalid_argument("--a/--b must list exactly rank values");
  }
  const SimResult sim = simulate(d, init, o.t1, o.dt, o.stride);
  return emit(trajectory_csv(sim, o.rank), o.out);
}

int run_verify(const std::string& suite, int criterion) {
  if (suite != "paper")
    throw std::invalid_argument("unknown verification suite: " + suite);
  const auto results = run_acceptance(env_time_budget(), criterion);
  bool all = true;
  for (const CriterionResult& r : results) {
    std::cout << format_criterion(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subsystem complexes, homology and tau functions of compactified nilpotent "
               "Toda isospectral varieties"};
  app.require_subcommand(1);

  CommonOpts hom, coh, inc, grph, tau;
  auto* c_hom = app.add_subcommand("homology", "Homology of the subsystem chain complex");
  add_common(c_hom, hom, "json", true, true);
  auto* c_coh = app.add_subcommand("cohomology", "Cohomology of the subsystem chain complex");
  add_common(c_coh, coh, "json", true, true);
  auto* c_inc = app.add_subcommand("incidence", "Nonzero incidence numbers");
  add_common(c_inc, inc, "csv", false, false);
  auto* c_grph = app.add_subcommand("graph", "Stratification graph in DOT form");
  add_common(c_grph, grph, "dot", false, true);
  auto* c_tau = app.add_subcommand("tau", "Tau functions and bilinear data");
  add_common(c_tau, tau, "text", false, false);

  int div_rank = 2;
  std::string div_format = "csv", div_out;
  auto* c_div = app.add_subcommand("divisor", "Painleve divisor component counts for l=2..rank");
  c_div->add_option("--rank", div_rank, "Largest rank to tabulate")->required();
  c_div->add_option("--format", div_format, "Output format");
  c_div->add_option("--out", div_out, "Write to this file instead of stdout");

  SimulateOpts sim;
  auto* c_sim = app.add_subcommand("simulate", "Integrate the Toda flow numerically");
  c_sim->add_option("--family", sim.family, "Family letter")->required();
  c_sim->add_option("--rank", sim.rank, "Rank")->required();
  c_sim->add_option("--t0", sim.t0, "Start time");
  c_sim->add_option("--t1", sim.t1, "End time")->required();
  c_sim->add_option("--dt", sim.dt, "Step size");
  c_sim->add_option("--stride", sim.stride, "Keep every n-th sample");
  c_sim->add_option("--a", sim.a_list, "Comma-separated initial a values");
  c_sim->add_option("--b", sim.b_list, "Comma-separated initial b values");
  c_sim->add_flag("--tau-init", sim.tau_init, "Initialize from the tau-function solution at t0");
  c_sim->add_option("--aux", sim.aux_list, "Comma-separated values for t2, t3, ... (tau-init)");
  c_sim->add_option("--out", sim.out, "Write to this file instead of stdout");

  std::string ver_suite = "paper";
  int ver_criterion = 0;
  auto* c_ver = app.add_subcommand("verify", "Run the acceptance suite");
  c_ver->add_option("--suite", ver_suite, "Suite name (paper)");
  c_ver->add_option("--criterion", ver_criterion, "Run a single criterion 1..12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help goes to stdout, exit 0
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c_hom->parsed()) return run_homology(hom, false);
    if (c_coh->parsed()) return run_homology(coh, true);
    if (c_inc->parsed()) return run_incidence(inc);
    if (c_grph->parsed()) return run_graph(grph);
    if (c_tau->parsed()) return run_tau(tau);
    if (c_div->parsed()) return run_divisor(div_rank, div_format, div_out);
    if (c_sim->parsed()) return run_simulate(sim);
    if (c_ver->parsed()) return run_verify(ver_suite, ver_criterion);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
