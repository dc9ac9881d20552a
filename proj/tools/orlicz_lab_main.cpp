// orlicz-lab: command line frontend for the generalized Orlicz laboratory.
//
// Exit codes: 0 success, 1 usage/parameter error, 2 numeric failure,
// 3 assertion violated (e.g. --expect-holds), 4 inconclusive under --strict.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orlicz/analysis.hpp"
#include "orlicz/conditions.hpp"
#include "orlicz/dp1d.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/psi.hpp"
#include "orlicz/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitInconclusive = 4;

struct GlobalOptions {
  std::string outdir;
  std::string format = "csv";
  long seed = 0;
};

std::string default_outdir() {
  if (const char* env = std::getenv("ORLICZ_LAB_OUTDIR")) return env;
  return ".";
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw orlicz::DomainError("empty list: '" + csv + "'");
  return out;
}

orlicz::ExtReal parse_ext(const std::string& s) {
  if (s == "inf" || s == "infinity") return orlicz::ExtReal::inf();
  return orlicz::ExtReal(std::stod(s));
}

// family specs: power:p | double-phase:p,q,alpha | double-phase-abs:p,q,alpha |
// double-phase-max:p,q,alpha | power-log:p | weighted-linear:p
orlicz::PhiFunction parse_phi(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "power") {
    const auto v = parse_list(args);
    return orlicz::PhiFunction::power(v.at(0), v.size() > 1 ? v.at(1) : 1.0);
  }
  if (kind == "double-phase" || kind == "double-phase-abs" || kind == "double-phase-max") {
    const auto v = parse_list(args);
    if (v.size() != 3) throw orlicz::DomainError("double-phase needs p,q,alpha");
    auto a = kind == "double-phase-abs"
                 ? orlicz::CoefficientFunction::abs_power(v[2])
                 : orlicz::CoefficientFunction::negative_part_power(v[2]);
    return kind == "double-phase-max"
               ? orlicz::PhiFunction::double_phase_max(v[0], v[1], std::move(a))
               : orlicz::PhiFunction::double_phase(v[0], v[1], std::move(a));
  }
  if (kind == "power-log") {
    const auto v = parse_list(args);
    return orlicz::PhiFunction::power_log(orlicz::CoefficientFunction::constant(v.at(0)))
        .with_declared_exponents(v.at(0), v.at(0) + 1.0);
  }
  if (kind == "weighted-linear") {
    // a(x) = x on the positive axis; the (A0) failure example
    const auto v = parse_list(args);
    return orlicz::PhiFunction::weighted_power(
        v.at(0), orlicz::CoefficientFunction::from("x", [](double x) {
          return x >= 0.0 ? x : 0.0;
        }));
  }
  throw orlicz::DomainError("unknown phi family: '" + spec + "'");
}

// u specs: const:v | linear:a,b (a + b x) | abspow:k
orlicz::GridFunction parse_u(const std::string& spec, double lo, double hi, int nodes) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "const") {
    const double v = std::stod(args);
    return orlicz::GridFunction::sample(lo, hi, nodes, [v](double) { return v; });
  }
  if (kind == "linear") {
    const auto v = parse_list(args);
    if (v.size() != 2) throw orlicz::DomainError("linear needs a,b");
    return orlicz::GridFunction::sample(lo, hi, nodes,
                                        [v](double x) { return v[0] + v[1] * x; });
  }
  if (kind == "abspow") {
    const double k = std::stod(args);
    return orlicz::GridFunction::sample(lo, hi, nodes,
                                        [k](double x) { return std::pow(std::abs(x), k); });
  }
  throw orlicz::DomainError("unknown u spec: '" + spec + "'");
}

constexpr const char* kToolVersion = "0.1.0";

void write_table(orlicz::ExperimentTable table, const GlobalOptions& g,
                 const std::string& stem) {
  table.set_metadata("tool_version", kToolVersion);
  table.set_metadata("seed", std::to_string(g.seed));
  if (g.format == "csv" || g.format == "both") {
    const std::string path = g.outdir + "/" + stem + ".csv";
    table.write_csv(path);
    std::cout << "wrote " << path << "\n";
  }
  if (g.format == "json" || g.format == "both") {
    const std::string path = g.outdir + "/" + stem + ".json";
    table.write_json(path);
    std::cout << "wrote " << path << "\n";
  }
}

void print_scalar(double v) { std::cout << orlicz::format_number(v) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_reproduce_figure(const GlobalOptions& g, const std::vector<double>& c_list,
                         double p, double q, double alpha, double x_left, double x_right,
                         int nodes, double u1_lo, double u1_hi) {
  orlicz::ExperimentTable curves({"c", "x", "u"});
  orlicz::ExperimentTable summary({"c", "x0", "u_at_minus_x0", "u_at_right"});
  summary.set_metadata("p", orlicz::format_number(p));
  summary.set_metadata("q", orlicz::format_number(q));
  summary.set_metadata("alpha", orlicz::format_number(alpha));

  bool range_ok = true;
  for (double c : c_list) {
    orlicz::dp::DPParams params{p, q, alpha, c, x_left, x_right};
    const orlicz::dp::ExactDPSolution sol(params);
    const double h = (x_right - x_left) / (nodes - 1);
    for (int i = 0; i < nodes; ++i) {
      const double x = x_left + h * i;
      curves.add_row({c, x, sol(x)});
    }
    const double u_right = sol(x_right);
    summary.add_row({c, sol.x0(), sol(-sol.x0()), u_right});
    if (u_right < u1_lo || u_right > u1_hi) range_ok = false;
  }
  write_table(curves, g, "figure_curves");
  write_table(summary, g, "figure_summary");
  if (!range_ok) {
    std::cerr << "assertion failed: right boundary values left [" << u1_lo << ", " << u1_hi
              << "]\n";
    return kExitAssertion;
  }
  return kExitOk;
}

nlohmann::json report_json(const orlicz::conditions::ConditionReport& rep,
                           const std::string& label) {
  nlohmann::json j;
  j["condition"] = label;
  j["verdict"] = orlicz::conditions::to_string(rep.verdict);
  if (rep.witness_beta) j["witness_beta"] = *rep.witness_beta;
  if (rep.witness_L) j["witness_L"] = *rep.witness_L;
  j["margin"] = rep.margin;
  j["vacuous_balls"] = rep.vacuous_balls;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  nlohmann::json worst;
  if (std::isfinite(rep.worst.x)) worst["x"] = rep.worst.x;
  if (std::isfinite(rep.worst.y)) worst["y"] = rep.worst.y;
  if (std::isfinite(rep.worst.t)) worst["t"] = rep.worst.t;
  if (std::isfinite(rep.worst.ball_radius)) worst["ball_radius"] = rep.worst.ball_radius;
  if (!worst.empty()) j["worst_sample"] = worst;
  return j;
}

int cmd_check_conditions(const GlobalOptions& g, const std::string& phi_spec, double p_test,
                         double q_test, const std::vector<double>& s_list, double x_lo,
                         double x_hi, int ball_depth, double ball_center, bool expect_holds,
                         bool strict) {
  using namespace orlicz::conditions;
  const orlicz::PhiFunction phi = parse_phi(phi_spec);

  std::vector<std::pair<std::string, ConditionReport>> reports;
  orlicz::SamplingSpec sampling;
  reports.emplace_back("A0", check_a0(phi, x_lo, x_hi, sampling));
  IncDecSpec inc_spec;
  inc_spec.x_lo = x_lo;
  inc_spec.x_hi = x_hi;
  if (p_test > 0.0) reports.emplace_back("aInc", check_aInc(phi, p_test, inc_spec));
  if (q_test > 0.0) reports.emplace_back("aDec", check_aDec(phi, q_test, inc_spec));
  const auto spec = A1SearchSpec::dyadic(ball_center, ball_depth, sampling);
  reports.emplace_back("A1", check_a1(phi, spec));
  for (double s : s_list) {
    reports.emplace_back("A1-s(s=" + orlicz::format_number(s) + ")",
                         check_a1_s(phi, s, spec));
  }

  nlohmann::json out = nlohmann::json::array();
  bool any_fails = false;
  bool any_inconclusive = false;
  for (const auto& [label, rep] : reports) {
    out.push_back(report_json(rep, label));
    std::cout << label << ": " << to_string(rep.verdict);
    if (rep.witness_beta) std::cout << "  beta=" << orlicz::format_number(*rep.witness_beta);
    if (rep.witness_L) std::cout << "  L=" << orlicz::format_number(*rep.witness_L);
    if (std::isfinite(rep.margin)) std::cout << "  margin=" << orlicz::format_number(rep.margin);
    std::cout << "\n";
    any_fails = any_fails || rep.verdict == Verdict::Fails;
    any_inconclusive = any_inconclusive || rep.verdict == Verdict::Inconclusive;
  }
  orlicz::write_file_atomic(g.outdir + "/conditions.json", out.dump(2) + "\n");
  std::cout << "wrote " << g.outdir << "/conditions.json\n";
  if (strict && any_inconclusive) return kExitInconclusive;
  if (expect_holds && any_fails) return kExitAssertion;
  return kExitOk;
}

int cmd_harnack_sweep(const GlobalOptions& g, orlicz::dp::HarnackSweepConfig cfg) {
  write_table(orlicz::dp::harnack_sweep(cfg), g, "harnack_sweep");
  return kExitOk;
}

int cmd_sharpness_sweep(const GlobalOptions& g, orlicz::dp::SharpnessSweepConfig cfg) {
  write_table(orlicz::dp::sharpness_sweep(cfg), g, "sharpness_sweep");
  return kExitOk;
}

int cmd_caccioppoli(const GlobalOptions& g, double c1, double c2, double p, double q,
                    double alpha, double ell, double sigma, double radius, int nodes) {
  using namespace orlicz;
  using namespace orlicz::dp;
  DPParams base{p, q, alpha, c1, -1.0, 1.0};
  const ExactDPSolution fast(base);
  base.c = c2;
  const ExactDPSolution slow(base);
  const Profile w = min_supersolution(fast, slow, 0.0);

  const Ball ball({0.0}, radius);
  const PhiFunction phi = fast.phi();
  const PsiR psi(phi, ball);
  CaccioppoliConfig cfg{ell, q, sigma, ball, p, std::nullopt};

  ExperimentTable table({"nodes", "lhs", "rhs_integral", "ratio", "reference_constant"});
  double prev_ratio = 0.0;
  for (int scale : {1, 2}) {
    const int n = nodes * scale + 1;
    const GridFunction u = GridFunction::sample(-1.0, 1.0, n, w.value);
    const CaccioppoliResult res =
        verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, u, cfg, fast.field());
    table.add_row({static_cast<double>(n), res.lhs, res.rhs_integral, res.ratio,
                   res.reference_constant});
    prev_ratio = res.ratio;
  }
  table.set_metadata("c1", format_number(c1));
  table.set_metadata("c2", format_number(c2));
  write_table(table, g, "caccioppoli");
  if (!std::isfinite(prev_ratio)) {
    std::cerr << "numeric failure: non-finite Caccioppoli ratio\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_norm(const std::string& phi_spec, const std::string& u_spec, double lo, double hi,
             int nodes, const std::string& s_spec) {
  const orlicz::GridFunction u = parse_u(u_spec, lo, hi, nodes);
  if (!s_spec.empty()) {
    print_scalar(orlicz::lebesgue_norm(u, parse_ext(s_spec)));
  } else {
    print_scalar(orlicz::luxemburg_norm(parse_phi(phi_spec), u));
  }
  return kExitOk;
}

int cmd_psi(const std::string& phi_spec, double ball_lo, double ball_hi, double t) {
  const orlicz::PhiFunction phi = parse_phi(phi_spec);
  print_scalar(orlicz::psi_r(phi, orlicz::Ball::interval(ball_lo, ball_hi), t));
  return kExitOk;
}

int cmd_ell(double p, int n) {
  const orlicz::ExtReal l = orlicz::dp::limiting_exponent(p, n);
  std::cout << l.str() << "\n";
  return kExitOk;
}

int cmd_nonintegrability(const GlobalOptions& g, double p, int n,
                         const std::vector<double>& eps, double factor) {
  const auto rep = orlicz::dp::p_laplace_nonintegrability(p, n, eps, factor);
  orlicz::ExperimentTable table({"eps", "partial_integral", "closed_form"});
  for (std::size_t i = 0; i < rep.eps.size(); ++i) {
    table.add_row({rep.eps[i], rep.partial[i], rep.closed_form[i]});
  }
  table.set_metadata("slope", orlicz::format_number(rep.slope));
  table.set_metadata("expected_slope", orlicz::format_number(rep.expected_slope));
  table.set_metadata("infinite_exponent", rep.infinite_exponent ? "true" : "false");
  write_table(table, g, "nonintegrability");
  std::cout << "slope " << orlicz::format_number(rep.slope) << " (expected "
            << orlicz::format_number(rep.expected_slope) << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for generalized Orlicz growth: Phi-function machinery, "
               "structural condition checks, Luxemburg norms and one-dimensional double-phase "
               "experiments"};
  app.set_config("--config");
  GlobalOptions g;
  g.outdir = default_outdir();
  app.add_option("--out", g.outdir, "output directory (env ORLICZ_LAB_OUTDIR)");
  app.add_option("--format", g.format, "output format: csv|json|both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_option("--seed", g.seed, "seed recorded for randomized sweeps");
  app.require_subcommand(1);

  int rc = kExitOk;

  // reproduce-figure
  {
    auto* sc = app.add_subcommand("reproduce-figure", "double-phase solution curves");
    auto c_list = std::make_shared<std::string>("1.01,1.1,1.2,1.3,1.4");
    auto p = std::make_shared<double>(1.1);
    auto q = std::make_shared<double>(2.0);
    auto alpha = std::make_shared<double>(0.5);
    auto x_left = std::make_shared<double>(-1.0);
    auto x_right = std::make_shared<double>(1.0);
    auto nodes = std::make_shared<int>(1001);
    auto u1 = std::make_shared<std::string>("2,32");
    sc->add_option("--c-list", *c_list, "flux constants");
    sc->add_option("--p", *p);
    sc->add_option("--q", *q);
    sc->add_option("--alpha", *alpha);
    sc->add_option("--x-left", *x_left);
    sc->add_option("--x-right", *x_right);
    sc->add_option("--nodes", *nodes)->check(CLI::Range(2, 10000000));
    sc->add_option("--u-right-range", *u1, "asserted right-boundary range lo,hi");
    sc->callback([=, &g, &rc] {
      const auto range = parse_list(*u1);
      if (range.size() != 2) throw orlicz::DomainError("--u-right-range needs lo,hi");
      rc = cmd_reproduce_figure(g, parse_list(*c_list), *p, *q, *alpha, *x_left, *x_right,
                                *nodes, range[0], range[1]);
    });
  }

  // check-conditions
  {
    auto* sc = app.add_subcommand("check-conditions", "structural condition verdicts");
    auto phi = std::make_shared<std::string>("double-phase-abs:1.1,2,0.9");
    auto p_test = std::make_shared<double>(0.0);
    auto q_test = std::make_shared<double>(0.0);
    auto s_list = std::make_shared<std::string>("");
    auto x_lo = std::make_shared<double>(-1.0);
    auto x_hi = std::make_shared<double>(1.0);
    auto depth = std::make_shared<int>(12);
    auto center = std::make_shared<double>(0.0);
    auto expect = std::make_shared<bool>(false);
    auto strict = std::make_shared<bool>(false);
    sc->add_option("--phi", *phi, "family spec, e.g. double-phase-abs:1.1,2,0.5");
    sc->add_option("--ainc-p", *p_test, "exponent for the (aInc) check");
    sc->add_option("--adec-q", *q_test, "exponent for the (aDec) check");
    sc->add_option("--s-list", *s_list, "exponents for (A1-s)");
    sc->add_option("--x-lo", *x_lo);
    sc->add_option("--x-hi", *x_hi);
    sc->add_option("--ball-depth", *depth)->check(CLI::Range(2, 40));
    sc->add_option("--ball-center", *center);
    sc->add_flag("--expect-holds", *expect, "exit 3 if any condition fails");
    sc->add_flag("--strict", *strict, "exit 4 on inconclusive verdicts");
    sc->callback([=, &g, &rc] {
      rc = cmd_check_conditions(g, *phi, *p_test, *q_test,
                                s_list->empty() ? std::vector<double>{} : parse_list(*s_list),
                                *x_lo, *x_hi, *depth, *center, *expect, *strict);
    });
  }

  // harnack-sweep
  {
    auto* sc = app.add_subcommand("harnack-sweep", "weak Harnack ratio sweep");
    auto p = std::make_shared<double>(1.1);
    auto q = std::make_shared<double>(2.0);
    auto alphas = std::make_shared<std::string>("0.3,0.6,0.9,1.2,1.35,1.5");
    auto s = std::make_shared<std::string>("2");
    auto mlist = std::make_shared<std::string>("2,3,4,5,6,7,8");
    auto ell0 = std::make_shared<double>(1.0);
    auto budget = std::make_shared<double>(1.0);
    sc->add_option("--p", *p);
    sc->add_option("--q", *q);
    sc->add_option("--alpha-list", *alphas);
    sc->add_option("--s", *s, "Lebesgue exponent, number or 'inf'");
    sc->add_option("--m-list", *mlist, "x0 = 10^-m");
    sc->add_option("--ell0", *ell0);
    sc->add_option("--norm-budget", *budget);
    sc->callback([=, &g, &rc] {
      orlicz::dp::HarnackSweepConfig cfg;
      cfg.p = *p;
      cfg.q = *q;
      cfg.alpha_list = parse_list(*alphas);
      cfg.s = parse_ext(*s);
      for (double m : parse_list(*mlist)) cfg.x0_sequence.push_back(std::pow(10.0, -m));
      cfg.ell0 = *ell0;
      cfg.norm_budget = *budget;
      rc = cmd_harnack_sweep(g, cfg);
    });
  }

  // sharpness-sweep
  {
    auto* sc = app.add_subcommand("sharpness-sweep", "norm scaling along x0 -> 0");
    auto p = std::make_shared<double>(1.1);
    auto q = std::make_shared<double>(2.0);
    auto alpha = std::make_shared<double>(0.5);
    auto s = std::make_shared<std::string>("2");
    auto mlist = std::make_shared<std::string>("2,3,4,5,6,7,8");
    sc->add_option("--p", *p);
    sc->add_option("--q", *q);
    sc->add_option("--alpha", *alpha);
    sc->add_option("--s", *s);
    sc->add_option("--m-list", *mlist);
    sc->callback([=, &g, &rc] {
      orlicz::dp::SharpnessSweepConfig cfg;
      cfg.p = *p;
      cfg.q = *q;
      cfg.alpha = *alpha;
      cfg.s = parse_ext(*s);
      for (double m : parse_list(*mlist)) cfg.x0_sequence.push_back(std::pow(10.0, -m));
      rc = cmd_sharpness_sweep(g, cfg);
    });
  }

  // caccioppoli
  {
    auto* sc = app.add_subcommand("caccioppoli", "Caccioppoli two-sided check");
    auto c1 = std::make_shared<double>(1.3);
    auto c2 = std::make_shared<double>(1.1);
    auto p = std::make_shared<double>(1.1);
    auto q = std::make_shared<double>(2.0);
    auto alpha = std::make_shared<double>(0.5);
    auto ell = std::make_shared<double>(1.0);
    auto sigma = std::make_shared<double>(0.5);
    auto radius = std::make_shared<double>(0.6);
    auto nodes = std::make_shared<int>(2048);
    sc->add_option("--c-fast", *c1);
    sc->add_option("--c-slow", *c2);
    sc->add_option("--p", *p);
    sc->add_option("--q", *q);
    sc->add_option("--alpha", *alpha);
    sc->add_option("--ell", *ell);
    sc->add_option("--sigma", *sigma);
    sc->add_option("--radius", *radius);
    sc->add_option("--nodes", *nodes)->check(CLI::Range(64, 1 << 22));
    sc->callback([=, &g, &rc] {
      rc = cmd_caccioppoli(g, *c1, *c2, *p, *q, *alpha, *ell, *sigma, *radius, *nodes);
    });
  }

  // norm / psi / ell / nonintegrability
  {
    auto* sc = app.add_subcommand("norm", "Luxemburg or Lebesgue norm of a grid function");
    auto phi = std::make_shared<std::string>("power:2");
    auto u = std::make_shared<std::string>("const:1");
    auto interval = std::make_shared<std::string>("0,1");
    auto nodes = std::make_shared<int>(2001);
    auto s = std::make_shared<std::string>("");
    sc->add_option("--phi", *phi);
    sc->add_option("--u", *u);
    sc->add_option("--interval", *interval);
    sc->add_option("--nodes", *nodes);
    sc->add_option("--s", *s, "Lebesgue exponent instead of the Luxemburg norm");
    sc->callback([=, &rc] {
      const auto iv = parse_list(*interval);
      if (iv.size() != 2) throw orlicz::DomainError("--interval needs lo,hi");
      rc = cmd_norm(*phi, *u, iv[0], iv[1], *nodes, *s);
    });
  }
  {
    auto* sc = app.add_subcommand("psi", "auxiliary psi_r value");
    auto phi = std::make_shared<std::string>("double-phase:1.1,2,0.5");
    auto ball = std::make_shared<std::string>("0.1,0.9");
    auto t = std::make_shared<double>(2.0);
    sc->add_option("--phi", *phi);
    sc->add_option("--ball", *ball, "interval lo,hi");
    sc->add_option("--t", *t);
    sc->callback([=, &rc] {
      const auto iv = parse_list(*ball);
      if (iv.size() != 2) throw orlicz::DomainError("--ball needs lo,hi");
      rc = cmd_psi(*phi, iv[0], iv[1], *t);
    });
  }
  {
    auto* sc = app.add_subcommand("ell", "limiting exponent l(p)");
    auto p = std::make_shared<double>(2.0);
    auto n = std::make_shared<int>(3);
    sc->add_option("--p", *p);
    sc->add_option("--n", *n);
    sc->callback([=, &rc] { rc = cmd_ell(*p, *n); });
  }
  {
    auto* sc = app.add_subcommand("nonintegrability", "radial integrals of the p-Laplace "
                                                      "supersolution");
    auto p = std::make_shared<double>(2.0);
    auto n = std::make_shared<int>(3);
    auto mlist = std::make_shared<std::string>("1,2,3,4,5,6,7,8");
    auto factor = std::make_shared<double>(1.0);
    sc->add_option("--p", *p);
    sc->add_option("--n", *n);
    sc->add_option("--m-list", *mlist, "eps = 10^-m");
    sc->add_option("--exponent-factor", *factor, "rescales l(p)");
    sc->callback([=, &g, &rc] {
      std::vector<double> eps;
      for (double m : parse_list(*mlist)) eps.push_back(std::pow(10.0, -m));
      rc = cmd_nonintegrability(g, *p, *n, eps, *factor);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const orlicz::DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const orlicz::PreconditionError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const orlicz::UnsupportedOperation& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const orlicz::ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return rc;
}
