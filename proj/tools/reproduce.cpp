#include "reproduce.hpp"

#include "gaborcert/errors.hpp"
#include "gaborcert/frame.hpp"
#include "gaborcert/thresholds.hpp"
#include "gaborcert/transcendence.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace gaborcert {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Anchor rows accumulate into the report and into the overall verdict.
struct AnchorTable {
  Json rows = Json::array();
  bool all_pass = true;

  void row(const std::string& name, const std::string& expected,
           const std::string& measured, bool ok) {
    rows.push_back({{"name", name},
                    {"expected", expected},
                    {"measured", measured},
                    {"pass", ok}});
    all_pass = all_pass && ok;
  }
  void close(const std::string& name, const std::string& tag, double expected,
             double measured, double rel) {
    bool ok = std::abs(measured - expected) <=
              rel * std::max(std::abs(expected), 1e-300);
    row(name, tag + " = " + fmt(expected) + " (rel " + fmt(rel) + ")",
        fmt(measured), ok);
  }
};

Lattice diag_1d(const std::string& a) {
  return make_lattice(1, {a, "0", "0", "1"});
}

Lattice product_surd_lattice() {
  return make_lattice(2, {"sqrt(2)", "sqrt(3)", "0", "0",  //
                          "sqrt(5)", "sqrt(7)", "0", "0",  //
                          "0",       "0",       "1", "0",  //
                          "0",       "0",       "0", "1"});
}

// The Corollary pipeline end to end: exact covolume, the three product
// conditions, and the full certification on the 4x4 lattice.
Report scenario_cor_product(bool& pass) {
  RelationOptions opt;
  opt.precision_bits = 256;
  opt.height = 1000000;

  AnchorTable t;
  ProductLatticeCheck chk =
      product_lattice_check("sqrt(2)", "sqrt(3)", "sqrt(5)", "sqrt(7)", opt);
  t.row("det irrational", "true", chk.det_irrational ? "true" : "false",
        chk.det_irrational);
  t.row("entries Z-independent up to H = 10^6", "NoRelationUpToHeight",
        to_string(chk.independence.kind),
        chk.independence.kind == RelationKind::NoRelationUpToHeight);
  t.row("|det| < 1/2", "true", chk.det_below_half ? "true" : "false",
        chk.det_below_half);
  t.row("product check certified", "true", chk.certified ? "true" : "false",
        chk.certified);

  Lattice L = product_surd_lattice();
  Real ref = sqrt(Real(15)) - sqrt(Real(14));
  double diff = std::abs((covolume(L) - ref).convert_to<double>());
  t.row("covolume = sqrt(15) - sqrt(14)", "|diff| <= 1e-12", fmt(diff),
        diff <= 1e-12);

  CriterionVerdict v = criterion_verdict(L, 0, FrameMode::Multiwindow, opt);
  t.row("certify exit code", "0",
        std::to_string(v.overall == Certification::CertifiedUpToHeight ? 0
                       : v.overall == Certification::NotCertifiedByCriterion
                           ? 1
                           : 2),
        v.overall == Certification::CertifiedUpToHeight);

  Report r;
  r.command = "reproduce";
  r.config = {{"scenario", "cor-product"},
              {"height", "1000000"},
              {"precision_bits", 256}};
  r.results = {{"product_check", to_json(chk)},
               {"verdict", to_json(v)},
               {"anchors", t.rows},
               {"pass", t.all_pass}};
  append_warnings(v, r.warnings);
  pass = t.all_pass;
  return r;
}

// n = 1 Gaussian window: the classical covolume-below-one dichotomy on a
// small grid, the stability of the lower section bound below critical
// density, and the von Neumann decay at critical density.
Report scenario_n1_gaussian(bool& pass) {
  AnchorTable t;
  Json verdicts = Json::array();
  const std::vector<std::pair<std::string, bool>> grid = {
      {"1/2", true}, {"4/5", true}, {"1", false}, {"6/5", false}};
  for (const auto& [lit, want] : grid) {
    CriterionVerdict v =
        criterion_verdict(diag_1d(lit), 0, FrameMode::Multiwindow);
    bool got = v.overall == Certification::CertifiedUpToHeight;
    t.row("certify covolume " + lit, want ? "Certified" : "NotCertified",
          to_string(v.overall), got == want);
    verdicts.push_back(to_json(v));
  }

  GaborSystem below{diag_1d("4/5"), 0, FrameMode::Multiwindow, 6.0, 20};
  BoundsEstimate est = frame_bounds_estimate(below);
  double lo = est.ladder.front().a_est, hi = lo;
  for (const auto& rung : est.ladder) {
    lo = std::min(lo, rung.a_est);
    hi = std::max(hi, rung.a_est);
  }
  t.close("a_est at covolume 4/5, finest rung", "a_est", 0.691596928144,
          est.a_est, 1e-6);
  t.row("a_est drift across ladder", "< 0.20", fmt((hi - lo) / hi),
        (hi - lo) / hi < 0.20);

  GaborSystem crit{diag_1d("1"), 0, FrameMode::Multiwindow, 6.0, 10};
  BoundsEstimate e10 = frame_bounds_estimate(crit, {{6.0, 10}});
  BoundsEstimate e40 = frame_bounds_estimate(crit, {{6.0, 40}});
  t.close("critical a_est, D = 10", "a_est", 0.257239984073, e10.a_est, 1e-6);
  t.close("critical a_est, D = 40", "a_est", 0.105518581767, e40.a_est, 1e-6);
  t.row("critical a_est decays with the degree", ">= 2.0x",
        fmt(e10.a_est / e40.a_est) + "x", e10.a_est / e40.a_est >= 2.0);

  Report r;
  r.command = "reproduce";
  r.config = {{"scenario", "n1-gaussian"}};
  r.results = {{"grid", std::move(verdicts)},
               {"bounds_below_critical", to_json(est)},
               {"bounds_critical_d10", to_json(e10)},
               {"bounds_critical_d40", to_json(e40)},
               {"anchors", t.rows},
               {"pass", t.all_pass}};
  append_warnings(est, r.warnings);
  pass = t.all_pass;
  return r;
}

// n = 1 multiwindow reduction: certified exactly when covolume < s + 1 on
// a 3 x 3 grid.
Report scenario_n1_multiwindow(bool& pass) {
  AnchorTable t;
  Json verdicts = Json::array();
  for (const std::string lit : {"1/2", "3/2", "5/2"}) {
    double c = lit == "1/2" ? 0.5 : lit == "3/2" ? 1.5 : 2.5;
    for (int s = 0; s <= 2; ++s) {
      CriterionVerdict v =
          criterion_verdict(diag_1d(lit), s, FrameMode::Multiwindow);
      bool want = c < s + 1;
      bool got = v.overall == Certification::CertifiedUpToHeight;
      t.row("covolume " + lit + ", s = " + std::to_string(s),
            want ? "Certified" : "NotCertified", to_string(v.overall),
            got == want);
      verdicts.push_back(to_json(v));
    }
  }

  Report r;
  r.command = "reproduce";
  r.config = {{"scenario", "n1-multiwindow"}};
  r.results = {{"grid", std::move(verdicts)},
               {"anchors", t.rows},
               {"pass", t.all_pass}};
  pass = t.all_pass;
  return r;
}

// Monte-Carlo genericity: 100 seeded n = 2 samples at height 10^4.
Report scenario_genericity(bool& pass) {
  GenericityReport rep = genericity_sample(100, BigInt(10000), 256, 1);
  AnchorTable t;
  t.row("transcendental count", "100 (floor 99)",
        std::to_string(rep.transcendental),
        rep.transcendental == 100 && rep.transcendental >= 99);
  t.row("inconclusive count", "0", std::to_string(rep.inconclusive),
        rep.inconclusive == 0);
  t.row("non-transcendental trials recorded", "0",
        std::to_string(rep.failures.size()), rep.failures.empty());

  Report r;
  r.command = "reproduce";
  r.config = {{"scenario", "genericity"},
              {"trials", 100},
              {"height", "10000"},
              {"precision_bits", 256},
              {"seed", 1}};
  r.results = {{"genericity", to_json(rep)},
               {"anchors", t.rows},
               {"pass", t.all_pass}};
  pass = t.all_pass;
  return r;
}

// Jet-number asymptotics on the unit lattice at k in {2, 4, 8}.
Report scenario_asymptotics(bool& pass) {
  ComplexLattice U =
      complexify(make_lattice(1, Eigen::MatrixXd::Identity(2, 2)));
  AsymptoticReport rep = asymptotic_report(U, {2.0, 4.0, 8.0}, 6.0, 700);

  AnchorTable t;
  const int want_mu[] = {1, 3, 7};
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const AsymptoticRow& row = rep.rows[i];
    t.row("mu at k = " + fmt(row.k), std::to_string(want_mu[i]),
          std::to_string(row.mu.value),
          row.mu.value == want_mu[i] && row.mu.status == JetStatus::Ok);
    t.row("sigma at k = " + fmt(row.k), std::to_string(want_mu[i]),
          std::to_string(row.sigma.value),
          row.sigma.value == want_mu[i] && row.sigma.status == JetStatus::Ok);
    t.row("mu/k within 0.5 of lambda0 = 1", "|mu/k - 1| <= 0.5",
          fmt(std::abs(row.mu_ratio - rep.lambda0)),
          std::abs(row.mu_ratio - rep.lambda0) <= 0.5);
    t.row("one-sided bounds at k = " + fmt(row.k),
          "mu/k <= lambda0, sigma/k <= epsilon0",
          fmt(row.mu_ratio) + ", " + fmt(row.sigma_ratio),
          row.mu_ok && row.sigma_ok);
  }
  t.row("flagged cells", "0", std::to_string(rep.flagged_cells),
        rep.flagged_cells == 0);

  Report r;
  r.command = "reproduce";
  r.config = {{"scenario", "asymptotics"},
              {"k_list", {2.0, 4.0, 8.0}},
              {"radius", 6.0},
              {"degree", 700},
              {"tol", 1e-6}};
  r.results = {{"asymptotics", to_json(rep)},
               {"anchors", t.rows},
               {"pass", t.all_pass}};
  append_warnings(rep, r.warnings);
  pass = t.all_pass;
  return r;
}

}  // namespace

Report run_scenario(const std::string& name, bool& pass) {
  if (name == "cor-product") return scenario_cor_product(pass);
  if (name == "n1-gaussian") return scenario_n1_gaussian(pass);
  if (name == "n1-multiwindow") return scenario_n1_multiwindow(pass);
  if (name == "genericity") return scenario_genericity(pass);
  if (name == "asymptotics") return scenario_asymptotics(pass);
  throw UnknownScenario("unknown scenario '" + name + "'; known: " +
                        kScenarioNames);
}

}  // namespace gaborcert
