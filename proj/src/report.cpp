#include "gaborcert/report.hpp"

#include <fstream>
#include <iostream>

namespace gaborcert {

namespace {

Json big_str(const BigInt& v) { return v.str(); }

}  // namespace

Json to_json(const Lattice& L) {
  Json rows = Json::array();
  for (int i = 0; i < L.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < L.dim(); ++j) row.push_back(L.entry(i, j).literal);
    rows.push_back(std::move(row));
  }
  return {{"n", L.n()},
          {"rational", L.rational()},
          {"generators", std::move(rows)},
          {"covolume", covolume_exact(L).value().convert_to<double>()}};
}

Json to_json(const RelationVerdict& v) {
  Json rel = Json::array();
  for (const auto& a : v.relation) rel.push_back(big_str(a));
  return {{"kind", to_string(v.kind)},
          {"relation", std::move(rel)},
          {"residual", v.residual},
          {"residual_floor", v.residual_floor},
          {"height", big_str(v.height)},
          {"complete", v.complete},
          {"precision_bits", v.precision_bits},
          {"note", v.note}};
}

Json to_json(const TranscendenceVerdict& v) {
  Json degrees = Json::array();
  for (const auto& d : v.degrees)
    degrees.push_back({{"k", d.k},
                       {"table_count", d.table_count},
                       {"fast_form", d.fast_form},
                       {"verdict", to_json(d.verdict)}});
  return {{"overall", to_string(v.overall)},
          {"complete", v.complete},
          {"height", big_str(v.height)},
          {"precision_bits", v.precision_bits},
          {"mode", to_string(v.mode)},
          {"degrees", std::move(degrees)},
          {"note", v.note}};
}

Json to_json(const ProductLatticeCheck& c) {
  return {{"det", c.det.str()},
          {"det_value", c.det.value().convert_to<double>()},
          {"det_irrational", c.det_irrational},
          {"entries_independent", c.entries_independent},
          {"det_below_half", c.det_below_half},
          {"certified", c.certified},
          {"complete", c.complete},
          {"independence", to_json(c.independence)},
          {"note", c.note}};
}

Json to_json(const BoundsEstimate& e) {
  Json ladder = Json::array();
  for (const auto& r : e.ladder)
    ladder.push_back({{"radius", r.radius},
                      {"degree", r.degree},
                      {"a_est", r.a_est},
                      {"b_est", r.b_est},
                      {"tail_bound", r.tail_bound}});
  return {{"a_est", e.a_est},
          {"b_est", e.b_est},
          {"tail_bound", e.tail_bound},
          {"ladder", std::move(ladder)}};
}

Json to_json(const CriterionVerdict& v) {
  return {{"mode", to_string(v.mode)},
          {"n", v.n},
          {"s", v.s},
          {"covolume", v.covolume},
          {"dual_covolume", v.dual_covolume},
          {"threshold", v.threshold},
          {"alt_threshold", v.alt_threshold},
          {"density_ok", v.density_ok},
          {"transcendence", to_json(v.transcendence)},
          {"overall", to_string(v.overall)},
          {"note", v.note}};
}

Json to_json(const ThresholdReport& r) {
  return {{"n", r.n},
          {"covolume", r.covolume},
          {"epsilon0", r.epsilon0},
          {"lambda0", r.lambda0},
          {"valid", r.valid},
          {"note", r.note}};
}

Json to_json(const JetNumberEstimate& e) {
  Json probes = Json::array();
  for (const auto& p : e.probes)
    probes.push_back({{"s", p.s},
                      {"rows", p.rows},
                      {"cols", p.cols},
                      {"radius", p.radius},
                      {"degree", p.degree},
                      {"sigma_min", p.sigma_min},
                      {"sigma_max", p.sigma_max},
                      {"failure", p.failure}});
  Json j = {{"kind", to_string(e.kind)},
            {"k", e.k},
            {"status", to_string(e.status)},
            {"radius", e.radius},
            {"degree", e.degree},
            {"tol", e.tol},
            {"probes", std::move(probes)}};
  // a saturated sweep never reports a number, only the tested range
  if (e.status == JetStatus::Saturated) {
    j["value"] = nullptr;
    j["tested_lower_bound"] = e.value;
  } else {
    j["value"] = e.value;
  }
  return j;
}

Json to_json(const AsymptoticReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"mu", to_json(row.mu)},
                    {"sigma", to_json(row.sigma)},
                    {"mu_ratio", row.mu_ratio},
                    {"sigma_ratio", row.sigma_ratio},
                    {"mu_ok", row.mu_ok},
                    {"sigma_ok", row.sigma_ok}});
  return {{"n", r.n},
          {"covolume", r.covolume},
          {"lambda0", r.lambda0},
          {"epsilon0", r.epsilon0},
          {"rows", std::move(rows)},
          {"flagged_cells", r.flagged_cells}};
}

Json to_json(const GenericityReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"trial", f.trial},
                        {"rng_state", f.rng_state},
                        {"kind", to_string(f.kind)}});
  return {{"trials", r.trials},
          {"transcendental", r.transcendental},
          {"not_transcendental", r.not_transcendental},
          {"inconclusive", r.inconclusive},
          {"pass_fraction", r.pass_fraction},
          {"failures", std::move(failures)},
          {"seed", r.seed}};
}

void append_warnings(const TranscendenceVerdict& v,
                     std::vector<std::string>& out) {
  if (v.overall == TransKind::Inconclusive)
    out.push_back("transcendence inconclusive: " + v.note);
}

void append_warnings(const CriterionVerdict& v,
                     std::vector<std::string>& out) {
  append_warnings(v.transcendence, out);
  if (v.overall == Certification::Inconclusive)
    out.push_back("criterion inconclusive: " + v.note);
}

void append_warnings(const BoundsEstimate& e, std::vector<std::string>& out) {
  if (e.a_est <= e.tail_bound)
    out.push_back(
        "finite-section lower bound is not separated from the lattice tail "
        "bound; grow the radius before reading a_est");
}

void append_warnings(const JetNumberEstimate& e,
                     std::vector<std::string>& out) {
  const std::string head =
      std::string(to_string(e.kind)) + " estimate at k = " +
      std::to_string(e.k);
  if (e.status == JetStatus::Inconclusive)
    out.push_back(head + ": a section landed inside the decision band");
  if (e.status == JetStatus::Saturated)
    out.push_back(head + ": saturated at tested range (every probed level >= " +
                  std::to_string(e.value) + " held)");
}

void append_warnings(const AsymptoticReport& r, std::vector<std::string>& out) {
  for (const auto& row : r.rows) {
    append_warnings(row.mu, out);
    append_warnings(row.sigma, out);
  }
}

Json envelope(const Report& r) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", r.command},
          {"config", r.config},
          {"results", r.results},
          {"warnings", r.warnings},
          {"wall_clock_ms", r.wall_clock_ms}};
}

std::string render(const Report& r) { return envelope(r).dump(2) + "\n"; }

void write_report(const Report& r, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << render(r);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output path: " + out_path);
  out << render(r);
}

}  // namespace gaborcert
