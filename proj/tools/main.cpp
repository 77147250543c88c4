// Command-line front end: certification, transcendence, frame-bound and
// jet-number estimation, and the pinned regression scenarios.  Every
// command emits one JSON report (stdout or --out); exit codes follow the
// certification contract so the tool scripts cleanly:
//   0  certified / transcendental / all anchors met / estimate clean
//   1  not certified by the criterion / relation found / anchor mismatch
//   2  inconclusive (height or precision exhausted, flagged cells)
//   64 unreadable input (lattice-spec parse error, unknown scenario)
//   65 domain error (out-of-range parameter, truncation cap)
//   70 internal error

#include "gaborcert/errors.hpp"
#include "gaborcert/frame.hpp"
#include "gaborcert/report.hpp"
#include "gaborcert/thresholds.hpp"
#include "gaborcert/transcendence.hpp"
#include "reproduce.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace gaborcert;

FrameMode parse_frame_mode(const std::string& s) {
  return s == "super" ? FrameMode::Super : FrameMode::Multiwindow;
}

KernelMode parse_kernel_mode(const std::string& s) {
  if (s == "exact") return KernelMode::Exact;
  if (s == "numeric") return KernelMode::Numeric;
  return KernelMode::Auto;
}

// "4:10,6:20,8:30" -> rungs of (radius, degree)
std::vector<std::pair<double, int>> parse_ladder(const std::string& s) {
  std::vector<std::pair<double, int>> rungs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string rung = s.substr(pos, comma - pos);
    std::size_t colon = rung.find(':');
    if (colon == std::string::npos)
      throw ParseError("ladder rung '" + rung + "' is not RADIUS:DEGREE");
    try {
      rungs.emplace_back(std::stod(rung.substr(0, colon)),
                         std::stoi(rung.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("ladder rung '" + rung + "' is not RADIUS:DEGREE");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (rungs.empty()) throw ParseError("empty ladder");
  return rungs;
}

int exit_code(Certification c) {
  switch (c) {
    case Certification::CertifiedUpToHeight: return 0;
    case Certification::NotCertifiedByCriterion: return 1;
    case Certification::Inconclusive: return 2;
  }
  return 70;
}

int exit_code(TransKind k) {
  switch (k) {
    case TransKind::TranscendentalUpToHeight: return 0;
    case TransKind::NotTranscendental: return 1;
    case TransKind::Inconclusive: return 2;
  }
  return 70;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gabor-frame certification for Gaussian and Hermite windows: exact "
      "density bookkeeping plus lattice transcendence, cross-validated by "
      "finite-section frame bounds and Fock-space jet numbers."};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned precision_bits = 256;
  std::string height = "1000000";
  std::uint64_t seed = 1;
  std::string out;
  app.add_option("--precision-bits", precision_bits,
                 "working precision for numeric searches")
      ->capture_default_str();
  app.add_option("--height", height, "integer-relation height bound H")
      ->check(CLI::Validator(
          [](std::string& v) {
            if (v.empty()) return std::string("empty height");
            for (char c : v)
              if (!std::isdigit(static_cast<unsigned char>(c)))
                return std::string("height must be a positive integer");
            return std::string();
          },
          "UINT"))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized experiments")
      ->capture_default_str();
  app.add_option("--out", out, "write the JSON report to this path");

  std::string lattice_path, mode = "multiwindow", kernel = "auto", ladder;
  int s = 0, degree = 20;
  double radius = 6.0, tol = 1e-6;
  std::vector<double> k_list = {1.0, 2.0, 4.0};
  std::string scenario;

  CLI::App* certify = app.add_subcommand(
      "certify", "certify the frame property (density + transcendence)");
  certify->add_option("lattice", lattice_path, "lattice-spec file")
      ->required();
  certify->add_option("--s", s, "top Hermite level")->capture_default_str();
  certify->add_option("--mode", mode, "multiwindow|super")
      ->check(CLI::IsMember({"multiwindow", "super"}))
      ->capture_default_str();
  bool crosscheck = false;
  certify->add_flag("--crosscheck", crosscheck,
                    "also run the finite-section bounds ladder");
  certify->add_option("--radius", radius, "truncation radius")
      ->capture_default_str();
  certify->add_option("--degree", degree, "section degree")
      ->capture_default_str();
  certify->add_option("--ladder", ladder,
                      "cross-check rungs, e.g. 4:10,6:20,8:30");

  CLI::App* trans = app.add_subcommand(
      "transcendence", "decide ker int_Gamma = 0 for the complexified lattice");
  trans->add_option("lattice", lattice_path, "lattice-spec file")->required();
  trans->add_option("--mode", kernel, "auto|exact|numeric")
      ->check(CLI::IsMember({"auto", "exact", "numeric"}))
      ->capture_default_str();

  CLI::App* bounds = app.add_subcommand(
      "framebounds", "finite-section frame-bound estimates with tail bounds");
  bounds->add_option("lattice", lattice_path, "lattice-spec file")->required();
  bounds->add_option("--s", s, "top Hermite level")->capture_default_str();
  bounds->add_option("--mode", mode, "multiwindow|super")
      ->check(CLI::IsMember({"multiwindow", "super"}))
      ->capture_default_str();
  bounds->add_option("--radius", radius, "truncation radius")
      ->capture_default_str();
  bounds->add_option("--degree", degree, "section degree")
      ->capture_default_str();
  bounds->add_option("--ladder", ladder, "rungs, e.g. 4:10,6:20,8:30");

  CLI::App* thr = app.add_subcommand(
      "thresholds",
      "jet-number estimates against the closed-form density targets");
  thr->add_option("lattice", lattice_path, "lattice-spec file")->required();
  thr->add_option("--k-list", k_list, "weights k (strictly increasing)")
      ->delimiter(',')
      ->capture_default_str();
  thr->add_option("--radius", radius, "condition radius")
      ->capture_default_str();
  int jet_degree = 700;
  thr->add_option("--degree", jet_degree, "monomial degree cap")
      ->capture_default_str();
  thr->add_option("--tol", tol, "relative singular-value threshold")
      ->capture_default_str();

  CLI::App* repro = app.add_subcommand(
      "reproduce", std::string("pinned regression scenarios: ") +
                       kScenarioNames);
  repro->add_option("name", scenario, "scenario name")->required();

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  Json global_cfg = {{"precision_bits", precision_bits},
                     {"height", height},
                     {"seed", seed}};
  RelationOptions opt;
  opt.precision_bits = precision_bits;
  opt.height = BigInt(height);

  try {
    if (app.got_subcommand(certify)) {
      Lattice L = read_lattice_file(lattice_path);
      CriterionVerdict v =
          criterion_verdict(L, s, parse_frame_mode(mode), opt);
      Report r;
      r.command = "certify";
      r.config = global_cfg;
      r.config.update({{"lattice_path", lattice_path},
                       {"lattice", to_json(L)},
                       {"s", s},
                       {"mode", mode},
                       {"crosscheck", crosscheck}});
      r.results = {{"criterion", to_json(v)}};
      append_warnings(v, r.warnings);
      if (crosscheck) {
        GaborSystem sys{L, s, parse_frame_mode(mode), radius, degree};
        auto rungs = !ladder.empty() ? parse_ladder(ladder)
                     : (certify->count("--radius") || certify->count("--degree"))
                         ? std::vector<std::pair<double, int>>{{radius, degree}}
                         : kDefaultLadder;
        BoundsEstimate est = frame_bounds_estimate(sys, rungs);
        r.results["bounds"] = to_json(est);
        append_warnings(est, r.warnings);
      }
      r.wall_clock_ms = elapsed_ms();
      write_report(r, out);
      return exit_code(v.overall);
    }

    if (app.got_subcommand(trans)) {
      Lattice L = read_lattice_file(lattice_path);
      TranscendenceVerdict v =
          is_transcendental(L, opt, parse_kernel_mode(kernel));
      Report r;
      r.command = "transcendence";
      r.config = global_cfg;
      r.config.update({{"lattice_path", lattice_path},
                       {"lattice", to_json(L)},
                       {"mode", kernel}});
      r.results = {{"transcendence", to_json(v)}};
      append_warnings(v, r.warnings);
      r.wall_clock_ms = elapsed_ms();
      write_report(r, out);
      return exit_code(v.overall);
    }

    if (app.got_subcommand(bounds)) {
      Lattice L = read_lattice_file(lattice_path);
      GaborSystem sys{L, s, parse_frame_mode(mode), radius, degree};
      auto rungs = !ladder.empty() ? parse_ladder(ladder)
                   : (bounds->count("--radius") || bounds->count("--degree"))
                       ? std::vector<std::pair<double, int>>{{radius, degree}}
                       : kDefaultLadder;
      BoundsEstimate est = frame_bounds_estimate(sys, rungs);
      Report r;
      r.command = "framebounds";
      r.config = global_cfg;
      r.config.update({{"lattice_path", lattice_path},
                       {"lattice", to_json(L)},
                       {"s", s},
                       {"mode", mode},
                       {"ladder", Json(rungs)}});
      r.results = {{"bounds", to_json(est)}};
      append_warnings(est, r.warnings);
      r.wall_clock_ms = elapsed_ms();
      write_report(r, out);
      return 0;
    }

    if (app.got_subcommand(thr)) {
      Lattice L = read_lattice_file(lattice_path);
      TranscendenceVerdict tv = is_transcendental(L, opt);
      ThresholdReport targets = seshadri_transcendental(L, tv);
      AsymptoticReport rep =
          asymptotic_report(complexify(L), k_list, radius, jet_degree, tol);
      Report r;
      r.command = "thresholds";
      r.config = global_cfg;
      r.config.update({{"lattice_path", lattice_path},
                       {"lattice", to_json(L)},
                       {"k_list", k_list},
                       {"radius", radius},
                       {"degree", jet_degree},
                       {"tol", tol}});
      r.results = {{"targets", to_json(targets)},
                   {"transcendence", to_json(tv)},
                   {"asymptotics", to_json(rep)}};
      append_warnings(tv, r.warnings);
      append_warnings(rep, r.warnings);
      r.wall_clock_ms = elapsed_ms();
      write_report(r, out);
      return rep.flagged_cells == 0 ? 0 : 2;
    }

    // reproduce
    bool pass = false;
    Report r = run_scenario(scenario, pass);
    r.wall_clock_ms = elapsed_ms();
    write_report(r, out);
    return pass ? 0 : 1;
  } catch (const UnknownScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
