#pragma once

// JSON documents for every analysis result, and the envelope the
// command-line tool writes.  One source of truth: any human-facing table
// is rendered from these documents, never computed separately.  Keys are
// emitted in sorted order and numbers round-trip, so a report is
// byte-stable for a fixed config and seed; the only run-dependent field
// is wall_clock_ms.  Every numeric result carries the truncation and
// search bounds it was computed under (radius/degree ladders, relation
// height, precision bits).

#include "gaborcert/frame.hpp"
#include "gaborcert/thresholds.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gaborcert {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "gaborcert";
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Lattice& L);
Json to_json(const RelationVerdict& v);
Json to_json(const TranscendenceVerdict& v);
Json to_json(const ProductLatticeCheck& c);
Json to_json(const BoundsEstimate& e);
Json to_json(const CriterionVerdict& v);
Json to_json(const ThresholdReport& r);
Json to_json(const JetNumberEstimate& e);
Json to_json(const AsymptoticReport& r);
Json to_json(const GenericityReport& r);

// Warnings surface everything a warning-free report promises the absence
// of: inconclusive cells, saturated jet sweeps, and section minima that
// the lattice tail bound could swallow.
void append_warnings(const TranscendenceVerdict& v,
                     std::vector<std::string>& out);
void append_warnings(const CriterionVerdict& v, std::vector<std::string>& out);
void append_warnings(const BoundsEstimate& e, std::vector<std::string>& out);
void append_warnings(const JetNumberEstimate& e,
                     std::vector<std::string>& out);
void append_warnings(const AsymptoticReport& r,
                     std::vector<std::string>& out);

struct Report {
  std::string command;
  Json config;
  Json results;
  std::vector<std::string> warnings;
  long long wall_clock_ms = 0;
};

Json envelope(const Report& r);
std::string render(const Report& r);  // envelope dumped at indent 2

// Empty path writes to stdout.
void write_report(const Report& r, const std::string& out_path);

}  // namespace gaborcert
