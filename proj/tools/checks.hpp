#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "skelrecon/lattice.hpp"

namespace skelrecon::checks {

struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Faces of a spec by rank (0..d-1). The acceptance binary plugs in an
// independent implementation; by default the library lattice is used.
using FaceSource = std::function<std::map<int, std::vector<VertexSet>>(const PolytopeSpec&)>;

struct SuiteOptions {
  int dmin = 4;
  int dmax = 7;
  bool timing = true;
  FaceSource faces;
};

struct BenchRow {
  int m = 0;
  int vertices = 0;
  double median_ms = 0;
};

/// Median-of-`repeats` wall time of 2-skeleton reconstruction on prisms over
/// m-gons.
std::vector<BenchRow> bench_prisms(const std::vector<int>& sizes, int repeats = 5);

/// Least-squares slope of log(time) against log(m).
double loglog_slope(const std::vector<BenchRow>& rows);

CheckLine ac1_counterexamples(const SuiteOptions& o);
CheckLine ac2_two_skeleton(const SuiteOptions& o);
CheckLine ac3_parity(const SuiteOptions& o);
CheckLine ac4_linear_time(const SuiteOptions& o);
CheckLine ac5_one_nonsimple(const SuiteOptions& o);
CheckLine ac6_two_nonsimple(const SuiteOptions& o);
CheckLine ac7_negative_control(const SuiteOptions& o);
CheckLine ac8_truncation(const SuiteOptions& o);

std::vector<CheckLine> run_all(const SuiteOptions& o);

}  // namespace skelrecon::checks
