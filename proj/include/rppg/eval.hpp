#pragma once

#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

struct PairedEntry {
  std::string source_id;
  double predicted_bpm = 0.0;
  double truth_bpm = 0.0;
};

struct PairedResults {
  std::vector<PairedEntry> entries;
};

// Root mean square of the percentage relative error, (pred-truth)/truth*100.
double rmse_pct(const PairedResults& results);

// Mean absolute error in bpm.
double mae(const PairedResults& results);

// Percentage of entries with |pred - truth| strictly below the threshold.
double pct_within(const PairedResults& results, double threshold_bpm = 5.0);

// Sample Pearson correlation; throws on constant series.
double pearson(const PairedResults& results);

struct Histogram {
  std::vector<double> edges;   // strictly increasing
  std::vector<long> counts;    // per half-open bin [e_i, e_i+1)
  long underflow = 0;
  long overflow = 0;
};

// Histogram of signed errors (pred - truth).
Histogram error_histogram(const PairedResults& results, const std::vector<double>& bin_edges);

struct MetricSuite {
  double rmse_pct = 0.0;
  double mae_bpm = 0.0;
  double pct_within_5bpm = 0.0;
  double pearson_r = 0.0;
  long n = 0;
};

MetricSuite compute_metrics(const PairedResults& results);

}  // namespace rppg
