#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rppg {

// Malformed user input: files, configs, CLI arguments, contract violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stage failed on structurally valid input (non-convergence, overflow, ...).
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrackedPoint {
  int point_id = 0;
  double x = 0.0;
  double y = 0.0;
};

// One video frame's worth of tracked feature points.
struct LandmarkFrame {
  long frame_idx = 0;
  std::vector<TrackedPoint> points;

  const TrackedPoint* find(int point_id) const {
    for (const auto& p : points)
      if (p.point_id == point_id) return &p;
    return nullptr;
  }
};

// Time-aligned RGB intensity series for one feature-point region.
struct RgbTrace {
  int point_id = 0;
  double fps = 0.0;
  std::vector<double> r, g, b;

  std::size_t length() const { return g.size(); }
  double duration_s() const { return fps > 0.0 ? static_cast<double>(length()) / fps : 0.0; }
};

// All traces of one recording, sharing a single frame axis.
struct TraceSet {
  double fps = 0.0;
  std::vector<long> frame_idx;     // strictly increasing, shared across points
  std::map<int, RgbTrace> traces;  // keyed by point_id

  std::size_t length() const { return frame_idx.size(); }
};

struct GroundTruth {
  std::string source_id;
  std::vector<double> hr_bpm;  // one value per evaluation window

  double scalar() const {
    if (hr_bpm.empty()) throw InputError("ground truth for '" + source_id + "' is empty");
    double s = 0.0;
    for (double v : hr_bpm) s += v;
    return s / static_cast<double>(hr_bpm.size());
  }
};

// Physiological heart-rate range in beats per minute.
inline constexpr double kMinPlausibleBpm = 40.0;
inline constexpr double kMaxPlausibleBpm = 240.0;

}  // namespace rppg
