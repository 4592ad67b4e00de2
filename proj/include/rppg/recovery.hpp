#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

struct Centroid {
  double x = 0.0;
  double y = 0.0;
};

// Component-wise mean of a non-empty point set.
Centroid centroid(std::span<const TrackedPoint> points);

// Deviation between the reacquired and the pre-failure centroid, in pixels.
double centroid_rmse(const Centroid& mu, const Centroid& sigma);

enum class RecoveryPhase { Normal, AwaitingReacquire, Probing, Settled };
std::string to_string(RecoveryPhase p);

struct RecoveryState {
  int baseline_count = 0;                 // 0 = take from the first frame
  double threshold_fraction = 0.6;
  long reacquire_interval_frames = 36;
  RecoveryPhase phase = RecoveryPhase::Normal;
  Centroid old_centroid;                  // frozen at the last healthy frame
  std::vector<std::pair<long, double>> rmse_history;
  std::optional<long> failure_frame;
  std::optional<long> settle_frame;

  void validate() const;  // throws InputError
};

enum class RecoveryEventKind { FailureDetected, Reacquired, ProbeRejected, SettledAtMinima };
std::string to_string(RecoveryEventKind k);

struct RecoveryEvent {
  RecoveryEventKind kind;
  long frame_idx = 0;
  std::optional<double> epsilon;  // present for Reacquired and SettledAtMinima
};

// True when the live point count has collapsed below the configured fraction
// of the baseline (strictly below; equality does not trigger).
bool should_reacquire(int current_count, const RecoveryState& state);

// Replay tracker: candidate point set for an arbitrary frame index.
using ReacquireFn = std::function<LandmarkFrame(long frame_idx)>;

struct RecoveryResult {
  std::vector<LandmarkFrame> repaired;
  std::vector<RecoveryEvent> events;
  RecoveryState state;  // final phase, settle frame and probe history
};

// Runs the failure -> probe -> settle procedure over a track. Probes happen
// at failure_frame + k*interval only; settlement adopts the point set of the
// probe before the first epsilon increase and freezes the tracker afterward.
RecoveryResult run_recovery(const ReacquireFn& tracker,
                            const std::vector<LandmarkFrame>& frames,
                            RecoveryState state);

void write_recovery_log(const std::string& path, const std::vector<RecoveryEvent>& events);

}  // namespace rppg
