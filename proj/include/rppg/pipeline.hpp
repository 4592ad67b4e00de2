#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rppg/config.hpp"
#include "rppg/eval.hpp"
#include "rppg/hr.hpp"
#include "rppg/recovery.hpp"
#include "rppg/rectify.hpp"
#include "rppg/separation.hpp"
#include "rppg/types.hpp"

namespace rppg {

struct SegmentOutput {
  std::size_t start_pos = 0;  // positions within the windowed trace
  std::size_t end_pos = 0;
  double freq_hz = 0.0;
  double prominence = 0.0;
  std::size_t samples_used = 0;
  bool low_confidence = false;
  // Populated only when keep_series is requested (CSV dumps).
  std::optional<SeparatedSources> separated;
  std::optional<RectifiedTrace> rectified;
};

struct PointOutput {
  int point_id = 0;
  std::vector<SegmentOutput> segments;
  std::optional<HrEstimate> estimate;
  std::string skip_reason;  // non-empty when the point produced no estimate
};

struct EstimateResult {
  HrReport report;
  std::vector<PointOutput> points;
  std::vector<RecoveryEvent> recovery_events;
  RecoveryPhase recovery_phase = RecoveryPhase::Normal;
  std::optional<long> failure_frame;
  std::optional<long> settle_frame;
  std::vector<long> trace_frames;  // frame axis of the windowed traces
  std::vector<std::string> flags;
};

// Full chain: window -> recovery -> per-point separation, rectification and
// spectral estimation -> aggregation. `reacquire` may be null, in which case
// the observed track doubles as the replay source.
EstimateResult run_estimate(const std::vector<LandmarkFrame>& track,
                            const TraceSet& traces,
                            const ReacquireFn* reacquire,
                            const PipelineConfig& cfg,
                            bool keep_series = false);

ReacquireFn make_track_replay(const std::vector<LandmarkFrame>& frames);

struct SourceSpec {
  std::string source_id;
  std::string track_path;
  std::string trace_path;
  std::string truth_path;
};

// Manifest CSV: header `source_id,track,trace,truth`; paths resolve relative
// to the manifest's directory.
std::vector<SourceSpec> load_manifest(const std::string& path);

struct AblationRow {
  std::string config_name;
  StageToggles toggles;
  MetricSuite metrics;
};

struct AblationOutcome {
  std::vector<AblationRow> rows;          // base, base+recovery, base+rectify, all_steps
  PairedResults all_steps_results;
  std::vector<std::pair<std::string, std::string>> failures;  // source_id, error
};

// Runs the pipeline once per stage-toggle combination over every source.
// A source that fails is excluded from every row and recorded; sources run
// concurrently up to cfg.jobs with a deterministic merge order.
AblationOutcome ablation_run(const std::vector<SourceSpec>& sources, const PipelineConfig& cfg);

}  // namespace rppg
