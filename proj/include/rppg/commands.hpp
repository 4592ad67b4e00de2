#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rppg/config.hpp"
#include "rppg/pipeline.hpp"

namespace rppg {

// Exit-code contract: 0 success, 1 input error, 2 pipeline error,
// 3 partial-batch failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPipelineError = 2;
inline constexpr int kExitPartialBatch = 3;

struct EstimateOptions {
  std::string track_path;
  std::string trace_path;
  std::string out_path;
  std::optional<std::string> reacq_path;   // replay track; defaults to the observed one
  std::optional<std::string> truth_path;
  std::optional<std::string> recovery_log_path;
  std::optional<std::string> dump_components_dir;
  std::optional<std::string> dump_rectified_dir;
};

int cmd_estimate(const EstimateOptions& opts, const PipelineConfig& cfg);

struct SynthOptions {
  std::string scenario_path;
  std::string out_dir;
};

int cmd_synth(const SynthOptions& opts);

struct EvalOptions {
  std::string manifest_path;
  std::string out_dir;
  double hist_bin_width_bpm = 1.0;
  double hist_range_bpm = 20.0;  // bins span [-range, range]
};

int cmd_eval(const EvalOptions& opts, const PipelineConfig& cfg);

struct RecoverDemoOptions {
  std::string track_path;
  std::optional<std::string> reacq_path;
  std::string out_path;
};

int cmd_recover_demo(const RecoverDemoOptions& opts, const PipelineConfig& cfg);

}  // namespace rppg
