#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rppg/hr.hpp"
#include "rppg/separation.hpp"
#include "rppg/synth.hpp"
#include "rppg/types.hpp"

#include "json.hpp"

namespace rppg {

// Sectioned key=value config with fail-fast consumption: every key must be
// taken by a loader or finish() throws.
class IniConfig {
 public:
  static IniConfig from_file(const std::string& path);
  static IniConfig from_string(const std::string& text, const std::string& name);

  std::optional<std::string> take(const std::string& section, const std::string& key);
  // All keys `prefix.N` of a section in ascending N order.
  std::vector<std::string> take_indexed(const std::string& section, const std::string& prefix);
  void finish() const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::map<std::string, std::map<std::string, std::string>> data_;
};

enum class HrSource { Blood, Pigment, Residual };
HrSource parse_hr_source(const std::string& s);
std::string to_string(HrSource s);

struct StageToggles {
  bool recovery = true;
  bool rectify = true;
};

struct PipelineConfig {
  double fps = 61.0;
  std::optional<std::pair<long, long>> window;  // [start, end)
  std::uint64_t seed = 0;
  int jobs = 1;

  StageToggles stages;
  double recovery_threshold_fraction = 0.6;
  long reacquire_interval_frames = 36;

  double rls_alpha = 0.99;
  double rls_delta = 100.0;
  double warmup_s = 5.0;

  double band_low_hz = kDefaultBandLowHz;
  double band_high_hz = kDefaultBandHighHz;

  RegionConfig region;

  int ica_max_iterations = 500;
  double ica_tol = 1e-9;
  IcaNonlinearity ica_nonlinearity = IcaNonlinearity::LogCosh;

  HrSource hr_source = HrSource::Blood;
  double min_segment_s = 8.0;

  void validate() const;  // throws InputError
  nlohmann::ordered_json echo() const;
};

PipelineConfig load_pipeline_config(const std::string& path);
PipelineConfig pipeline_config_from_ini(IniConfig& ini);

SynthScenario load_scenario(const std::string& path);
SynthScenario scenario_from_ini(IniConfig& ini);

}  // namespace rppg
