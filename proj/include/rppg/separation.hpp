#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

enum class IcaNonlinearity { LogCosh, Cube };
IcaNonlinearity parse_nonlinearity(const std::string& s);
std::string to_string(IcaNonlinearity n);

struct IcaConfig {
  int max_iterations = 500;
  double convergence_tol = 1e-9;
  IcaNonlinearity nonlinearity = IcaNonlinearity::LogCosh;
  std::uint64_t seed = 0;

  void validate() const;
};

struct IcaResult {
  std::array<std::vector<double>, 3> components;  // unit variance, zero mean
  Eigen::Matrix3d mixing;                         // zero-meaned channels ~= mixing * components
  // On effectively rank-2 input one direction is numerical surplus; it is
  // kept (reconstruction stays exact) but marked so labeling can skip it.
  std::array<bool, 3> degenerate{false, false, false};
};

// Whitened fixed-point ICA over the zero-meaned r/g/b series of one trace.
// Deterministic for a fixed config seed.
IcaResult ica_separate(const RgbTrace& trace, const IcaConfig& cfg);

struct ComponentLabels {
  int blood = 0;      // strongest in-band spectral peak relative to total power
  int pigment = 1;    // of the rest, most power below the band
  int residual = 2;
  bool low_confidence = false;  // blood peak under 2x the in-band average
  double blood_peak_ratio = 0.0;
};

ComponentLabels classify_components(const std::array<std::vector<double>, 3>& components,
                                    double fps, double band_low_hz = 0.6, double band_high_hz = 4.0);
ComponentLabels classify_components(const std::array<std::vector<double>, 3>& components,
                                    double fps, double band_low_hz, double band_high_hz,
                                    const std::array<bool, 3>& degenerate);

struct SeparatedSources {
  std::vector<double> blood_flow_impure;
  std::vector<double> pigmentation_impure;
  std::vector<double> residual;
  Eigen::Matrix3d mixing;  // columns ordered (blood, pigment, residual)
  int point_id = 0;
  double fps = 0.0;
  bool low_confidence = false;
};

// ica_separate + classify_components + rescaling of the blood and pigment
// series to their channel footprints (mixing-column norms).
SeparatedSources separate_trace(const RgbTrace& trace, const IcaConfig& cfg,
                                double band_low_hz = 0.6, double band_high_hz = 4.0);

}  // namespace rppg
