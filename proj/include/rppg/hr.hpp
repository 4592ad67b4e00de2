#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

inline constexpr double kDefaultBandLowHz = 0.6;
inline constexpr double kDefaultBandHighHz = 4.0;

// Zero mean, unit variance.
std::vector<double> normalize(std::span<const double> series);

// Zero-phase band-pass via an FFT-domain mask: flat inside [low, high],
// raised-cosine transition of kBandTransitionHz outside the edges.
inline constexpr double kBandTransitionHz = 0.15;
std::vector<double> bandpass(std::span<const double> signal, double fps,
                             double low_hz = kDefaultBandLowHz,
                             double high_hz = kDefaultBandHighHz);

// Zero-phase DC blocker: zero below cutoff/2, one above cutoff. The
// rectifier runs on AC-coupled series; sustained plateaus in the reference
// decay within a couple of seconds, so between illumination events the
// adaptive gain freezes instead of chasing plateau offsets.
inline constexpr double kRectifyAcCutoffHz = 0.45;
std::vector<double> highpass(std::span<const double> signal, double fps,
                             double cutoff_hz = kRectifyAcCutoffHz);

struct PeakEstimate {
  double freq_hz = 0.0;
  double prominence = 0.0;  // peak power over mean in-band power
  bool tie_low_confidence = false;
};

// Hann-windowed FFT peak restricted to the band, refined by quadratic
// interpolation over the log power of the peak and its two neighbours.
// Equal peaks resolve to the lower frequency and set the tie flag.
PeakEstimate dominant_frequency(std::span<const double> signal, double fps,
                                double low_hz = kDefaultBandLowHz,
                                double high_hz = kDefaultBandHighHz);

inline double hz_to_bpm(double f_hz) {
  if (f_hz < 0.0) throw InputError("frequency must be >= 0");
  return 60.0 * f_hz;
}

struct RegionConfig {
  double box_fraction = 0.15;                   // half-size as a fraction of the face box
  std::optional<std::vector<int>> allowlist;    // overrides the box when set
  std::string describe() const;
};

// Points whose median position over the track lies within the central box,
// or the explicit allowlist when one is configured.
std::vector<int> select_central_points(const std::vector<LandmarkFrame>& frames,
                                       const RegionConfig& region);

struct HrEstimate {
  int point_id = 0;
  double freq_hz = 0.0;
  double bpm = 0.0;
  double prominence = 0.0;
};

struct HrReport {
  std::vector<HrEstimate> per_point;
  double average_bpm = 0.0;
  int n_points_used = 0;
  std::string region;
};

// Arithmetic mean of the per-point estimates.
HrReport aggregate(const std::vector<HrEstimate>& estimates);

}  // namespace rppg
