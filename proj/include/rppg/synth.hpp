#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

enum class EventShape { Step, Ramp, Pulse };

EventShape parse_event_shape(const std::string& s);
std::string to_string(EventShape s);

struct IlluminationEvent {
  double time_s = 0.0;    // step/ramp onset, pulse center
  double amplitude = 0.0;
  EventShape shape = EventShape::Step;
};

struct DropoutEvent {
  long start_frame = 0;
  long end_frame = 0;  // half-open [start, end)
  double fraction_of_points_lost = 0.0;
};

struct SynthScenario {
  double true_hr_bpm = 72.0;
  double fps = 61.0;
  double duration_s = 30.0;
  int n_points = 25;           // laid out on a near-square grid
  std::vector<IlluminationEvent> illumination_events;
  std::vector<DropoutEvent> dropout_events;
  double noise_sigma = 0.0;
  double ppg_harmonic = 0.0;   // relative 2nd harmonic amplitude, 0 = pure tone
  std::uint64_t seed = 0;

  long n_frames() const;
  void validate() const;  // throws InputError
};

// Channel gains of the generator's sources. The illumination vector (1,1,1)
// decomposes exactly as 0.5 * kPpg + 1.0 * kResidualDir, so a 3-channel
// separation can only ever recover a pulse-plus-interference and an
// interference-carrying component, never a clean interference source. When
// any illumination event is configured, a slow ambient flutter rides on the
// same per-trace illumination gain, keeping the two components' interference
// contents in a fixed ratio.
struct SynthGains {
  static constexpr double kPpg[3] = {0.6, 2.0, 0.4};          // r, g, b
  static constexpr double kResidualDir[3] = {0.7, 0.0, 0.8};  // (1,1,1) - 0.5 * kPpg
  static constexpr double kIllum[3] = {1.0, 1.0, 1.0};
  static constexpr double kBaseline[3] = {110.0, 120.0, 100.0};
  // Occluded points record passing texture instead of skin: two strong
  // in-band tones with distinct channel patterns, so no 3-channel
  // separation can isolate them away from the pulse component.
  static constexpr double kOccluderBase[3] = {55.0, 50.0, 45.0};
  static constexpr double kOccluderTexA[3] = {1.0, 0.7, 0.9};
  static constexpr double kOccluderTexB[3] = {0.6, 1.2, 0.8};
  static constexpr double kOccluderToneAHz = 2.35;
  static constexpr double kOccluderToneBHz = 3.05;
  static constexpr double kOccluderToneAAmp = 20.0;
  static constexpr double kOccluderToneBAmp = 14.0;
  static constexpr double kOccluderNoise = 1.5;
};

struct SynthOutput {
  std::vector<LandmarkFrame> frames;       // with dropout applied
  std::vector<LandmarkFrame> full_frames;  // dropout-free, reacquisition source
  TraceSet traces;
  GroundTruth truth;
  std::vector<double> clean_ppg;           // unit-gain pulse waveform, one per frame
  std::vector<double> interference;        // illumination waveform (events + ambient) before per-trace gain
};

// Pure function of the scenario; identical seeds give identical output.
SynthOutput synth_scenario(const SynthScenario& s);

}  // namespace rppg
