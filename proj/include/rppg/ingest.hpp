#pragma once

#include <map>
#include <string>
#include <vector>

#include "rppg/types.hpp"

namespace rppg {

// Track CSV: header `frame,point_id,x,y`, one row per visible point per frame,
// frames grouped and strictly increasing.
std::vector<LandmarkFrame> load_landmark_track(const std::string& path);
void write_landmark_track(const std::string& path, const std::vector<LandmarkFrame>& frames);

// Intensity CSV: header `frame,point_id,r,g,b`. All points must cover the
// same strictly increasing frame sequence; fps comes from config or --fps.
TraceSet load_rgb_traces(const std::string& path, double fps);
void write_rgb_traces(const std::string& path, const TraceSet& traces);

// Ground-truth CSV: header `source_id,hr_bpm`; repeated ids form a series.
std::map<std::string, GroundTruth> load_ground_truth(const std::string& path);
void write_ground_truth(const std::string& path, const std::vector<GroundTruth>& entries);

// Frames with start_frame <= frame_idx < end_frame, order preserved.
std::vector<LandmarkFrame> extract_window(const std::vector<LandmarkFrame>& frames,
                                          long start_frame, long end_frame);
TraceSet extract_window(const TraceSet& traces, long start_frame, long end_frame);

}  // namespace rppg
