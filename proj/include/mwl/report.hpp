#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwl/experiments.hpp"

namespace mwl {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// A reported number with its provenance: "measured", "closed-form", or
/// "paper-bound".
json qty(double value, const char* provenance);

json rate_fit_json(const RateFit& fit);
json nonuniform_json(const NonuniformReport& rep);
json trajectory_summary_json(const Trajectory& traj, double monitor_s);

std::string trajectory_csv(const Trajectory& traj);
std::string gaps_csv(const NonuniformReport& rep);
std::string points_csv(const std::vector<std::pair<int, double>>& points,
                       const std::string& value_column);

void write_text_file(const std::filesystem::path& path, const std::string& content);

const char* status_name(RunStatus s);

} // namespace mwl
