#include "mwl/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mwl {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json qty(double value, const char* provenance) {
    return json{{"value", value}, {"provenance", provenance}};
}

const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::breakdown: return "breakdown";
        case RunStatus::nan: return "nan";
    }
    return "unknown";
}

json rate_fit_json(const RateFit& fit) {
    json pts = json::array();
    for (const auto& [n, v] : fit.points)
        pts.push_back(json{{"n", n}, {"value", qty(v, "measured")}});
    return json{
        {"points", pts},
        {"slope", qty(fit.slope, "measured")},
        {"intercept", qty(fit.intercept, "measured")},
        {"r_squared", qty(fit.r_squared, "measured")},
        {"theoretical_slope", qty(fit.theoretical_slope, "paper-bound")},
        {"branch", fit.branch},
    };
}

json nonuniform_json(const NonuniformReport& rep) {
    json per_n = json::array();
    for (std::size_t i = 0; i < rep.n_list.size(); ++i) {
        per_n.push_back(json{
            {"n", rep.n_list[i]},
            {"initial_gap", qty(rep.initial_gaps[i], "measured")},
            {"initial_gap_closed_form",
             qty(initial_gap(rep.n_list[i], rep.s), "closed-form")},
            {"sup_hs", qty(rep.sup_hs[i], "measured")},
            {"hs0", qty(rep.hs0[i], "measured")},
            {"status", status_name(rep.statuses[i])},
        });
    }
    json cells = json::array();
    for (const auto& c : rep.cells) {
        cells.push_back(json{
            {"n", c.n},
            {"t", c.t},
            {"gap", qty(c.gap, "measured")},
            {"bound", qty(c.bound, "paper-bound")},
            {"margin", qty(c.margin, "measured")},
        });
    }
    return json{
        {"s", rep.s},
        {"horizon", rep.horizon},
        {"solver_fingerprint", rep.solver_fingerprint},
        {"per_n", per_n},
        {"cells", cells},
    };
}

json trajectory_summary_json(const Trajectory& traj, double monitor_s) {
    return json{
        {"status", status_name(traj.status)},
        {"stop_time", qty(traj.stop_time, "measured")},
        {"monitor_s", monitor_s},
        {"h1_initial", qty(traj.h1_series.front(), "measured")},
        {"h1_final", qty(traj.h1_series.back(), "measured")},
        {"h1_drift", qty(traj.h1_drift(), "measured")},
        {"hs_initial", qty(traj.hs_series.front(), "measured")},
        {"hs_final", qty(traj.hs_series.back(), "measured")},
        {"min_slope_final", qty(traj.min_slope_series.back(), "measured")},
        {"samples", traj.times.size()},
    };
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "t,h1,hs,min_slope\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << format_double(traj.times[i]) << ',' << format_double(traj.h1_series[i])
           << ',' << format_double(traj.hs_series[i]) << ','
           << format_double(traj.min_slope_series[i]) << '\n';
    }
    return os.str();
}

std::string gaps_csv(const NonuniformReport& rep) {
    std::ostringstream os;
    os << "n,t,gap,bound,margin\n";
    for (const auto& c : rep.cells) {
        os << c.n << ',' << format_double(c.t) << ',' << format_double(c.gap) << ','
           << format_double(c.bound) << ',' << format_double(c.margin) << '\n';
    }
    return os.str();
}

std::string points_csv(const std::vector<std::pair<int, double>>& points,
                       const std::string& value_column) {
    std::ostringstream os;
    os << "n," << value_column << '\n';
    for (const auto& [n, v] : points) os << n << ',' << format_double(v) << '\n';
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
}

} // namespace mwl
