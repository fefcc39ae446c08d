#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwl/approx.hpp"
#include "mwl/integrator.hpp"

namespace mwl {

struct RateFit {
    std::vector<std::pair<int, double>> points; // (n, value)
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double theoretical_slope = 0.0;
    std::string branch;
};

/// Least-squares line through (log n, log value); >= 3 strictly positive
/// points required.
RateFit fit_rate(const std::vector<std::pair<int, double>>& points);

struct InterpolationCheck {
    bool holds = false;
    double ratio = 0.0; // LHS/RHS, in (0, 1] when the inequality holds
};

/// ||u||_{H^r} <= ||u||_{H^r1}^{(r2-r)/(r2-r1)} ||u||_{H^r2}^{(r-r1)/(r2-r1)},
/// checked to 1e-12 relative; requires r1 < r < r2.
InterpolationCheck check_interpolation(const SpectralField& u, SobolevIndex r1,
                                       SobolevIndex r, SobolevIndex r2);

/// Closed-form initial gap ||u_{1,n}(0) - u_{-1,n}(0)||_{H^s} = sqrt(2 pi)/(7n);
/// the spectrally computed gap of the two constructed fields is verified
/// against it to 1e-12 relative.
double initial_gap(int n, SobolevIndex s);

/// (sqrt(pi)/7)|sin t| - sqrt(2 pi)/(7n); may be negative.
double gap_lower_bound(double t, int n);

struct NonuniformCell {
    int n;
    double t;
    double gap;
    double bound;
    double margin; // gap - bound
};

struct NonuniformReport {
    double s = 2.0;
    std::vector<int> n_list;
    std::vector<double> t_grid;
    std::vector<NonuniformCell> cells;     // row-major over (n, t)
    std::vector<double> initial_gaps;      // per n, spectrally computed
    std::vector<double> sup_hs;            // per n, max_t over both solutions
    std::vector<double> hs0;               // per n, max of the two initial norms
    std::vector<RunStatus> statuses;       // per n (worst of the two runs)
    double horizon = 0.0;
    std::uint64_t solver_fingerprint = 0;
};

struct StudyConfig {
    SolverConfig solver;
    int threads = 1;
};

/// Evolves the pair u_{+-1,n} from approximate-solution initial data for
/// each n and records H^s gaps against the lower bound.
NonuniformReport run_nonuniform_study(SobolevIndex s, const std::vector<int>& n_list,
                                      const std::vector<double>& t_grid,
                                      const StudyConfig& cfg);

/// max_t ||u^{omega,n}(t) - u_{omega,n}(t)||_{H^sigma} per n, fitted against
/// the theoretical exponent -s. Requires sigma = 1 when s >= 2, and
/// sigma in (1/2, s-1] when 3/2 < s < 2.
RateFit run_error_decay_study(SobolevIndex s, SobolevIndex sigma,
                              const std::vector<int>& n_list,
                              const std::vector<double>& t_probe,
                              const StudyConfig& cfg, int omega = 1);

/// Same measurement at norm index k = s + 2; the fitted slope is an upper
/// bound check against exponent 2.
RateFit run_hk_growth_study(SobolevIndex s, const std::vector<int>& n_list,
                            const StudyConfig& cfg, int omega = 1);

/// Grid size used by the studies for frequency n: at least 8n and at least
/// the configured n_modes, rounded up to a power of two.
int study_grid_size(int n, int configured);

} // namespace mwl
