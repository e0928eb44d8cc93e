#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exitctl/model.hpp"
#include "exitctl/policy.hpp"

namespace exitctl {

struct SimConfig {
    double dt = 1e-3;
    double t_max = 10.0;
    std::int64_t n_paths = 10000;
    std::uint64_t seed = 1;
    bool record_trajectory = false;
    double eps_noise = 1.0; // noise term scaled by sqrt(eps_noise)
    int n_workers = 1;
};

// Box faces are numbered axis*2 + (0 = low face, 1 = high face).
struct PathResult {
    double exit_time = 0.0; // = t_max when censored
    bool censored = false;
    int exit_face = -1; // -1 when censored
    State3 final_state{};
    std::vector<std::pair<double, State3>> trajectory; // optional
};

struct SurvivalCurve {
    std::vector<double> times;
    std::vector<std::int64_t> survivors;
    std::vector<double> p_hat;
    std::vector<double> ci_lo;
    std::vector<double> ci_hi;
    std::int64_t n_paths = 0;
    std::int64_t censored_count = 0;
};

struct RateEstimate {
    double lambda_hat = 0.0;
    double stderr_ = 0.0;
    double fit_t_lo = 0.0;
    double fit_t_hi = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

struct MeanExitTime {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::int64_t censored_count = 0;
};

struct RiskConfig {
    double theta = 0.01;
    double eps_noise = 1.0;
};

// One Euler-Maruyama step of the controlled SDE; noise and control act on
// the x1 increment only.
State3 step(const State3& x, double u, const ModelParams& p,
            const NoiseSpec& n, double dt, double dw, double eps_noise = 1.0);

PathResult sample_path(const State3& x0, const Control& policy,
                       const ModelParams& p, const NoiseSpec& n,
                       const Domain& d, const SimConfig& cfg,
                       std::int64_t path_index);

// Runs the full ensemble; results are ordered by path index regardless of
// worker count.
std::vector<PathResult> run_paths(const State3& x0, const Control& policy,
                                  const ModelParams& p, const NoiseSpec& n,
                                  const Domain& d, const SimConfig& cfg);

SurvivalCurve survival_from_paths(const std::vector<PathResult>& paths,
                                  const SimConfig& cfg);
SurvivalCurve estimate_survival(const State3& x0, const Control& policy,
                                const ModelParams& p, const NoiseSpec& n,
                                const Domain& d, const SimConfig& cfg);

// Least-squares slope of -log p_hat(t) over [t_lo, t_hi].
RateEstimate fit_exit_rate(const SurvivalCurve& curve, double t_lo,
                           double t_hi);

// Default window: skip the transient, stop where the tail gets too thin.
std::pair<double, double> default_fit_window(const SurvivalCurve& curve);

MeanExitTime mean_exit_from_paths(const std::vector<PathResult>& paths);
MeanExitTime estimate_mean_exit_time(const State3& x0, const Control& policy,
                                     const ModelParams& p, const NoiseSpec& n,
                                     const Domain& d, const SimConfig& cfg);

// Risk-sensitive value -eps * log E exp(-theta * tau / eps). Censored paths
// contribute exp(-theta * t_max / eps), a deterministic upward bias.
double risk_sensitive_from_paths(const std::vector<PathResult>& paths,
                                 const RiskConfig& rc);
double estimate_risk_sensitive(const State3& x0, const Control& policy,
                               const ModelParams& p, const NoiseSpec& n,
                               const Domain& d, const SimConfig& cfg,
                               const RiskConfig& rc);

} // namespace exitctl
