#include "exitctl/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "exitctl/rng.hpp"

namespace exitctl {

State3 step(const State3& x, double u, const ModelParams& p,
            const NoiseSpec& n, double dt, double dw, double eps_noise) {
    const auto f = reduced_drift(x, p);
    const double sigma = eval_noise(x, n);
    return {x.x1 + (f[0] + u) * dt + std::sqrt(eps_noise) * sigma * dw,
            x.x2 + f[1] * dt, x.x3 + f[2] * dt};
}

namespace {

// Returns -1 while inside the open box, otherwise the crossed face
// (axis*2 + side).
int crossed_face(const State3& x, const Domain& d) {
    const double c[3] = {x.x1, x.x2, x.x3};
    for (int a = 0; a < 3; ++a) {
        if (c[a] <= d.lo[a]) return a * 2;
        if (c[a] >= d.hi[a]) return a * 2 + 1;
    }
    return -1;
}

std::int64_t n_steps_for(const SimConfig& cfg) {
    return static_cast<std::int64_t>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
}

} // namespace

PathResult sample_path(const State3& x0, const Control& policy,
                       const ModelParams& p, const NoiseSpec& n,
                       const Domain& d, const SimConfig& cfg,
                       std::int64_t path_index) {
    if (!d.contains_interior(x0))
        throw std::invalid_argument(
            "sample_path: x0 must lie strictly inside the domain");

    const std::int64_t n_steps = n_steps_for(cfg);
    const double sqrt_dt = std::sqrt(cfg.dt);

    PathResult res;
    State3 x = x0;
    if (cfg.record_trajectory) res.trajectory.push_back({0.0, x});

    for (std::int64_t k = 0; k < n_steps; ++k) {
        const double dw =
            sqrt_dt *
            normal_at(cfg.seed, static_cast<std::uint64_t>(path_index),
                      static_cast<std::uint64_t>(k));
        const double u = control_at(policy, x);
        x = step(x, u, p, n, cfg.dt, dw, cfg.eps_noise);
        const double t_end = std::min((k + 1) * cfg.dt, cfg.t_max);
        if (cfg.record_trajectory) res.trajectory.push_back({t_end, x});
        const int face = crossed_face(x, d);
        if (face >= 0) {
            res.exit_time = t_end;
            res.exit_face = face;
            res.final_state = x;
            return res;
        }
    }
    res.exit_time = cfg.t_max;
    res.censored = true;
    res.final_state = x;
    return res;
}

std::vector<PathResult> run_paths(const State3& x0, const Control& policy,
                                  const ModelParams& p, const NoiseSpec& n,
                                  const Domain& d, const SimConfig& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_max >= cfg.dt) || cfg.n_paths < 1 ||
        !(cfg.eps_noise > 0.0))
        throw std::invalid_argument("run_paths: invalid SimConfig");
    if (!d.contains_interior(x0))
        throw std::invalid_argument(
            "run_paths: x0 must lie strictly inside the domain");

    std::vector<PathResult> results(static_cast<std::size_t>(cfg.n_paths));
    const int workers = std::max(1, cfg.n_workers);

    auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i)
            results[static_cast<std::size_t>(i)] =
                sample_path(x0, policy, p, n, d, cfg, i);
    };

    if (workers == 1 || cfg.n_paths < 2 * workers) {
        work(0, cfg.n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (cfg.n_paths + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t b = w * chunk;
            const std::int64_t e = std::min<std::int64_t>(b + chunk, cfg.n_paths);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return results;
}

SurvivalCurve survival_from_paths(const std::vector<PathResult>& paths,
                                  const SimConfig& cfg) {
    const std::int64_t n_steps = n_steps_for(cfg);
    const std::int64_t n_times = n_steps + 1;
    const auto n = static_cast<std::int64_t>(paths.size());

    SurvivalCurve c;
    c.n_paths = n;
    c.times.resize(static_cast<std::size_t>(n_times));
    c.survivors.assign(static_cast<std::size_t>(n_times), 0);
    for (std::int64_t k = 0; k < n_times; ++k)
        c.times[static_cast<std::size_t>(k)] =
            std::min(k * cfg.dt, cfg.t_max);

    // histogram of exit steps, then suffix-sum
    std::vector<std::int64_t> exits(static_cast<std::size_t>(n_times + 1), 0);
    for (const auto& pr : paths) {
        if (pr.censored) {
            ++c.censored_count;
            ++exits[static_cast<std::size_t>(n_times)]; // beyond the grid
        } else {
            auto k = static_cast<std::int64_t>(
                std::llround(pr.exit_time / cfg.dt));
            k = std::clamp<std::int64_t>(k, 1, n_steps);
            ++exits[static_cast<std::size_t>(k)];
        }
    }
    std::int64_t alive = n;
    for (std::int64_t k = 0; k < n_times; ++k) {
        alive -= exits[static_cast<std::size_t>(k)]; // exits at exactly t_k
        c.survivors[static_cast<std::size_t>(k)] = alive;
    }

    c.p_hat.resize(c.times.size());
    c.ci_lo.resize(c.times.size());
    c.ci_hi.resize(c.times.size());
    for (std::size_t k = 0; k < c.times.size(); ++k) {
        const double p = static_cast<double>(c.survivors[k]) / n;
        const double half = 1.96 * std::sqrt(p * (1.0 - p) / n);
        c.p_hat[k] = p;
        c.ci_lo[k] = p - half;
        c.ci_hi[k] = p + half;
    }
    return c;
}

SurvivalCurve estimate_survival(const State3& x0, const Control& policy,
                                const ModelParams& p, const NoiseSpec& n,
                                const Domain& d, const SimConfig& cfg) {
    return survival_from_paths(run_paths(x0, policy, p, n, d, cfg), cfg);
}

RateEstimate fit_exit_rate(const SurvivalCurve& curve, double t_lo,
                           double t_hi) {
    std::vector<double> ts, ys;
    for (std::size_t k = 0; k < curve.times.size(); ++k) {
        const double t = curve.times[k];
        if (t < t_lo || t > t_hi) continue;
        if (!(curve.p_hat[k] > 0.0)) continue;
        ts.push_back(t);
        ys.push_back(-std::log(curve.p_hat[k]));
    }
    const auto m = static_cast<int>(ts.size());
    if (m < 2)
        throw std::invalid_argument(
            "fit_exit_rate: fewer than 2 usable points in the window");

    double st = 0, sy = 0;
    for (int i = 0; i < m; ++i) {
        st += ts[i];
        sy += ys[i];
    }
    const double tbar = st / m, ybar = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < m; ++i) {
        const double dt_ = ts[i] - tbar, dy = ys[i] - ybar;
        sxx += dt_ * dt_;
        sxy += dt_ * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    double ssr = 0;
    for (int i = 0; i < m; ++i) {
        const double r = ys[i] - ybar - slope * (ts[i] - tbar);
        ssr += r * r;
    }

    RateEstimate e;
    e.lambda_hat = slope;
    e.stderr_ = m > 2 ? std::sqrt(ssr / (m - 2) / sxx) : 0.0;
    e.fit_t_lo = ts.front();
    e.fit_t_hi = ts.back();
    e.r_squared = syy > 0 ? 1.0 - ssr / syy : 1.0;
    e.n_points = m;
    return e;
}

std::pair<double, double> default_fit_window(const SurvivalCurve& curve) {
    const std::int64_t floor_count =
        std::max<std::int64_t>(10, curve.n_paths / 1000);
    double t_hi = curve.times.front();
    for (std::size_t k = 0; k < curve.times.size(); ++k)
        if (curve.survivors[k] >= floor_count) t_hi = curve.times[k];
    double t_lo = curve.times.back() / 2.0;
    if (t_hi <= t_lo) t_lo = t_hi / 2.0;
    return {t_lo, t_hi};
}

MeanExitTime mean_exit_from_paths(const std::vector<PathResult>& paths) {
    MeanExitTime m;
    double sum = 0, sumsq = 0;
    std::int64_t k = 0;
    for (const auto& pr : paths) {
        if (pr.censored) {
            ++m.censored_count;
            continue;
        }
        sum += pr.exit_time;
        sumsq += pr.exit_time * pr.exit_time;
        ++k;
    }
    if (k == 0)
        throw std::runtime_error(
            "mean exit time: all " + std::to_string(m.censored_count) +
            " paths censored; t_max is too small");
    m.mean = sum / k;
    if (k > 1) {
        const double var = (sumsq - sum * sum / k) / (k - 1);
        m.stderr_ = std::sqrt(std::max(var, 0.0) / k);
    }
    return m;
}

MeanExitTime estimate_mean_exit_time(const State3& x0, const Control& policy,
                                     const ModelParams& p, const NoiseSpec& n,
                                     const Domain& d, const SimConfig& cfg) {
    return mean_exit_from_paths(run_paths(x0, policy, p, n, d, cfg));
}

double risk_sensitive_from_paths(const std::vector<PathResult>& paths,
                                 const RiskConfig& rc) {
    if (!(rc.theta > 0.0) || !(rc.eps_noise > 0.0))
        throw std::invalid_argument("risk config: theta and eps_noise must be > 0");
    double acc = 0.0;
    for (const auto& pr : paths)
        acc += std::exp(-rc.theta * pr.exit_time / rc.eps_noise);
    return -rc.eps_noise *
           std::log(acc / static_cast<double>(paths.size()));
}

double estimate_risk_sensitive(const State3& x0, const Control& policy,
                               const ModelParams& p, const NoiseSpec& n,
                               const Domain& d, const SimConfig& cfg,
                               const RiskConfig& rc) {
    return risk_sensitive_from_paths(run_paths(x0, policy, p, n, d, cfg), rc);
}

} // namespace exitctl
