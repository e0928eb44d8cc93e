#include "exitctl/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace exitctl {

std::array<double, 4> full_drift(const State4& st, const ModelParams& p) {
    const double S = st.s, P = st.p, A = st.a, R = st.r;
    // coefficient on the R-equation bilinear outflow
    const double c_out =
        p.conservation_mode == ConservationMode::corrected ? p.nu : p.mu;

    const double dS = -p.alpha * S - p.beta * (1.0 - p.xi) * S * A -
                      p.beta * p.xi * S * P + p.epsilon_rate * P +
                      p.delta * R + p.mu * (P + R) + p.mu_star * A;
    const double dP = p.alpha * S - (p.epsilon_rate + p.gamma + p.mu) * P;
    const double dA = p.gamma * P + p.sigma_relapse * R +
                      p.beta * (1.0 - p.xi) * S * A + p.beta * p.xi * S * P +
                      p.nu * R * A - (p.zeta + p.mu_star) * A;
    const double dR =
        p.zeta * A - c_out * R * A - (p.delta + p.sigma_relapse + p.mu) * R;
    return {dS, dP, dA, dR};
}

std::array<double, 3> reduced_drift(const State3& x, const ModelParams& p) {
    const State4 full{x.x1, 1.0 - x.x1 - x.x2 - x.x3, x.x2, x.x3};
    const auto d = full_drift(full, p);
    return {d[0], d[2], d[3]};
}

double eval_noise(const State3& x, const NoiseSpec& n) {
    switch (n.kind) {
    case NoiseKind::constant:
        return n.sigma0;
    case NoiseKind::affine_clamped: {
        double v = n.sigma0 * (1.0 + x.x1);
        if (!std::isfinite(v)) v = x.x1 > 0 ? n.sigma_max : n.sigma_min;
        return std::clamp(v, n.sigma_min, n.sigma_max);
    }
    }
    return n.sigma0;
}

namespace {

void require_nonneg(std::vector<Violation>& out, const char* name, double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
        out.push_back({name, v, "must be finite and >= 0"});
}

} // namespace

std::vector<Violation> validate(const ModelParams& p, const NoiseSpec& n,
                                const Domain& d) {
    std::vector<Violation> out;

    require_nonneg(out, "alpha", p.alpha);
    require_nonneg(out, "beta", p.beta);
    require_nonneg(out, "epsilon_rate", p.epsilon_rate);
    require_nonneg(out, "delta", p.delta);
    require_nonneg(out, "mu", p.mu);
    require_nonneg(out, "mu_star", p.mu_star);
    require_nonneg(out, "gamma", p.gamma);
    require_nonneg(out, "zeta", p.zeta);
    require_nonneg(out, "nu", p.nu);
    require_nonneg(out, "sigma_relapse", p.sigma_relapse);
    if (!(p.xi >= 0.0 && p.xi <= 1.0))
        out.push_back({"xi", p.xi, "xi must lie in [0,1]"});
    if (!(p.mu_star >= p.mu))
        out.push_back({"mu_star", p.mu_star, "mu_star must be >= mu"});

    if (!(n.sigma_min > 0.0))
        out.push_back({"sigma_min", n.sigma_min,
                       "sigma_min must be > 0 (boundedness of the inverse "
                       "noise amplitude)"});
    if (!(n.sigma_max >= n.sigma_min))
        out.push_back({"sigma_max", n.sigma_max, "sigma_max must be >= sigma_min"});
    if (n.kind == NoiseKind::constant) {
        if (!(n.sigma0 >= n.sigma_min && n.sigma0 <= n.sigma_max))
            out.push_back({"sigma0", n.sigma0,
                           "constant noise must satisfy sigma_min <= sigma0 <= sigma_max"});
    } else {
        if (!(n.sigma0 > 0.0))
            out.push_back({"sigma0", n.sigma0, "sigma0 must be > 0"});
    }

    for (int i = 0; i < 3; ++i) {
        if (!(d.lo[i] < d.hi[i]))
            out.push_back({"domain", d.lo[i],
                           "lo must be < hi componentwise (axis " +
                               std::to_string(i + 1) + ")"});
    }
    return out;
}

std::string violations_to_string(const std::vector<Violation>& v) {
    std::ostringstream os;
    for (const auto& x : v)
        os << x.field << " = " << x.observed << ": " << x.constraint << "\n";
    return os.str();
}

} // namespace exitctl
