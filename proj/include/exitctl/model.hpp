#pragma once

#include <array>
#include <string>
#include <vector>

namespace exitctl {

// Coefficient used in the treatment-equation bilinear outflow term.
// `corrected` balances the relapse flux so the total population is conserved;
// `paper_literal` keeps the printed coefficient (mu), leaving a residual
// (nu - mu) * r * a in the population balance.
enum class ConservationMode { corrected, paper_literal };

struct ModelParams {
    double alpha = 0.0;         // prescription rate
    double beta = 0.0;          // non-prescription addiction probability rate
    double xi = 0.0;            // fraction of beta via leftover prescriptions
    double epsilon_rate = 0.0;  // prescribed -> susceptible return rate
    double delta = 0.0;         // treatment completion -> susceptible rate
    double mu = 0.0;            // natural death rate
    double mu_star = 0.0;       // addict death rate (>= mu)
    double gamma = 0.0;         // prescribed -> addicted rate
    double zeta = 0.0;          // addicted -> treatment rate
    double nu = 0.0;            // relapse-by-availability rate
    double sigma_relapse = 0.0; // inherent treatment -> addicted relapse rate
    ConservationMode conservation_mode = ConservationMode::corrected;
};

// Full compartment state: population fractions (S, P, A, R).
struct State4 {
    double s = 0.0, p = 0.0, a = 0.0, r = 0.0;
};

// Reduced state after eliminating P = 1 - S - A - R: x1 = S, x2 = A, x3 = R.
struct State3 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

enum class NoiseKind { constant, affine_clamped };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::constant;
    double sigma0 = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

// Axis-aligned open box in reduced coordinates.
struct Domain {
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};

    bool contains_interior(const State3& x) const {
        return x.x1 > lo[0] && x.x1 < hi[0] && x.x2 > lo[1] && x.x2 < hi[1] &&
               x.x3 > lo[2] && x.x3 < hi[2];
    }
};

struct Violation {
    std::string field;
    double observed;
    std::string constraint;
};

std::array<double, 4> full_drift(const State4& s, const ModelParams& p);
std::array<double, 3> reduced_drift(const State3& x, const ModelParams& p);

double eval_noise(const State3& x, const NoiseSpec& n);

// Collects every invariant violation (not only the first). Empty result
// means the configuration is valid.
std::vector<Violation> validate(const ModelParams& p, const NoiseSpec& n,
                                const Domain& d);

std::string violations_to_string(const std::vector<Violation>& v);

} // namespace exitctl
