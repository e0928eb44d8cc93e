#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace exitctl {

// Counter-based generator (Philox4x32-10, Salmon et al. 2011). Each draw is
// a pure function of (seed, path_index, step_index), so path scheduling has
// no effect on the realized Brownian increments.
namespace philox {

inline constexpr std::uint32_t kW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                    std::uint32_t& hi) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(prod);
    hi = static_cast<std::uint32_t>(prod >> 32);
}

inline std::array<std::uint32_t, 4> block(std::uint64_t key,
                                          std::uint64_t counter_lo,
                                          std::uint64_t counter_hi) {
    std::array<std::uint32_t, 4> c{
        static_cast<std::uint32_t>(counter_lo),
        static_cast<std::uint32_t>(counter_lo >> 32),
        static_cast<std::uint32_t>(counter_hi),
        static_cast<std::uint32_t>(counter_hi >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);

    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kM4x32A, c[0], lo0, hi0);
        mulhilo(kM4x32B, c[2], lo1, hi1);
        c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
        k0 += kW32A;
        k1 += kW32B;
    }
    return c;
}

} // namespace philox

// Uniform in (0, 1].
inline double uniform_at(std::uint64_t seed, std::uint64_t path_index,
                         std::uint64_t step_index) {
    const auto c = philox::block(seed, path_index, step_index);
    const std::uint64_t bits =
        (static_cast<std::uint64_t>(c[0]) << 32) | c[1];
    return static_cast<double>((bits >> 11) + 1) * 0x1p-53;
}

// Standard normal draw keyed by (seed, path_index, step_index); Box-Muller
// on one Philox block.
inline double normal_at(std::uint64_t seed, std::uint64_t path_index,
                        std::uint64_t step_index) {
    const auto c = philox::block(seed, path_index, step_index);
    const std::uint64_t b1 =
        (static_cast<std::uint64_t>(c[0]) << 32) | c[1];
    const std::uint64_t b2 =
        (static_cast<std::uint64_t>(c[2]) << 32) | c[3];
    const double u1 = static_cast<double>((b1 >> 11) + 1) * 0x1p-53;
    const double u2 = static_cast<double>(b2 >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

} // namespace exitctl
