#include "secap/rng.hpp"

#include <cmath>

namespace secap {

namespace {

constexpr std::uint64_t kSkeinParity = 0x1BD11BDAA9FC1A22ULL;
constexpr int kRounds = 20;
constexpr unsigned kRotations[8] = {16, 42, 12, 31, 16, 32, 24, 21};

inline std::uint64_t rotl64(std::uint64_t x, unsigned r) {
    return (x << r) | (x >> (64 - r));
}

}  // namespace

std::array<std::uint64_t, 2> Threefry2x64::block(std::uint64_t ctr0, std::uint64_t ctr1) const {
    const std::uint64_t ks[3] = {key0_, key1_, kSkeinParity ^ key0_ ^ key1_};
    std::uint64_t x0 = ctr0 + ks[0];
    std::uint64_t x1 = ctr1 + ks[1];
    for (int round = 0; round < kRounds; ++round) {
        x0 += x1;
        x1 = rotl64(x1, kRotations[round % 8]);
        x1 ^= x0;
        if ((round + 1) % 4 == 0) {
            const auto s = static_cast<std::uint64_t>(round / 4 + 1);
            x0 += ks[s % 3];
            x1 += ks[(s + 1) % 3] + s;
        }
    }
    return {x0, x1};
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t realization, std::uint32_t role)
    : cipher_(seed, static_cast<std::uint64_t>(role)), realization_(realization) {}

std::complex<double> GaussianStream::at(std::uint64_t index) const {
    // Box-Muller in polar form: |z|^2 ~ Exp(1), phase uniform, so z ~ CN(0,1).
    const auto words = cipher_.block(realization_, index);
    constexpr double kToUnit = 0x1.0p-53;  // 53-bit mantissa
    const double u1 = (static_cast<double>(words[0] >> 11) + 1.0) * kToUnit;  // (0, 1]
    const double u2 = static_cast<double>(words[1] >> 11) * kToUnit;          // [0, 1)
    const double magnitude = std::sqrt(-std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

}  // namespace secap
