#ifndef SECAP_RNG_HPP
#define SECAP_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

// Counter-based random number generation. A draw is addressed by
// (seed, role) as the cipher key and (realization, counter) as the block
// counter, so any single realization of any matrix can be regenerated in
// isolation and parallel batches stay reproducible as long as they use
// disjoint realization indices.

namespace secap {

/// Stream roles keep independently drawn matrices on independent substreams
/// even when one code path skips a draw another performs.
namespace rng_role {
inline constexpr std::uint32_t kGeneric = 0;
inline constexpr std::uint32_t kTransmitChannel = 1;  // H_i
inline constexpr std::uint32_t kJamChannel = 2;       // G_i
inline constexpr std::uint32_t kJamToBobChannel = 3;  // G_b in the null-space path
}  // namespace rng_role

/// Threefry-2x64, 20 rounds: a keyed bijection on 128-bit blocks.
class Threefry2x64 {
public:
    Threefry2x64(std::uint64_t key0, std::uint64_t key1) : key0_(key0), key1_(key1) {}

    std::array<std::uint64_t, 2> block(std::uint64_t ctr0, std::uint64_t ctr1) const;

private:
    std::uint64_t key0_;
    std::uint64_t key1_;
};

/// Deterministic stream of standard circularly-symmetric complex Gaussians
/// (CN(0,1): real and imaginary parts each N(0, 1/2)). One cipher block per
/// sample; `at(k)` gives random access, `next()` walks sequentially.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t realization, std::uint32_t role);

    std::complex<double> at(std::uint64_t index) const;
    std::complex<double> next() { return at(counter_++); }

private:
    Threefry2x64 cipher_;
    std::uint64_t realization_;
    std::uint64_t counter_ = 0;
};

}  // namespace secap

#endif
