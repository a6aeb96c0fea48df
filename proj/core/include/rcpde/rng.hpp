#pragma once

#include <cstdint>

namespace rcpde {

/// Counter-based generator: the i-th output of stream (seed, stream) is a
/// fixed function of (seed, stream, i). Streams for different realization
/// indices never share state, so draws do not depend on evaluation order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next_u64() noexcept { return mix(key_ + (++counter_) * kGolden); }

    /// Uniform on [0, 1) with 53 random bits.
    double next_u01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace rcpde
