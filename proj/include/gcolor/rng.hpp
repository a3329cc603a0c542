#pragma once

#include <cstdint>
#include <random>

namespace gcolor {

/// SplitMix64 finalizer. Used to turn structured seeds (base seed, index)
/// into well-spread generator seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the i-th child of a base seed. Sequential and parallel
/// schedules that use this derivation see identical streams.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
    return mix64(mix64(base) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic 64-bit pseudorandom stream that can be split into
/// independent children.
class SearchRng {
public:
    using result_type = std::uint64_t;

    explicit SearchRng(std::uint64_t seed = 0) : seed_(seed), engine_(mix64(seed)) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    std::uint64_t seed() const noexcept { return seed_; }

    /// Child stream keyed by one draw of this stream; advances the parent.
    SearchRng split() { return SearchRng(mix64(engine_() ^ 0xd1b54a32d192ed03ULL)); }

    /// Child stream keyed by (seed, index); does not touch the parent state.
    SearchRng child(std::uint64_t index) const { return SearchRng(derive_seed(seed_, index)); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t below(std::size_t bound)
    {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
    }

    /// Uniform real in [0, 1).
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    double normal() { return normal_(engine_); }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace gcolor
