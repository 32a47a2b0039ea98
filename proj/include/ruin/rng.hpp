#pragma once

#include <cstdint>
#include <limits>

namespace ruin {

//! SplitMix64 finalizer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/*!
 * xoshiro256** engine, UniformRandomBitGenerator-compatible.
 *
 * Each trial gets its own state derived from (seed, trial) so a trial's
 * draws never depend on which worker ran it or in what order.
 */
class TrialRng
{
  public:
    using result_type = std::uint64_t;

    TrialRng(std::uint64_t seed, std::uint64_t trial) noexcept
    {
        std::uint64_t key = splitmix64_mix(seed) ^ splitmix64_mix(~trial);
        for (auto& word : s_)
        {
            key += 0x9e3779b97f4a7c15ULL;
            word = splitmix64_mix(key);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept
    {
        std::uint64_t const result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t const t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    //! Uniform double in [0, 1) from the top 53 bits.
    double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    static constexpr char const* name()
    {
        return "xoshiro256** per trial, state = splitmix64(seed, trial)";
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4]{};
};

}  // namespace ruin
