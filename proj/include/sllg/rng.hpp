#ifndef SLLG_RNG_HPP
#define SLLG_RNG_HPP

#include <array>
#include <cstdint>

namespace sllg {

// Philox4x32-10 counter-based generator.  Streams are keyed by
// (master seed, stream id); the stream id occupies the upper half of the
// 128-bit counter, so all streams are disjoint and a trajectory's draws do
// not depend on scheduling.
class PhiloxRng {
public:
    PhiloxRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // uniform in (0, 1]
    double uniform();
    // standard normal via Box-Muller
    double gaussian();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);

private:
    void refill();

    std::uint64_t seed_ = 0, stream_ = 0;
    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 4> out_{};
    int avail_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sllg

#endif
