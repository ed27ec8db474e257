#include "sllg/rng.hpp"

#include <cmath>

namespace sllg {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
    const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> PhiloxRng::block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int r = 0; r < 9; ++r) {
        round_once(c, k);
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    round_once(c, k);
    return c;
}

PhiloxRng::PhiloxRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    key_ = {std::uint32_t(seed), std::uint32_t(seed >> 32)};
    counter_ = {0u, 0u, std::uint32_t(stream), std::uint32_t(stream >> 32)};
}

void PhiloxRng::refill() {
    out_ = block(counter_, key_);
    avail_ = 4;
    if (++counter_[0] == 0) ++counter_[1];
}

std::uint64_t PhiloxRng::next_u64() {
    if (avail_ < 2) refill();
    const std::uint64_t lo = out_[4 - avail_];
    const std::uint64_t hi = out_[5 - avail_];
    avail_ -= 2;
    return lo | (hi << 32);
}

double PhiloxRng::uniform() {
    // 53-bit mantissa, shifted into (0, 1]
    return (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double PhiloxRng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace sllg
