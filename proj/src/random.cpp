#include "polar/random.hpp"

#include <cmath>
#include <numbers>

namespace polar {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0,
                         std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

inline double to_unit_interval(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::array<std::uint32_t, 4> counter) {
    auto k0 = static_cast<std::uint32_t>(key);
    auto k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return counter;
}

FrameRng::FrameRng(std::uint64_t seed, std::uint32_t point_index,
                   std::uint64_t frame_index)
    : key_(seed), point_(point_index), frame_(frame_index) {}

std::array<std::uint32_t, 4> FrameRng::next_block(std::uint32_t stream) {
    const std::uint32_t block = (stream == 0) ? bit_block_++ : uniform_block_++;
    return philox4x32(key_, {block,
                             static_cast<std::uint32_t>(frame_),
                             static_cast<std::uint32_t>(frame_ >> 32),
                             (point_ << 1) | stream});
}

std::uint32_t FrameRng::next_bit() {
    if (bit_pos_ >= 128) {
        bit_words_ = next_block(0);
        bit_pos_ = 0;
    }
    const std::uint32_t word = bit_words_[bit_pos_ >> 5];
    const std::uint32_t bit = (word >> (bit_pos_ & 31u)) & 1u;
    ++bit_pos_;
    return bit;
}

double FrameRng::next_uniform() {
    if (uniform_pos_ >= 2) {
        const auto words = next_block(1);
        uniforms_[0] = to_unit_interval(words[0], words[1]);
        uniforms_[1] = to_unit_interval(words[2], words[3]);
        uniform_pos_ = 0;
    }
    return uniforms_[uniform_pos_++];
}

double FrameRng::next_gaussian() {
    if (gaussian_cached_) {
        gaussian_cached_ = false;
        return gaussian_spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    gaussian_spare_ = radius * std::sin(angle);
    gaussian_cached_ = true;
    return radius * std::cos(angle);
}

} // namespace polar
