#pragma once

#include <array>
#include <cstdint>

namespace polar {

// Philox 4x32-10 counter-based generator (Salmon et al. constants).
// Stateless block function: the same key and counter always produce the
// same output, independent of call order or thread placement.
std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::array<std::uint32_t, 4> counter);

// Deterministic per-frame random stream keyed by (seed, point, frame).
// Every frame owns disjoint counter space, so Monte Carlo frames can be
// evaluated in any order or concurrently with identical results.
class FrameRng {
public:
    FrameRng(std::uint64_t seed, std::uint32_t point_index, std::uint64_t frame_index);

    std::uint32_t next_bit();
    double next_gaussian();
    double next_uniform();   // in (0, 1)

private:
    std::array<std::uint32_t, 4> next_block(std::uint32_t stream);

    std::uint64_t key_;
    std::uint32_t point_;
    std::uint64_t frame_;

    std::uint32_t bit_block_ = 0;
    std::uint32_t bit_pos_ = 128;
    std::array<std::uint32_t, 4> bit_words_{};

    std::uint32_t uniform_block_ = 0;
    std::uint32_t uniform_pos_ = 2;
    std::array<double, 2> uniforms_{};

    bool gaussian_cached_ = false;
    double gaussian_spare_ = 0.0;
};

} // namespace polar
