#pragma once

#include "polar/code.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// LLR-based successive cancellation list decoder with min-sum path
// metrics. The metric convention matches ScDecoder (larger is better,
// maximum 0), so list and permutation decoder metrics are directly
// comparable. One instance owns its working state; independent calls
// run concurrently on separate instances.
class SclDecoder {
public:
    SclDecoder(std::size_t n, std::size_t list_size);

    DecodeResult decode(const LlrVector& llrs, const PolarCode& code);

    std::size_t list_size() const { return list_size_; }

private:
    std::size_t llr_slot(std::size_t level, std::size_t path);
    std::size_t bit_slot(std::size_t level, std::size_t path);
    std::size_t slot_for_write(std::size_t level, std::size_t path);
    std::size_t clone_path(std::size_t path);
    void kill_path(std::size_t path);
    void calc_llr(std::size_t level, std::size_t phase);
    void update_bits(std::size_t level, std::size_t phase);
    void continue_frozen(std::size_t phase);
    void continue_info(std::size_t phase);

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t list_size_ = 0;
    const PolarCode* code_ = nullptr;

    // Lazily shared per-level working arrays (reference counted slots).
    std::vector<std::vector<LlrVector>> llr_;     // [level][slot], size 2^{m-level}
    std::vector<std::vector<Bits>> bits_;         // [level][slot], size 2*2^{m-level}
    std::vector<std::vector<std::size_t>> path_slot_;
    std::vector<std::vector<std::size_t>> slot_refs_;
    std::vector<std::vector<std::size_t>> free_slots_;

    std::vector<std::uint8_t> active_;
    std::vector<double> metric_;
    std::vector<Bits> path_u_;
    std::vector<std::size_t> free_paths_;

    struct Fork {
        std::size_t path;
        std::uint8_t bit;
        double metric;
    };
    std::vector<Fork> forks_;
    std::vector<std::uint8_t> keep_;
    std::vector<std::uint8_t> keep0_;
    std::vector<std::uint8_t> keep1_;
    std::vector<std::size_t> order_;
};

// Convenience wrapper constructing a decoder per call.
DecodeResult scl_decode(const LlrVector& llrs, const PolarCode& code,
                        std::size_t list_size);

} // namespace polar
