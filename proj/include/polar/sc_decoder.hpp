#pragma once

#include "polar/code.hpp"
#include "polar/permutation.hpp"

#include <algorithm>
#include <cmath>

namespace polar {

// Exact check-node update ln((e^{x+y}+1)/(e^x+e^y)), evaluated in a
// numerically stable rearrangement. Provided for analysis; decoding
// uses the min-sum approximation below.
double f_minus_exact(double x, double y);

// sign(x) sign(y) min{|x|, |y|}, with sign(0) taken as +1.
inline double f_minus_minsum(double x, double y) {
    const double sgn = ((x < 0) != (y < 0)) ? -1.0 : 1.0;
    return sgn * std::min(std::fabs(x), std::fabs(y));
}

// (1 - 2u) x + y
inline double f_plus(double x, double y, unsigned u) {
    return u ? y - x : x + y;
}

struct DecodeResult {
    Bits u_bits;     // decode-order bit vector (u-domain of the decoder's input)
    Bits codeword;   // reconstructed codeword in the decoder's LLR domain
    double metric;   // sum over frozen decisions of min{0, decision LLR}; <= 0
};

// Successive cancellation decoder with the LLR-based codeword metric.
// One instance owns its working buffers; decode calls on an instance are
// sequential, distinct instances may run concurrently.
class ScDecoder {
public:
    explicit ScDecoder(std::size_t n);

    // llrs are already permuted by the caller; perm enters only the
    // frozen test perm(g) in F at the leaves.
    DecodeResult decode(const LlrVector& llrs, const PolarCode& code,
                        const BitPermutation& perm);
    DecodeResult decode(const LlrVector& llrs, const PolarCode& code);

    // Decision LLRs in decode order, valid after the last decode().
    const LlrVector& decision_llrs() const { return decision_llrs_; }

private:
    void recurse(std::size_t level, std::size_t g);

    std::size_t n_;
    std::size_t m_;
    const PolarCode* code_ = nullptr;
    const BitPermutation* perm_ = nullptr;
    std::vector<LlrVector> llr_;          // llr_[l] has 2^l entries
    std::vector<Bits> bits_;              // bits_[l] has 2^l entries
    Bits u_decode_order_;
    LlrVector decision_llrs_;
    double metric_ = 0.0;                 // accumulated in decode order
};

} // namespace polar
