#include "polar/sc_decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace polar {

double f_minus_exact(double x, double y) {
    // ln((e^{x+y}+1)/(e^x+e^y)) = sign(x)sign(y)
    //   * (min(|x|,|y|) + log1p(e^{-(|x|+|y|)}) - log1p(e^{-||x|-|y||}))
    const double a = std::fabs(x);
    const double b = std::fabs(y);
    const double sgn = ((x < 0) != (y < 0)) ? -1.0 : 1.0;
    return sgn * (std::min(a, b) + std::log1p(std::exp(-(a + b)))
                  - std::log1p(std::exp(-std::fabs(a - b))));
}

ScDecoder::ScDecoder(std::size_t n) : n_(n) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("ScDecoder: length must be a power of two");
    }
    m_ = static_cast<std::size_t>(std::countr_zero(n));
    llr_.resize(m_ + 1);
    bits_.resize(m_ + 1);
    for (std::size_t l = 0; l <= m_; ++l) {
        llr_[l].resize(std::size_t{1} << l);
        bits_[l].resize(std::size_t{1} << l);
    }
    u_decode_order_.resize(n);
    decision_llrs_.resize(n);
}

DecodeResult ScDecoder::decode(const LlrVector& llrs, const PolarCode& code,
                               const BitPermutation& perm) {
    if (llrs.size() != n_ || code.length() != n_ || perm.size() != n_) {
        throw std::invalid_argument("ScDecoder::decode: size mismatch");
    }
    code_ = &code;
    perm_ = &perm;
    llr_[m_] = llrs;
    metric_ = 0.0;
    recurse(m_, 0);
    return DecodeResult{u_decode_order_, bits_[m_], metric_};
}

DecodeResult ScDecoder::decode(const LlrVector& llrs, const PolarCode& code) {
    return decode(llrs, code, BitPermutation::identity(n_));
}

void ScDecoder::recurse(std::size_t level, std::size_t g) {
    if (level == 0) {
        const double llr = llr_[0][0];
        decision_llrs_[g] = llr;
        if (code_->is_frozen((*perm_)(g))) {
            u_decode_order_[g] = 0;
            bits_[0][0] = 0;
            metric_ += std::min(0.0, llr);
        } else {
            const std::uint8_t bit = (llr <= 0.0) ? 1 : 0;
            u_decode_order_[g] = bit;
            bits_[0][0] = bit;
        }
        return;
    }
    const std::size_t half = std::size_t{1} << (level - 1);
    const LlrVector& y = llr_[level];
    LlrVector& child = llr_[level - 1];
    for (std::size_t i = 0; i < half; ++i) {
        child[i] = f_minus_minsum(y[i], y[i + half]);
    }
    recurse(level - 1, 2 * g);
    Bits& out = bits_[level];
    const Bits& sub = bits_[level - 1];
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = sub[i];
        child[i] = f_plus(y[i], y[i + half], sub[i]);
    }
    recurse(level - 1, 2 * g + 1);
    for (std::size_t i = 0; i < half; ++i) {
        out[i] ^= sub[i];
        out[i + half] = sub[i];
    }
}

} // namespace polar
