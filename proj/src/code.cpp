#include "polar/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polar {

PolarCode::PolarCode(std::size_t n, std::size_t k, std::vector<std::size_t> frozen)
    : n_(n), k_(k), frozen_(std::move(frozen)) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("PolarCode: length must be a power of two");
    }
    if (k > n) {
        throw std::invalid_argument("PolarCode: dimension exceeds length");
    }
    if (frozen_.size() != n - k) {
        throw std::invalid_argument("PolarCode: |frozen| must equal n - k");
    }
    m_ = static_cast<std::size_t>(std::countr_zero(n));
    std::sort(frozen_.begin(), frozen_.end());
    frozen_mask_.assign(n, 0);
    for (std::size_t i : frozen_) {
        if (i >= n) {
            throw std::invalid_argument("PolarCode: frozen index out of range");
        }
        if (frozen_mask_[i]) {
            throw std::invalid_argument("PolarCode: duplicate frozen index");
        }
        frozen_mask_[i] = 1;
    }
    info_.reserve(k);
    for (std::size_t i = 0; i < n; ++i) {
        if (!frozen_mask_[i]) {
            info_.push_back(i);
        }
    }
}

bool PolarCode::operator==(const PolarCode& other) const {
    return n_ == other.n_ && k_ == other.k_ && frozen_ == other.frozen_;
}

void kronecker_transform_inplace(Bits& u) {
    const std::size_t n = u.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("kronecker_transform: length must be a power of two");
    }
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                u[i] ^= u[i + half];
            }
        }
    }
}

Bits kronecker_transform(const Bits& u) {
    Bits x = u;
    kronecker_transform_inplace(x);
    return x;
}

Bits encode(const Bits& info_bits, const PolarCode& code) {
    if (info_bits.size() != code.dimension()) {
        throw std::invalid_argument("encode: info length must equal code dimension");
    }
    Bits u(code.length(), 0);
    const auto& info = code.info_indices();
    for (std::size_t i = 0; i < info.size(); ++i) {
        u[info[i]] = info_bits[i] & 1u;
    }
    kronecker_transform_inplace(u);
    return u;
}

Bits extract_info_bits(const Bits& u, const PolarCode& code) {
    if (u.size() != code.length()) {
        throw std::invalid_argument("extract_info_bits: length mismatch");
    }
    const auto& info = code.info_indices();
    Bits out(info.size());
    for (std::size_t i = 0; i < info.size(); ++i) {
        out[i] = u[info[i]];
    }
    return out;
}

} // namespace polar
