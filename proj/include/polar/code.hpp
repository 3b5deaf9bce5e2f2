#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polar {

using Bits = std::vector<std::uint8_t>;
using LlrVector = std::vector<double>;

// An (n, k) polar code: n = 2^m, frozen index set F with |F| = n - k.
// The dimension may be zero (fully frozen code); the construction
// routines reject k = 0, but the algebra below handles it.
class PolarCode {
public:
    PolarCode(std::size_t n, std::size_t k, std::vector<std::size_t> frozen);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::size_t layer_count() const { return m_; }

    const std::vector<std::size_t>& frozen_indices() const { return frozen_; }
    const std::vector<std::size_t>& info_indices() const { return info_; }
    bool is_frozen(std::size_t i) const { return frozen_mask_[i] != 0; }

    bool operator==(const PolarCode& other) const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> frozen_;       // ascending
    std::vector<std::size_t> info_;         // ascending
    std::vector<std::uint8_t> frozen_mask_;
};

// x = u * A_m over GF(2) with A_m the m-fold Kronecker power of the
// 2x2 kernel; in-place butterfly, no bit-reversal stage.
void kronecker_transform_inplace(Bits& u);
Bits kronecker_transform(const Bits& u);

// u[i] = 0 for i in F, info bits fill the info indices in ascending order.
Bits encode(const Bits& info_bits, const PolarCode& code);

// Inverse of the encoder's placement: picks u at the info indices.
Bits extract_info_bits(const Bits& u, const PolarCode& code);

} // namespace polar
