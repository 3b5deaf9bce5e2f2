#include "polar/scl_decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace polar {

SclDecoder::SclDecoder(std::size_t n, std::size_t list_size)
    : n_(n), list_size_(list_size) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("SclDecoder: length must be a power of two");
    }
    if (list_size == 0) {
        throw std::invalid_argument("SclDecoder: list size must be positive");
    }
    m_ = static_cast<std::size_t>(std::countr_zero(n));
    llr_.resize(m_ + 1);
    bits_.resize(m_ + 1);
    path_slot_.assign(m_ + 1, std::vector<std::size_t>(list_size_, 0));
    slot_refs_.assign(m_ + 1, std::vector<std::size_t>(list_size_, 0));
    free_slots_.resize(m_ + 1);
    for (std::size_t l = 0; l <= m_; ++l) {
        const std::size_t len = std::size_t{1} << (m_ - l);
        llr_[l].assign(list_size_, LlrVector(len));
        bits_[l].assign(list_size_, Bits(2 * len));
    }
    active_.assign(list_size_, 0);
    metric_.assign(list_size_, 0.0);
    path_u_.assign(list_size_, Bits(n_));
    forks_.reserve(2 * list_size_);
    keep_.assign(2 * list_size_, 0);
    keep0_.assign(list_size_, 0);
    keep1_.assign(list_size_, 0);
    order_.reserve(2 * list_size_);
}

std::size_t SclDecoder::llr_slot(std::size_t level, std::size_t path) {
    return path_slot_[level][path];
}

std::size_t SclDecoder::bit_slot(std::size_t level, std::size_t path) {
    return path_slot_[level][path];
}

// Copy-on-write access for a level's working arrays.
std::size_t SclDecoder::slot_for_write(std::size_t level, std::size_t path) {
    const std::size_t s = path_slot_[level][path];
    if (slot_refs_[level][s] == 1) {
        return s;
    }
    const std::size_t fresh = free_slots_[level].back();
    free_slots_[level].pop_back();
    llr_[level][fresh] = llr_[level][s];
    bits_[level][fresh] = bits_[level][s];
    --slot_refs_[level][s];
    slot_refs_[level][fresh] = 1;
    path_slot_[level][path] = fresh;
    return fresh;
}

std::size_t SclDecoder::clone_path(std::size_t path) {
    const std::size_t fresh = free_paths_.back();
    free_paths_.pop_back();
    active_[fresh] = 1;
    metric_[fresh] = metric_[path];
    path_u_[fresh] = path_u_[path];
    for (std::size_t l = 0; l <= m_; ++l) {
        const std::size_t s = path_slot_[l][path];
        path_slot_[l][fresh] = s;
        ++slot_refs_[l][s];
    }
    return fresh;
}

void SclDecoder::kill_path(std::size_t path) {
    active_[path] = 0;
    free_paths_.push_back(path);
    for (std::size_t l = 0; l <= m_; ++l) {
        const std::size_t s = path_slot_[l][path];
        if (--slot_refs_[l][s] == 0) {
            free_slots_[l].push_back(s);
        }
    }
}

void SclDecoder::calc_llr(std::size_t level, std::size_t phase) {
    if (level == 0) {
        return;
    }
    if ((phase & 1u) == 0) {
        calc_llr(level - 1, phase >> 1);
    }
    const std::size_t len = std::size_t{1} << (m_ - level);
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!active_[p]) {
            continue;
        }
        const LlrVector& in = llr_[level - 1][llr_slot(level - 1, p)];
        const std::size_t s = slot_for_write(level, p);
        LlrVector& out = llr_[level][s];
        if ((phase & 1u) == 0) {
            for (std::size_t b = 0; b < len; ++b) {
                out[b] = f_minus_minsum(in[b], in[b + len]);
            }
        } else {
            const Bits& even = bits_[level][s];
            for (std::size_t b = 0; b < len; ++b) {
                out[b] = f_plus(in[b], in[b + len], even[b]);
            }
        }
    }
}

void SclDecoder::update_bits(std::size_t level, std::size_t phase) {
    const std::size_t psi = phase >> 1;
    const std::size_t len = std::size_t{1} << (m_ - level);
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!active_[p]) {
            continue;
        }
        const Bits& child = bits_[level][bit_slot(level, p)];
        const std::size_t s = slot_for_write(level - 1, p);
        Bits& parent = bits_[level - 1][s];
        std::uint8_t* half = parent.data() + ((psi & 1u) ? 2 * len : 0);
        for (std::size_t b = 0; b < len; ++b) {
            half[b] = child[b] ^ child[b + len];
            half[b + len] = child[b + len];
        }
    }
    if ((psi & 1u) && level > 1) {
        update_bits(level - 1, psi);
    }
}

void SclDecoder::continue_frozen(std::size_t phase) {
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!active_[p]) {
            continue;
        }
        const double llr = llr_[m_][llr_slot(m_, p)][0];
        const std::size_t s = slot_for_write(m_, p);
        bits_[m_][s][phase & 1u] = 0;
        path_u_[p][phase] = 0;
        metric_[p] += std::min(0.0, llr);
    }
}

void SclDecoder::continue_info(std::size_t phase) {
    forks_.clear();
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!active_[p]) {
            continue;
        }
        const double llr = llr_[m_][llr_slot(m_, p)][0];
        const std::uint8_t favored = (llr <= 0.0) ? 1 : 0;
        const double penalty = -std::fabs(llr);
        forks_.push_back({p, 0, metric_[p] + (favored == 0 ? 0.0 : penalty)});
        forks_.push_back({p, 1, metric_[p] + (favored == 1 ? 0.0 : penalty)});
    }
    const std::size_t rho = std::min(list_size_, forks_.size());
    order_.resize(forks_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        order_[i] = i;
    }
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        if (forks_[a].metric != forks_[b].metric) {
            return forks_[a].metric > forks_[b].metric;
        }
        if (forks_[a].path != forks_[b].path) {
            return forks_[a].path < forks_[b].path;
        }
        return forks_[a].bit < forks_[b].bit;
    });
    std::fill(keep_.begin(), keep_.end(), 0);
    for (std::size_t i = 0; i < rho; ++i) {
        keep_[order_[i]] = 1;
    }

    // keep_ is indexed in fork emission order: two entries per active path
    std::fill(keep0_.begin(), keep0_.end(), 0);
    std::fill(keep1_.begin(), keep1_.end(), 0);
    auto& keep0 = keep0_;
    auto& keep1 = keep1_;
    std::size_t idx = 0;
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!active_[p]) {
            continue;
        }
        keep0[p] = keep_[idx++];
        keep1[p] = keep_[idx++];
    }

    for (std::size_t p = 0; p < list_size_; ++p) {
        if (active_[p] && !keep0[p] && !keep1[p]) {
            kill_path(p);
        }
    }
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (!keep0[p] && !keep1[p]) {
            continue;
        }
        const double llr = llr_[m_][llr_slot(m_, p)][0];
        const std::uint8_t favored = (llr <= 0.0) ? 1 : 0;
        const double penalty = -std::fabs(llr);
        if (keep0[p] && keep1[p]) {
            const std::size_t q = clone_path(p);
            {
                const std::size_t s = slot_for_write(m_, p);
                bits_[m_][s][phase & 1u] = 0;
                path_u_[p][phase] = 0;
                metric_[p] += (favored == 0 ? 0.0 : penalty);
            }
            {
                const std::size_t s = slot_for_write(m_, q);
                bits_[m_][s][phase & 1u] = 1;
                path_u_[q][phase] = 1;
                metric_[q] += (favored == 1 ? 0.0 : penalty);
            }
        } else {
            const std::uint8_t bit = keep1[p] ? 1 : 0;
            const std::size_t s = slot_for_write(m_, p);
            bits_[m_][s][phase & 1u] = bit;
            path_u_[p][phase] = bit;
            metric_[p] += (favored == bit ? 0.0 : penalty);
        }
    }
}

DecodeResult SclDecoder::decode(const LlrVector& llrs, const PolarCode& code) {
    if (llrs.size() != n_ || code.length() != n_) {
        throw std::invalid_argument("SclDecoder::decode: size mismatch");
    }
    code_ = &code;

    // reset shared-array bookkeeping
    free_paths_.clear();
    for (std::size_t p = list_size_; p-- > 0;) {
        free_paths_.push_back(p);
    }
    for (std::size_t l = 0; l <= m_; ++l) {
        free_slots_[l].clear();
        for (std::size_t s = list_size_; s-- > 0;) {
            free_slots_[l].push_back(s);
        }
        std::fill(slot_refs_[l].begin(), slot_refs_[l].end(), 0);
    }
    std::fill(active_.begin(), active_.end(), 0);
    std::fill(metric_.begin(), metric_.end(), 0.0);

    const std::size_t p0 = free_paths_.back();
    free_paths_.pop_back();
    active_[p0] = 1;
    for (std::size_t l = 0; l <= m_; ++l) {
        const std::size_t s = free_slots_[l].back();
        free_slots_[l].pop_back();
        path_slot_[l][p0] = s;
        slot_refs_[l][s] = 1;
    }
    llr_[0][path_slot_[0][p0]] = llrs;

    for (std::size_t phase = 0; phase < n_; ++phase) {
        calc_llr(m_, phase);
        if (code.is_frozen(phase)) {
            continue_frozen(phase);
        } else {
            continue_info(phase);
        }
        if (phase & 1u) {
            update_bits(m_, phase);
        }
    }

    std::size_t best = list_size_;
    for (std::size_t p = 0; p < list_size_; ++p) {
        if (active_[p] && (best == list_size_ || metric_[p] > metric_[best])) {
            best = p;
        }
    }
    DecodeResult result;
    result.u_bits = path_u_[best];
    result.codeword = kronecker_transform(result.u_bits);
    result.metric = metric_[best];
    return result;
}

DecodeResult scl_decode(const LlrVector& llrs, const PolarCode& code,
                        std::size_t list_size) {
    SclDecoder decoder(llrs.size(), list_size);
    return decoder.decode(llrs, code);
}

} // namespace polar
