#include "polar/perm_decoder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polar {

PermutationSet::PermutationSet(std::vector<LayerPermutation> perms)
    : layers_(std::move(perms)) {
    if (layers_.empty()) {
        throw std::invalid_argument("PermutationSet: set must be non-empty");
    }
    const std::size_t m = layers_.front().size();
    for (const auto& pl : layers_) {
        if (pl.size() != m) {
            throw std::invalid_argument("PermutationSet: mixed layer counts");
        }
    }
    std::set<std::vector<std::size_t>> seen;
    for (const auto& pl : layers_) {
        if (!seen.insert(pl.map()).second) {
            throw std::invalid_argument("PermutationSet: duplicate permutation");
        }
    }
    bits_.reserve(layers_.size());
    bit_inverses_.reserve(layers_.size());
    for (const auto& pl : layers_) {
        bits_.push_back(layer_to_bit_permutation(pl));
        bit_inverses_.push_back(invert_permutation(bits_.back()));
    }
}

PermDecoder::PermDecoder(std::size_t n, PermutationSet pset)
    : n_(n), pset_(std::move(pset)) {
    if ((std::size_t{1} << pset_.layer_count()) != n) {
        throw std::invalid_argument("PermDecoder: permutation layer count does not match code length");
    }
    decoders_.reserve(pset_.size());
    for (std::size_t i = 0; i < pset_.size(); ++i) {
        decoders_.emplace_back(n_);
    }
    branches_.resize(pset_.size());
}

void PermDecoder::decode_branches(const LlrVector& llrs, const PolarCode& code,
                                  int threads) {
    if (llrs.size() != n_ || code.length() != n_) {
        throw std::invalid_argument("PermDecoder::decode: size mismatch");
    }
    const auto count = static_cast<std::ptrdiff_t>(pset_.size());
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const LlrVector permuted = apply_permutation(pset_.bit(idx), llrs);
        DecodeResult branch = decoders_[idx].decode(permuted, code, pset_.bit(idx));
        branches_[idx].u_original =
            apply_permutation(pset_.bit_inverse(idx), branch.u_bits);
        branches_[idx].metric = branch.metric;
    }
}

DecodeResult PermDecoder::decode(const LlrVector& llrs, const PolarCode& code,
                                 int threads) {
    decode_branches(llrs, code, threads);
    // deterministic reduction in set order, strict improvement only
    std::size_t best = 0;
    for (std::size_t i = 1; i < branches_.size(); ++i) {
        if (branches_[i].metric > branches_[best].metric) {
            best = i;
        }
    }
    DecodeResult result;
    result.u_bits = branches_[best].u_original;
    result.codeword = kronecker_transform(result.u_bits);
    result.metric = branches_[best].metric;
    return result;
}

std::size_t PermDecoder::unique_codeword_count(const LlrVector& llrs,
                                               const PolarCode& code, int threads) {
    decode_branches(llrs, code, threads);
    std::set<Bits> distinct;
    for (const auto& branch : branches_) {
        distinct.insert(kronecker_transform(branch.u_original));
    }
    return distinct.size();
}

DecodeResult perm_decode(const LlrVector& llrs, const PolarCode& code,
                         const PermutationSet& pset, int threads) {
    PermDecoder decoder(llrs.size(), pset);
    return decoder.decode(llrs, code, threads);
}

std::size_t unique_codeword_count(const LlrVector& llrs, const PolarCode& code,
                                  const PermutationSet& pset, int threads) {
    PermDecoder decoder(llrs.size(), pset);
    return decoder.unique_codeword_count(llrs, code, threads);
}

} // namespace polar
