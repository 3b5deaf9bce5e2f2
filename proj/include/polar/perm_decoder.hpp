#pragma once

#include "polar/code.hpp"
#include "polar/permutation.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// A set of factor graph layers permutations with their induced bit
// permutations cached. All permutations act on the same layer count,
// duplicates are rejected.
class PermutationSet {
public:
    explicit PermutationSet(std::vector<LayerPermutation> perms);

    std::size_t size() const { return layers_.size(); }
    std::size_t layer_count() const { return layers_.front().size(); }
    const LayerPermutation& layer(std::size_t i) const { return layers_[i]; }
    const BitPermutation& bit(std::size_t i) const { return bits_[i]; }
    const BitPermutation& bit_inverse(std::size_t i) const { return bit_inverses_[i]; }
    const std::vector<LayerPermutation>& layers() const { return layers_; }

private:
    std::vector<LayerPermutation> layers_;
    std::vector<BitPermutation> bits_;
    std::vector<BitPermutation> bit_inverses_;
};

// Runs one SC decode per permutation on the permuted channel LLRs and
// keeps the codeword with the largest metric; ties go to the earliest
// permutation in the set. The returned u_bits live in the original
// (unpermuted) code's indexing and re-encode to the decoded codeword.
class PermDecoder {
public:
    PermDecoder(std::size_t n, PermutationSet pset);

    DecodeResult decode(const LlrVector& llrs, const PolarCode& code,
                        int threads = 1);

    // Number of distinct codewords over all branches; diagnostic only.
    std::size_t unique_codeword_count(const LlrVector& llrs, const PolarCode& code,
                                      int threads = 1);

    const PermutationSet& permutations() const { return pset_; }

private:
    struct Branch {
        Bits u_original;   // decode-order bits mapped back through pi^{-1}
        double metric;
    };
    void decode_branches(const LlrVector& llrs, const PolarCode& code, int threads);

    std::size_t n_;
    PermutationSet pset_;
    std::vector<ScDecoder> decoders_;
    std::vector<Branch> branches_;
};

DecodeResult perm_decode(const LlrVector& llrs, const PolarCode& code,
                         const PermutationSet& pset, int threads = 1);

std::size_t unique_codeword_count(const LlrVector& llrs, const PolarCode& code,
                                  const PermutationSet& pset, int threads = 1);

} // namespace polar
