#pragma once

#include <cstddef>
#include <vector>

namespace polar {

// Permutation of the m factor graph layers. Layer t carries the binary
// digit of weight 2^t of a bit index; layer 0 is adjacent to the u-side
// of the graph.
class LayerPermutation {
public:
    explicit LayerPermutation(std::vector<std::size_t> map);
    static LayerPermutation identity(std::size_t m);

    std::size_t size() const { return map_.size(); }
    std::size_t operator()(std::size_t t) const { return map_[t]; }
    const std::vector<std::size_t>& map() const { return map_; }

    LayerPermutation inverse() const;
    // (a.compose(b))(t) = a(b(t))
    LayerPermutation compose(const LayerPermutation& other) const;

    bool operator==(const LayerPermutation& other) const = default;
    bool operator<(const LayerPermutation& other) const { return map_ < other.map_; }

private:
    std::vector<std::size_t> map_;
};

// Permutation of the n = 2^m bit indices. Applied as out[i] = v[p(i)].
class BitPermutation {
public:
    explicit BitPermutation(std::vector<std::size_t> map);
    static BitPermutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::size_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::size_t>& map() const { return map_; }

    bool operator==(const BitPermutation& other) const = default;

private:
    std::vector<std::size_t> map_;
};

// Bit index permutation induced by a layers permutation: digit t of the
// input index becomes digit pl(t) of the output index. This is the unique
// orientation that maps pl = (0,2,1) to pi = (0,1,4,5,2,3,6,7) and makes
// layer_to_bit_permutation a homomorphism under compose().
BitPermutation layer_to_bit_permutation(const LayerPermutation& pl);

BitPermutation invert_permutation(const BitPermutation& p);

// out[i] = v[p(i)]
template <typename T>
std::vector<T> apply_permutation(const BitPermutation& p, const std::vector<T>& v);

std::size_t layer_hamming_distance(const LayerPermutation& a, const LayerPermutation& b);

} // namespace polar
