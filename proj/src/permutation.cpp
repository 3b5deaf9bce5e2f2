#include "polar/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace polar {

namespace {

void check_bijection(const std::vector<std::size_t>& map, const char* what) {
    std::vector<bool> seen(map.size(), false);
    for (std::size_t v : map) {
        if (v >= map.size() || seen[v]) {
            throw std::invalid_argument(std::string(what) + ": map is not a bijection");
        }
        seen[v] = true;
    }
}

} // namespace

LayerPermutation::LayerPermutation(std::vector<std::size_t> map)
    : map_(std::move(map)) {
    check_bijection(map_, "LayerPermutation");
}

LayerPermutation LayerPermutation::identity(std::size_t m) {
    std::vector<std::size_t> map(m);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return LayerPermutation(std::move(map));
}

LayerPermutation LayerPermutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t t = 0; t < map_.size(); ++t) {
        inv[map_[t]] = t;
    }
    return LayerPermutation(std::move(inv));
}

LayerPermutation LayerPermutation::compose(const LayerPermutation& other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("LayerPermutation::compose: size mismatch");
    }
    std::vector<std::size_t> out(map_.size());
    for (std::size_t t = 0; t < map_.size(); ++t) {
        out[t] = map_[other.map_[t]];
    }
    return LayerPermutation(std::move(out));
}

BitPermutation::BitPermutation(std::vector<std::size_t> map)
    : map_(std::move(map)) {
    check_bijection(map_, "BitPermutation");
}

BitPermutation BitPermutation::identity(std::size_t n) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return BitPermutation(std::move(map));
}

BitPermutation layer_to_bit_permutation(const LayerPermutation& pl) {
    const std::size_t m = pl.size();
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::size_t> map(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t out = 0;
        for (std::size_t t = 0; t < m; ++t) {
            if ((j >> t) & 1u) {
                out |= std::size_t{1} << pl(t);
            }
        }
        map[j] = out;
    }
    return BitPermutation(std::move(map));
}

BitPermutation invert_permutation(const BitPermutation& p) {
    std::vector<std::size_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p(i)] = i;
    }
    return BitPermutation(std::move(inv));
}

template <typename T>
std::vector<T> apply_permutation(const BitPermutation& p, const std::vector<T>& v) {
    if (v.size() != p.size()) {
        throw std::invalid_argument("apply_permutation: length mismatch");
    }
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[p(i)];
    }
    return out;
}

template std::vector<double> apply_permutation(const BitPermutation&, const std::vector<double>&);
template std::vector<std::uint8_t> apply_permutation(const BitPermutation&, const std::vector<std::uint8_t>&);
template std::vector<std::size_t> apply_permutation(const BitPermutation&, const std::vector<std::size_t>&);
template std::vector<int> apply_permutation(const BitPermutation&, const std::vector<int>&);

std::size_t layer_hamming_distance(const LayerPermutation& a, const LayerPermutation& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("layer_hamming_distance: size mismatch");
    }
    std::size_t count = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a(t) != b(t)) {
            ++count;
        }
    }
    return count;
}

} // namespace polar
