#pragma once

#include <cstdint>
#include <vector>

#include "minact/errors.hpp"

namespace minact {

/// Bijection on {0..degree-1}, stored as the image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    /// Function composition: (a*b)(x) = a(b(x)).
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;
    long long order() const;

    bool operator==(const Permutation& other) const = default;
    auto operator<=>(const Permutation& other) const = default;

private:
    std::vector<int> img_;
};

struct PermutationHash {
    size_t operator()(const Permutation& p) const {
        // FNV-1a over the image array
        uint64_t h = 1469598103934665603ULL;
        for (int v : p.images()) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace minact
