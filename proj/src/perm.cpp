#include "minact/perm.hpp"

#include <algorithm>

namespace minact {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw InvalidParams("Permutation: image array is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
        img[static_cast<size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree())
        throw InvalidParams("Permutation: degree mismatch");
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img.size(); ++x)
        img[x] = img_[static_cast<size_t>(other.img_[x])];
    Permutation out;
    out.img_ = std::move(img); // composition of bijections, skip re-validation
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
        img[static_cast<size_t>(img_[x])] = static_cast<int>(x);
    Permutation out;
    out.img_ = std::move(img);
    return out;
}

bool Permutation::is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x))
            return false;
    return true;
}

long long Permutation::order() const {
    long long t = 1;
    Permutation acc = *this;
    while (!acc.is_identity()) {
        acc = acc * (*this);
        ++t;
    }
    return t;
}

} // namespace minact
