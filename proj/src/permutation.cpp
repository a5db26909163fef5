#include "decomp/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace decomp {

std::uint64_t factorial(std::uint32_t m) {
    if (m > 20) throw std::domain_error("factorial: degree > 20 overflows 64 bits");
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= m; ++i) f *= i;
    return f;
}

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw std::invalid_argument("Permutation: degree mismatch in compose");
    std::vector<std::uint32_t> out(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) out[i] = images_[rhs.images_[i]];
    Permutation p(degree());
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p(degree());
    for (std::uint32_t i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
    return p;
}

std::uint64_t Permutation::lehmer_rank() const {
    const std::uint32_t m = degree();
    std::uint64_t rank = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t smaller_later = 0;
        for (std::uint32_t j = i + 1; j < m; ++j)
            smaller_later += images_[j] < images_[i];
        rank += smaller_later * factorial(m - 1 - i);
    }
    return rank;
}

Permutation Permutation::from_lehmer_rank(std::uint32_t degree, std::uint64_t rank) {
    if (rank >= factorial(degree))
        throw std::out_of_range("Permutation: Lehmer rank out of range");
    std::vector<std::uint32_t> pool(degree);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> out;
    out.reserve(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
        const std::uint64_t f = factorial(degree - 1 - i);
        const auto digit = static_cast<std::uint32_t>(rank / f);
        rank %= f;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + digit);
    }
    Permutation p(degree);
    p.images_ = std::move(out);
    return p;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<std::uint32_t> lengths;
    for (std::uint32_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::uint64_t Permutation::centralizer_order_in_symmetric() const {
    const auto type = cycle_type();
    std::uint64_t order = 1;
    std::size_t i = 0;
    while (i < type.size()) {
        std::size_t j = i;
        while (j < type.size() && type[j] == type[i]) ++j;
        const auto mult = static_cast<std::uint32_t>(j - i);
        for (std::uint32_t r = 0; r < mult; ++r) order *= type[i];
        order *= factorial(mult);
        i = j;
    }
    return order;
}

std::string Permutation::to_cycle_string() const {
    std::vector<bool> seen(degree(), false);
    std::string s;
    for (std::uint32_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        s += '(';
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (j != i) s += ' ';
            s += std::to_string(j);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

}  // namespace decomp
