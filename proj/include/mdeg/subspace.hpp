#pragma once

#include "mdeg/matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mdeg {

/// Coefficient range for randomized genericity sampling: the Mersenne prime
/// 2^31 - 1. Degeneracy probability per draw is O(dim/p) (Schwartz-Zippel),
/// negligible at this size; combinatorial checks stay the exact arbiter.
inline constexpr std::uint64_t kSamplePrime = 2147483647ULL;

/// Uniform draw from [0, p) by rejection, so results depend only on the
/// std::mt19937_64 stream and are reproducible across platforms.
inline std::uint64_t uniform_mod_prime(std::mt19937_64& eng) {
    const std::uint64_t limit =
        UINT64_MAX - (UINT64_MAX % kSamplePrime);
    std::uint64_t x = eng();
    while (x >= limit) {
        x = eng();
    }
    return x % kSamplePrime;
}

/// Linear subspace of Q^D given by an explicit basis (rows). Construction
/// checks that the rows are actually independent.
class Subspace {
public:
    explicit Subspace(RationalMatrix basis)
        : ambient_dim_(basis.cols()), basis_(std::move(basis)) {
        if (rank(basis_) != basis_.rows()) {
            throw std::invalid_argument("subspace basis rows are dependent");
        }
    }

    Subspace(std::size_t ambient_dim, RationalMatrix basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
        if (basis_.cols() != ambient_dim_) {
            throw std::invalid_argument("basis width does not match ambient dimension");
        }
        if (rank(basis_) != basis_.rows()) {
            throw std::invalid_argument("subspace basis rows are dependent");
        }
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

private:
    std::size_t ambient_dim_;
    RationalMatrix basis_;
};

/// dim(sum of the selected subspaces) = rank of their stacked bases.
/// `mask` selects spaces by bit (bit i <-> spaces[i]); 0 gives 0.
inline std::size_t subspace_sum_dim(const std::vector<Subspace>& spaces, std::uint32_t mask) {
    RationalMatrix stacked;
    std::size_t ambient = 0;
    bool have_ambient = false;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (!have_ambient) {
            ambient = spaces[i].ambient_dim();
            have_ambient = true;
        } else if (spaces[i].ambient_dim() != ambient) {
            throw std::invalid_argument("subspace_sum_dim: mixed ambient dimensions");
        }
        if ((mask >> i) & 1u) {
            for (std::size_t r = 0; r < spaces[i].dim(); ++r) {
                stacked.append_row(spaces[i].basis().row(r));
            }
        }
    }
    return rank(stacked);
}

/// `count` random vectors of W: integer combinations of the basis rows with
/// coefficients uniform in [0, kSamplePrime). Deterministic given the seed.
inline RationalMatrix random_field_vectors(const Subspace& w, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    RationalMatrix out(count, w.ambient_dim());
    for (std::size_t v = 0; v < count; ++v) {
        for (std::size_t b = 0; b < w.dim(); ++b) {
            const Integer coeff = uniform_mod_prime(eng);
            for (std::size_t c = 0; c < w.ambient_dim(); ++c) {
                out(v, c) += Rational(coeff) * w.basis()(b, c);
            }
        }
    }
    return out;
}

} // namespace mdeg
