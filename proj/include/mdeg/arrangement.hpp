#pragma once

#include "mdeg/chow.hpp"
#include "mdeg/polymatroid.hpp"
#include "mdeg/subspace.hpp"

#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mdeg {

/// n subspaces W_1..W_n of a common Q^D.
struct SubspaceArrangement {
    std::size_t ambient_dim = 0;
    std::vector<Subspace> spaces;

    SubspaceArrangement(std::size_t ambient_dim_, std::vector<Subspace> spaces_)
        : ambient_dim(ambient_dim_), spaces(std::move(spaces_)) {
        if (spaces.empty()) {
            throw std::invalid_argument("arrangement needs at least one subspace");
        }
        for (const auto& w : spaces) {
            if (w.ambient_dim() != ambient_dim) {
                throw std::invalid_argument("arrangement subspaces have mixed ambient dimensions");
            }
        }
    }

    int n() const { return static_cast<int>(spaces.size()); }

    bool spans_ambient() const {
        return subspace_sum_dim(spaces, (std::uint32_t{1} << spaces.size()) - 1) == ambient_dim;
    }
};

/// f(I) = dim(sum of W_i, i in I); the representable polymatroid of the
/// arrangement.
inline RankFunction rank_function(const SubspaceArrangement& arr) {
    return RankFunction::from_fn(arr.n(), [&](std::uint32_t mask) {
        return static_cast<long long>(subspace_sum_dim(arr.spaces, mask));
    });
}

/// Rank data of the image of P(V) --> prod P(W_i): f(I) = dim(sum W_i) - 1
/// on nonempty I. The map only sees the component of a vector inside
/// sum W_i, so the formula needs no global span condition -- but it does
/// need every W_i nonzero (a zero factor leaves the map undefined).
inline RankFunction li_rank(const SubspaceArrangement& arr) {
    for (const auto& w : arr.spaces) {
        if (w.dim() == 0) {
            throw std::invalid_argument("li_rank: zero subspace factor");
        }
    }
    return RankFunction::from_fn(arr.n(), [&](std::uint32_t mask) -> long long {
        if (mask == 0) {
            return 0;
        }
        return static_cast<long long>(subspace_sum_dim(arr.spaces, mask)) - 1;
    });
}

/// Multiplicity-free class of the image variety inside P^{m_1} x..x P^{m_n}:
/// coefficient 1 exactly on the base-polytope lattice points of li_rank
/// (dimension form), stored in codimension form. Requires the W_i to span
/// the ambient space and each factor to fit: m_i >= dim W_i - 1.
inline MultiClass li_multidegree(const SubspaceArrangement& arr, const std::vector<int>& dims) {
    if (static_cast<int>(dims.size()) != arr.n()) {
        throw std::invalid_argument("li_multidegree: need one target dimension per factor");
    }
    if (!arr.spans_ambient()) {
        throw std::invalid_argument("li_multidegree: subspaces do not span the ambient space");
    }
    for (int i = 0; i < arr.n(); ++i) {
        if (dims[i] < 1 || dims[i] + 1 < static_cast<int>(arr.spaces[i].dim())) {
            throw std::invalid_argument("li_multidegree: factor P^{m_i} too small for W_i");
        }
    }
    const RankFunction f = li_rank(arr);
    const LatticePointSet support_dim = base_polytope_points(f);
    MultiClass cls{Ambient(arr.n(), dims)};
    for (const auto& a : support_dim.points) {
        std::vector<int> t(arr.n());
        for (int i = 0; i < arr.n(); ++i) {
            t[i] = dims[i] - a[i];
        }
        cls.add_term(t, 1);
    }
    return cls;
}

namespace detail {

/// splitmix64 finalizer; derives independent per-trial, per-factor streams
/// from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/*
 * Randomized geometric multidegree of the image variety at a point a on the
 * dimension slice (sum a_i = D - 1).
 *
 * A generic hyperplane pulled back from factor i imposes <v, h> = 0 with h a
 * generic vector of W_i (orthogonal projection is self-adjoint). Stacking
 * a_i such vectors per factor gives D-1 linear conditions; the multidegree
 * is 1 iff they cut a single point of P(V) that the rational map is actually
 * defined at. Hence the witness test is two-part:
 *
 *   (1) the stacked (D-1) x D matrix has full rank D-1, and
 *   (2) the kernel vector has nonzero projection onto every W_i
 *       (otherwise the would-be intersection point lies in the base locus
 *       and the sections miss the variety).
 *
 * Without (2) the count is wrong: two sections from the same 2-plane in Q^3
 * cut the point orthogonal to it, where the map is undefined. A witness
 * passing both parts certifies the answer 1 for every generic choice, so a
 * single successful trial decides; failures only ever report a false 0,
 * with probability O(D^2/p) per trial.
 */
inline int generic_selection_coefficient(const SubspaceArrangement& arr,
                                         const std::vector<int>& a, std::uint64_t seed,
                                         int trials = 3) {
    const int n = arr.n();
    const std::size_t ambient = arr.ambient_dim;
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument("generic_selection_coefficient: point length mismatch");
    }
    long long sum = 0;
    for (int v : a) {
        if (v < 0) {
            throw std::invalid_argument("generic_selection_coefficient: negative exponent");
        }
        sum += v;
    }
    if (sum != static_cast<long long>(ambient) - 1) {
        throw std::invalid_argument(
            "generic_selection_coefficient: exponents must sum to ambient dimension - 1");
    }
    for (int i = 0; i < n; ++i) {
        if (a[i] > static_cast<int>(arr.spaces[i].dim())) {
            return 0; // more sections than W_i has independent directions
        }
    }

    for (int trial = 0; trial < trials; ++trial) {
        RationalMatrix stacked(0, ambient);
        for (int i = 0; i < n; ++i) {
            const RationalMatrix vecs = random_field_vectors(
                arr.spaces[i], static_cast<std::size_t>(a[i]),
                detail::mix_seed(seed, static_cast<std::uint64_t>(trial) * 64 + i));
            for (std::size_t r = 0; r < vecs.rows(); ++r) {
                stacked.append_row(vecs.row(r));
            }
        }
        if (rank(stacked) != ambient - 1) {
            continue;
        }
        const RationalMatrix kernel = nullspace(stacked);
        const std::vector<Rational> point = kernel.row(0);
        bool defined_everywhere = true;
        for (int i = 0; i < n && defined_everywhere; ++i) {
            bool projects = false;
            const RationalMatrix& basis = arr.spaces[i].basis();
            for (std::size_t r = 0; r < basis.rows() && !projects; ++r) {
                projects = dot(basis.row(r), point) != 0;
            }
            defined_everywhere = projects;
        }
        if (defined_everywhere) {
            return 1;
        }
    }
    return 0;
}

struct LiftResult {
    SubspaceArrangement arrangement;
    std::vector<int> zero_columns; // 1-based indices of zero input columns
};

/// One extra coordinate e_0 appended; W_i = span{v_i, e_0}. The li_rank of
/// the result is the linear matroid rank of the columns. Zero columns give
/// the one-dimensional W_i = span{e_0} and are reported back.
inline LiftResult ardila_boocher_lift(const RationalMatrix& columns) {
    const std::size_t d = columns.rows();
    const std::size_t n = columns.cols();
    if (n == 0) {
        throw std::invalid_argument("ardila_boocher_lift: no columns");
    }
    std::vector<Subspace> spaces;
    std::vector<int> zero_columns;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        std::vector<Rational> v(d + 1, Rational(0));
        for (std::size_t r = 0; r < d; ++r) {
            v[r] = columns(r, j);
            zero = zero && v[r] == 0;
        }
        std::vector<Rational> e0(d + 1, Rational(0));
        e0[d] = 1;

        RationalMatrix basis(0, d + 1);
        if (zero) {
            zero_columns.push_back(static_cast<int>(j) + 1);
        } else {
            basis.append_row(v);
        }
        basis.append_row(e0);
        spaces.emplace_back(std::move(basis));
    }
    return LiftResult{SubspaceArrangement(d + 1, std::move(spaces)), std::move(zero_columns)};
}

struct MatroidEmbedding {
    RationalMatrix vectors;              // ground set E' of the linear matroid, one row each
    std::vector<std::vector<int>> sigma; // sigma(i) as 0-based row indices into vectors
};

/// Embeds the arrangement's polymatroid into a linear matroid: dim W_i
/// random spanning vectors per factor, sigma(i) = that block. The defining
/// property r(I) = rank(union of blocks) is verified for every subset;
/// sampling is retried on the (astronomically rare) degenerate draw.
inline MatroidEmbedding embed_in_matroid(const SubspaceArrangement& arr, std::uint64_t seed) {
    const RankFunction f = rank_function(arr);
    for (int attempt = 0; attempt < 3; ++attempt) {
        MatroidEmbedding emb;
        emb.vectors = RationalMatrix(0, arr.ambient_dim);
        bool spanning = true;
        for (int i = 0; i < arr.n() && spanning; ++i) {
            const Subspace& w = arr.spaces[i];
            const RationalMatrix vecs = random_field_vectors(
                w, w.dim(), detail::mix_seed(seed, static_cast<std::uint64_t>(attempt) * 64 + i));
            spanning = rank(vecs) == w.dim();
            std::vector<int> block;
            for (std::size_t r = 0; r < vecs.rows(); ++r) {
                block.push_back(static_cast<int>(emb.vectors.rows()));
                emb.vectors.append_row(vecs.row(r));
            }
            emb.sigma.push_back(std::move(block));
        }
        if (!spanning) {
            continue;
        }

        bool consistent = true;
        for (std::uint32_t mask = 0; mask <= f.full_mask() && consistent; ++mask) {
            RationalMatrix stacked(0, arr.ambient_dim);
            for (int i = 0; i < arr.n(); ++i) {
                if ((mask >> i) & 1u) {
                    for (int row : emb.sigma[i]) {
                        stacked.append_row(emb.vectors.row(static_cast<std::size_t>(row)));
                    }
                }
            }
            consistent = static_cast<long long>(rank(stacked)) == f[mask];
        }
        if (consistent) {
            return emb;
        }
    }
    throw std::runtime_error("embed_in_matroid: sampler failed to reproduce the rank function");
}

// Text format: header "arrangement n D", then per subspace a block
// "dim k" followed by k basis rows of D entries each.

inline SubspaceArrangement parse_arrangement(std::istream& in) {
    std::istringstream header(next_data_line(in));
    std::string tag;
    long long n = 0;
    long long ambient = 0;
    if (!(header >> tag >> n >> ambient) || tag != "arrangement" || n < 1 || ambient < 1) {
        throw ParseError("arrangement header must be 'arrangement n D'");
    }
    std::vector<Subspace> spaces;
    for (long long i = 0; i < n; ++i) {
        std::istringstream dim_line(next_data_line(in));
        std::string dim_tag;
        long long k = -1;
        if (!(dim_line >> dim_tag >> k) || dim_tag != "dim" || k < 0 || k > ambient) {
            throw ParseError("subspace block " + std::to_string(i + 1) +
                             " must start with 'dim k'");
        }
        RationalMatrix basis = parse_matrix_body(in, static_cast<std::size_t>(k),
                                                 static_cast<std::size_t>(ambient));
        try {
            spaces.emplace_back(static_cast<std::size_t>(ambient), std::move(basis));
        } catch (const std::invalid_argument& e) {
            throw ParseError("subspace block " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return SubspaceArrangement(static_cast<std::size_t>(ambient), std::move(spaces));
}

inline void print_arrangement(std::ostream& out, const SubspaceArrangement& arr) {
    out << "arrangement " << arr.n() << ' ' << arr.ambient_dim << '\n';
    for (const auto& w : arr.spaces) {
        out << "dim " << w.dim() << '\n';
        for (std::size_t r = 0; r < w.dim(); ++r) {
            for (std::size_t c = 0; c < w.ambient_dim(); ++c) {
                out << (c ? " " : "") << rational_to_string(w.basis()(r, c));
            }
            out << '\n';
        }
    }
}

inline std::string arrangement_to_string(const SubspaceArrangement& arr) {
    std::ostringstream out;
    print_arrangement(out, arr);
    return out.str();
}

} // namespace mdeg
