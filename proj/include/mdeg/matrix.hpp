#pragma once

#include "mdeg/rational.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mdeg {

/// Dense matrix over the rationals, row-major. Entries are exact; the whole
/// library refuses floating point so that rank decisions are never fuzzy.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw std::invalid_argument("entry count does not match rows*cols");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const RationalMatrix&) const = default;

    std::vector<Rational> row(std::size_t r) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    void append_row(const std::vector<Rational>& row) {
        if (cols_ == 0 && rows_ == 0) {
            cols_ = row.size();
        }
        if (row.size() != cols_) {
            throw std::invalid_argument("row length does not match column count");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
        ++rows_;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

/*
 * Rank by fraction-free (Bareiss) elimination.
 *
 * Rows are first scaled to integers (multiplying a row by the lcm of its
 * denominators does not change the rank), then eliminated with the one-step
 * Bareiss update
 *
 *     a[i][j] <- (a[i][j]*pivot - a[i][c]*a[r][j]) / prev
 *
 * where prev is the previous pivot. Every intermediate entry is a minor of
 * the scaled matrix, so the division is exact and entry growth stays
 * polynomial instead of the exponential blowup of naive integer elimination.
 * Zero columns are skipped, so rank-deficient and rectangular inputs work.
 */
inline std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }

    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            scale = lcm(scale, denominator(m(r, c)));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational e = m(r, c) * scale;
            a[r][c] = numerator(e);
        }
    }

    std::size_t rk = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pivot_row = rk;
        while (pivot_row < rows && a[pivot_row][col] == 0) {
            ++pivot_row;
        }
        if (pivot_row == rows) {
            continue;
        }
        std::swap(a[rk], a[pivot_row]);

        const Integer pivot = a[rk][col];
        for (std::size_t i = rk + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[rk][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

/// Basis of the right nullspace, one vector per row. Plain Gauss-Jordan;
/// inputs here are small enough that fraction growth is a non-issue.
inline RationalMatrix nullspace(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::vector<std::vector<Rational>> a(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        a[r] = m.row(r);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t pr = rk;
        while (pr < rows && a[pr][col] == 0) {
            ++pr;
        }
        if (pr == rows) {
            continue;
        }
        std::swap(a[rk], a[pr]);
        const Rational inv = a[rk][col];
        for (std::size_t j = col; j < cols; ++j) {
            a[rk][j] /= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != rk && a[i][col] != 0) {
                const Rational f = a[i][col];
                for (std::size_t j = col; j < cols; ++j) {
                    a[i][j] -= f * a[rk][j];
                }
            }
        }
        pivot_col.push_back(col);
        ++rk;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) {
        is_pivot[c] = true;
    }

    RationalMatrix basis(0, cols);
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[pivot_col[i]] = -a[i][free_col];
        }
        basis.append_row(v);
    }
    return basis;
}

// Text format: header "rows cols", then one row per line, entries as
// integers or "p/q". '#' starts a comment line.

inline RationalMatrix parse_matrix_body(std::istream& in, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::istringstream row_in(next_data_line(in));
        for (std::size_t c = 0; c < cols; ++c) {
            std::string token;
            if (!(row_in >> token)) {
                throw ParseError("matrix row " + std::to_string(r + 1) + " is short");
            }
            m(r, c) = parse_rational(token);
        }
        std::string extra;
        if (row_in >> extra) {
            throw ParseError("matrix row " + std::to_string(r + 1) + " has trailing data");
        }
    }
    return m;
}

inline RationalMatrix parse_matrix(std::istream& in) {
    std::istringstream header(next_data_line(in));
    long long rows = -1;
    long long cols = -1;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0) {
        throw ParseError("matrix header must be 'rows cols'");
    }
    return parse_matrix_body(in, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

inline void print_matrix(std::ostream& out, const RationalMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << rational_to_string(m(r, c));
        }
        out << '\n';
    }
}

inline std::string matrix_to_string(const RationalMatrix& m) {
    std::ostringstream out;
    print_matrix(out, m);
    return out.str();
}

} // namespace mdeg
