#pragma once

#include "errors.hpp"
#include "gauss_rat.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace koszul {

struct GaussInt {
    mpz_class re, im;

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
};

inline GaussInt exact_div(const GaussInt& a, const GaussInt& d) {
    mpz_class n = d.re * d.re + d.im * d.im;
    internal_check(n != 0, "division by zero in fraction-free elimination");
    mpz_class r = a.re * d.re + a.im * d.im;
    mpz_class m = a.im * d.re - a.re * d.im;
    internal_check(r % n == 0 && m % n == 0,
                   "nonexact division in fraction-free elimination");
    return {r / n, m / n};
}

class MatQ {
public:
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRat& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    const GaussRat& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

    std::vector<GaussRat> row(std::size_t r) const {
        return std::vector<GaussRat>(d_.begin() + long(r * cols_),
                                     d_.begin() + long((r + 1) * cols_));
    }
    std::vector<GaussRat> col(std::size_t c) const {
        std::vector<GaussRat> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussRat> d_;
};

// Bareiss one-step fraction-free elimination over the Gaussian integers
// after clearing row denominators; every interior division is exact.
inline std::size_t rank_fraction_free(const MatQ& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l(1);
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class lr, li;
            mpz_lcm(lr.get_mpz_t(), l.get_mpz_t(),
                    m.at(r, c).re().get_den().get_mpz_t());
            mpz_lcm(li.get_mpz_t(), lr.get_mpz_t(),
                    m.at(r, c).im().get_den().get_mpz_t());
            l = li;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const GaussRat& q = m.at(r, c);
            a[r][c] = {q.re().get_num() * (l / q.re().get_den()),
                       q.im().get_num() * (l / q.im().get_den())};
        }
    }
    GaussInt prev{1, 0};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[rank][c] * a[i][j] - a[i][c] * a[rank][j], prev);
            a[i][c] = {0, 0};
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

// Maintains a row-echelon spanning set over the rationals; add() reports
// whether the vector enlarged the span.  Feeding vectors in batches gives a
// whole profile of ranks from a single elimination.
class IncrementalRank {
public:
    bool add(std::vector<GaussRat> v) {
        for (const auto& [pc, row] : rows_) {
            if (pc >= v.size()) break;
            if (v[pc].is_zero()) continue;
            GaussRat f = v[pc];
            for (std::size_t k = pc; k < v.size(); ++k) v[k] -= f * row[k];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        GaussRat inv = v[p].inverse();
        for (std::size_t k = p; k < v.size(); ++k) v[k] *= inv;
        auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
            [](const auto& row, std::size_t key) { return row.first < key; });
        rows_.insert(it, {p, std::move(v)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, std::vector<GaussRat>>> rows_;
};

// Basis of the right null space by Gauss-Jordan elimination.
inline std::vector<std::vector<GaussRat>> kernel_basis(MatQ m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m.at(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        GaussRat inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GaussRat f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back({r, c});
        ++r;
    }
    std::vector<bool> is_pivot_col(cols, false);
    for (const auto& [pr, pc] : pivots) is_pivot_col[pc] = true;
    std::vector<std::vector<GaussRat>> out;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot_col[fc]) continue;
        std::vector<GaussRat> v(cols);
        v[fc] = GaussRat(1);
        for (const auto& [pr, pc] : pivots) v[pc] = -m.at(pr, fc);
        out.push_back(std::move(v));
    }
    return out;
}

}
