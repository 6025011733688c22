#pragma once

#include <cstddef>
#include <vector>

#include "partalg/errors.hpp"

namespace partalg {

// Dense row-major matrix over a field context F.
template <class F>
struct Mat {
    using Elt = typename F::Elt;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Elt> data;

    Mat() = default;
    Mat(size_t r, size_t c, Elt fill) : rows(r), cols(c), data(r * c, fill) {}
    static Mat zero(const F& f, size_t r, size_t c) { return Mat(r, c, f.zero()); }
    static Mat identity(const F& f, size_t n) {
        Mat m = zero(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Elt& at(size_t r, size_t c) { return data[r * cols + c]; }
    const Elt& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

template <class F>
bool mat_eq(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t i = 0; i < a.data.size(); ++i)
        if (!f.eq(a.data[i], b.data[i])) return false;
    return true;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) throw error("matrix shape mismatch in multiply");
    Mat<F> out = Mat<F>::zero(f, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (f.is_zero(aik)) continue;
            for (size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
        }
    }
    return out;
}

template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw error("matrix shape mismatch in add");
    Mat<F> out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = f.add(out.data[i], b.data[i]);
    return out;
}

template <class F>
Mat<F> mat_scale(const F& f, const Mat<F>& a, const typename F::Elt& c) {
    Mat<F> out = a;
    for (auto& v : out.data) v = f.mul(v, c);
    return out;
}

template <class F>
Mat<F> mat_transpose(const Mat<F>& a) {
    Mat<F> out;
    out.rows = a.cols;
    out.cols = a.rows;
    out.data.resize(a.data.size());
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

template <class F>
std::vector<typename F::Elt> mat_vec(const F& f, const Mat<F>& a,
                                     const std::vector<typename F::Elt>& v) {
    if (a.cols != v.size()) throw error("matrix/vector shape mismatch");
    std::vector<typename F::Elt> out(a.rows, f.zero());
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j)
            if (!f.is_zero(a.at(i, j))) out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
    return out;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class F>
std::vector<size_t> rref(const F& f, Mat<F>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        auto piv_inv = f.inv(m.at(row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            auto factor = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
size_t mat_rank(const F& f, Mat<F> m) {
    return rref(f, m).size();
}

// Basis of the right nullspace {v : m v = 0}, one row per basis vector.
template <class F>
Mat<F> nullspace(const F& f, Mat<F> m) {
    auto pivots = rref(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> basis = Mat<F>::zero(f, free_cols.size(), m.cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(k, fc) = f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(k, pivots[r]) = f.neg(m.at(r, fc));
    }
    return basis;
}

// Incremental echelon basis of a growing subspace of F^dim (rows kept in
// reduced form). add() reports whether the vector enlarged the space, and can
// hand back the expansion coefficients of the input over the current basis.
template <class F>
class EchelonSpace {
public:
    EchelonSpace(const F& f, size_t dim) : f_(&f), dim_(dim) {}

    size_t dim_space() const { return rows_.size(); }
    size_t ambient_dim() const { return dim_; }
    const std::vector<std::vector<typename F::Elt>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Reduce v against the basis. Returns true (and absorbs the remainder as a
    // new basis row) if v was independent. Rows are kept mutually reduced, so
    // expansion over the final basis is a pivot read (see expand()).
    bool add(std::vector<typename F::Elt> v) {
        const F& f = *f_;
        for (size_t r = 0; r < rows_.size(); ++r) {
            const auto c = v[pivots_[r]];
            if (f.is_zero(c)) continue;
            for (size_t j = 0; j < dim_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[r][j]));
        }
        size_t pivot = dim_;
        for (size_t j = 0; j < dim_; ++j)
            if (!f.is_zero(v[j])) {
                pivot = j;
                break;
            }
        if (pivot == dim_) return false;
        auto scale = f.inv(v[pivot]);
        for (size_t j = 0; j < dim_; ++j) v[j] = f.mul(v[j], scale);
        // Back-substitute into existing rows to keep the basis reduced.
        for (size_t r = 0; r < rows_.size(); ++r) {
            const auto c = rows_[r][pivot];
            if (f.is_zero(c)) continue;
            for (size_t j = 0; j < dim_; ++j)
                rows_[r][j] = f.sub(rows_[r][j], f.mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    // Coordinates of w over the (reduced) basis; throws if w is outside.
    std::vector<typename F::Elt> expand(const std::vector<typename F::Elt>& w) const {
        const F& f = *f_;
        std::vector<typename F::Elt> coeffs(rows_.size(), f.zero());
        std::vector<typename F::Elt> rem = w;
        for (size_t r = 0; r < rows_.size(); ++r) {
            coeffs[r] = rem[pivots_[r]];
            if (f.is_zero(coeffs[r])) continue;
            for (size_t j = 0; j < dim_; ++j)
                rem[j] = f.sub(rem[j], f.mul(coeffs[r], rows_[r][j]));
        }
        for (size_t j = 0; j < dim_; ++j)
            if (!f.is_zero(rem[j])) throw error("vector lies outside the spanned subspace");
        return coeffs;
    }

    bool contains(std::vector<typename F::Elt> v) const {
        const F& f = *f_;
        for (size_t r = 0; r < rows_.size(); ++r) {
            const auto c = v[pivots_[r]];
            if (f.is_zero(c)) continue;
            for (size_t j = 0; j < dim_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[r][j]));
        }
        for (size_t j = 0; j < dim_; ++j)
            if (!f.is_zero(v[j])) return false;
        return true;
    }

    Mat<F> basis_matrix() const {
        Mat<F> out = Mat<F>::zero(*f_, rows_.size(), dim_);
        for (size_t r = 0; r < rows_.size(); ++r)
            for (size_t j = 0; j < dim_; ++j) out.at(r, j) = rows_[r][j];
        return out;
    }

private:
    const F* f_;
    size_t dim_;
    std::vector<std::vector<typename F::Elt>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace partalg
