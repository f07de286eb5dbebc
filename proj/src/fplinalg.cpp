#include "depthlab/fplinalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace depthlab {

namespace {

// Shared skeleton: the `Eliminate` callable clears column `col` from every
// row except `prow` using the normalized pivot row.
template <typename Eliminate>
std::vector<std::size_t> rref_impl(FpMatrix& m, Eliminate eliminate) {
    const FpOps ops{m.modulus()};
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
        std::size_t sel = prow;
        while (sel < rows && m.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != prow) {
            for (std::size_t c = col; c < cols; ++c) std::swap(m.at(prow, c), m.at(sel, c));
        }
        const std::uint32_t inv = ops.inv(m.at(prow, col));
        if (inv != 1) {
            std::uint32_t* pr = m.row(prow);
            for (std::size_t c = col; c < cols; ++c) pr[c] = ops.mul(pr[c], inv);
        }
        eliminate(m, prow, col, ops);
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

void eliminate_rows_serial(FpMatrix& m, std::size_t prow, std::size_t col, const FpOps& ops) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::uint32_t* pr = m.row(prow);
    for (std::size_t r = 0; r < rows; ++r) {
        if (r == prow) continue;
        const std::uint32_t f = m.at(r, col);
        if (f == 0) continue;
        std::uint32_t* rr = m.row(r);
        for (std::size_t c = col; c < cols; ++c)
            rr[c] = ops.sub(rr[c], ops.mul(f, pr[c]));
    }
}

void eliminate_rows_parallel(FpMatrix& m, std::size_t prow, std::size_t col, const FpOps& ops) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::uint32_t* pr = m.row(prow);
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < rows; ++r) {
        if (r == prow) continue;
        const std::uint32_t f = m.at(r, col);
        if (f == 0) continue;
        std::uint32_t* rr = m.row(r);
        for (std::size_t c = col; c < cols; ++c)
            rr[c] = ops.sub(rr[c], ops.mul(f, pr[c]));
    }
}

} // namespace

std::vector<std::size_t> rref_serial(FpMatrix& m) {
    return rref_impl(m, eliminate_rows_serial);
}

std::vector<std::size_t> rref_parallel(FpMatrix& m) {
    return rref_impl(m, eliminate_rows_parallel);
}

std::vector<std::size_t> rref(FpMatrix& m) {
    if (m.rows() >= 64 && m.cols() >= 64) return rref_parallel(m);
    return rref_serial(m);
}

std::size_t rank(FpMatrix m) {
    return rref(m).size();
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& a) {
    FpMatrix m = a;
    const FpOps ops{m.modulus()};
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = ops.neg(m.at(r, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpan::insert(std::vector<std::uint32_t> v) {
    v = reduce(std::move(v));
    std::size_t piv = width_;
    for (std::size_t i = 0; i < width_; ++i) {
        if (v[i] != 0) {
            piv = i;
            break;
        }
    }
    if (piv == width_) return false;
    const std::uint32_t inv = ops_.inv(v[piv]);
    if (inv != 1)
        for (auto& x : v) x = ops_.mul(x, inv);
    // keep existing rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t f = rows_[r][piv];
        if (f == 0) continue;
        for (std::size_t c = 0; c < width_; ++c)
            rows_[r][c] = ops_.sub(rows_[r][c], ops_.mul(f, v[c]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

std::vector<std::uint32_t> RowSpan::reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint32_t f = v[pivots_[r]];
        if (f == 0) continue;
        const auto& row = rows_[r];
        for (std::size_t c = 0; c < width_; ++c) v[c] = ops_.sub(v[c], ops_.mul(f, row[c]));
    }
    return v;
}

bool RowSpan::contains(const std::vector<std::uint32_t>& v) const {
    auto r = reduce(v);
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

} // namespace depthlab
