#ifndef DEPTHLAB_FPLINALG_HPP
#define DEPTHLAB_FPLINALG_HPP

#include <cstdint>
#include <vector>

#include "depthlab/field.hpp"

namespace depthlab {

// Dense row-major matrix over F_p. This is the inner-loop workhorse behind
// graded-piece dimension counts and the degree-by-degree oracle.
class FpMatrix {
public:
    FpMatrix() : rows_(0), cols_(0), p_(3) {}
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    bool operator==(const FpMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && p_ == rhs.p_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

// Reduced row echelon form, in place. Returns the pivot column of each
// pivot row, in row order. Pivot choice (first nonzero row scanning down)
// is identical in both implementations, so their outputs agree bit for bit;
// the parallel kernel only distributes the row eliminations.
std::vector<std::size_t> rref_serial(FpMatrix& m);
std::vector<std::size_t> rref_parallel(FpMatrix& m);

// Dispatches to the parallel kernel for matrices worth the fork overhead.
std::vector<std::size_t> rref(FpMatrix& m);

std::size_t rank(FpMatrix m);

// Basis of {x : A x = 0} as rows of the result.
std::vector<std::vector<std::uint32_t>> kernel_basis(const FpMatrix& a);

// Incremental row-space tracker: membership tests and canonical complements
// for graded pieces. Rows are kept rref-normalized.
class RowSpan {
public:
    explicit RowSpan(std::uint32_t p, std::size_t width) : ops_{p}, width_(width) {}

    // Reduces v against the span; if a residue is left, absorbs it and
    // returns true. v is consumed.
    bool insert(std::vector<std::uint32_t> v);
    // Residue of v after reduction (zero vector iff v is in the span).
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;
    bool contains(const std::vector<std::uint32_t>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    FpOps ops_;
    std::size_t width_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace depthlab

#endif
