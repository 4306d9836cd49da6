#ifndef DETSIEVE_LINALG_HPP
#define DETSIEVE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "detsieve/field.hpp"

namespace detsieve {

struct DetRank {
    std::optional<FieldElem> det;  // present only for square inputs
    std::size_t rank = 0;
};

// Dense row-major matrix over a field context. Value-semantic; all
// operations are pure.
class Matrix {
 public:
    Matrix() = default;
    Matrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
        : ctx_(&ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const FieldCtx& ctx, std::size_t n);
    static Matrix random(const FieldCtx& ctx, std::size_t rows, std::size_t cols, Rng& rng);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem at(std::size_t i, std::size_t j) const { return {a_[i * cols_ + j], ctx_}; }
    void set(std::size_t i, std::size_t j, FieldElem v) {
        if (v.ctx != ctx_) throw UsageError("matrix entry from mismatched context");
        a_[i * cols_ + j] = v.bits;
    }

    Matrix operator*(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix submatrix_cols(std::span<const std::size_t> cols) const;
    Matrix vstack(const Matrix& below) const;
    Matrix hstack(const Matrix& right) const;

    // Gaussian elimination; first nonzero entry scanning down the column
    // is the pivot. Determinant reported only when square.
    DetRank det_rank() const;
    std::size_t rank() const { return det_rank().rank; }
    FieldElem det() const;

    // Reduced row echelon form; pivot column indices reported in order.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    // Pfaffian of a char-2 alternating matrix (zero diagonal, symmetric),
    // computed as sqrt(det). Odd dimension yields zero.
    FieldElem pfaffian_char2() const;

 private:
    const FieldCtx* ctx_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> a_;
};

}  // namespace detsieve

#endif
