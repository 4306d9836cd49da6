#include "detsieve/linalg.hpp"

namespace detsieve {

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
    return m;
}

Matrix Matrix::random(const FieldCtx& ctx, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(ctx, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, ctx.random(rng));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (ctx_ != rhs.ctx_) throw UsageError("matrix product across contexts");
    if (cols_ != rhs.rows_) throw UsageError("matrix product shape mismatch");
    Matrix out(*ctx_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            FieldElem x = at(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, out.at(i, j) + x * rhs.at(l, j));
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(*ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::submatrix_cols(std::span<const std::size_t> cols) const {
    Matrix out(*ctx_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw UsageError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, cols[j]));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (ctx_ != below.ctx_ || cols_ != below.cols_) throw UsageError("vstack shape mismatch");
    Matrix out(*ctx_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(rows_ + i, j, below.at(i, j));
    return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (ctx_ != right.ctx_ || rows_ != right.rows_) throw UsageError("hstack shape mismatch");
    Matrix out(*ctx_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        for (std::size_t j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right.at(i, j));
    }
    return out;
}

DetRank Matrix::det_rank() const {
    Matrix w = *this;
    const FieldCtx& F = *ctx_;
    std::size_t r = 0;
    bool negate = false;
    FieldElem diag_prod = F.one();
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols_; ++j) {
                FieldElem t = w.at(pivot, j);
                w.set(pivot, j, w.at(r, j));
                w.set(r, j, t);
            }
            negate = !negate;
        }
        FieldElem p = w.at(r, c);
        diag_prod = diag_prod * p;
        FieldElem pinv = p.inv();
        for (std::size_t i = r + 1; i < rows_; ++i) {
            FieldElem factor = w.at(i, c);
            if (factor.is_zero()) continue;
            factor = factor * pinv;
            for (std::size_t j = c; j < cols_; ++j)
                w.set(i, j, w.at(i, j) - factor * w.at(r, j));
        }
        ++r;
    }
    DetRank out;
    out.rank = r;
    if (rows_ == cols_) {
        if (r < rows_) {
            out.det = F.zero();
        } else {
            out.det = (negate && !F.char2()) ? F.neg(diag_prod) : diag_prod;
        }
    }
    return out;
}

FieldElem Matrix::det() const {
    if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
    return *det_rank().det;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix w = *this;
    const FieldCtx& F = *ctx_;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols_; ++j) {
                FieldElem t = w.at(pivot, j);
                w.set(pivot, j, w.at(r, j));
                w.set(r, j, t);
            }
        }
        FieldElem pinv = w.at(r, c).inv();
        for (std::size_t j = 0; j < cols_; ++j) w.set(r, j, w.at(r, j) * pinv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            FieldElem factor = w.at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                w.set(i, j, w.at(i, j) - factor * w.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return w;
}

FieldElem Matrix::pfaffian_char2() const {
    const FieldCtx& F = *ctx_;
    if (rows_ != cols_) throw StructureError("pfaffian of a non-square matrix");
    if (!F.char2()) throw UsageError("pfaffian_char2 requires a binary-extension context");
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) throw StructureError("alternating matrix must have zero diagonal");
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) throw StructureError("alternating matrix must be symmetric");
    }
    if (rows_ % 2 == 1) return F.zero();
    return F.sqrt(det());
}

}  // namespace detsieve
