#include "detsieve/matroid.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace detsieve {

LinearMatroid::LinearMatroid(Matrix rep, std::vector<std::string> ground)
    : rep_(std::move(rep)), ground_(std::move(ground)) {
    if (rep_.cols() != ground_.size())
        throw UsageError("matroid ground size must equal representation column count");
    std::set<std::string> seen(ground_.begin(), ground_.end());
    if (seen.size() != ground_.size()) throw UsageError("duplicate ground-set labels");
}

std::size_t LinearMatroid::col_of(const std::string& label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return i;
    throw UsageError("unknown ground-set label: " + label);
}

std::vector<std::size_t> LinearMatroid::cols_of(std::span<const std::string> labels) const {
    std::vector<std::size_t> cols;
    cols.reserve(labels.size());
    for (const auto& l : labels) cols.push_back(col_of(l));
    return cols;
}

std::size_t LinearMatroid::rank_of_cols(std::span<const std::size_t> cols) const {
    return rep_.submatrix_cols(cols).rank();
}

bool LinearMatroid::is_independent_cols(std::span<const std::size_t> cols) const {
    std::set<std::size_t> dedup(cols.begin(), cols.end());
    std::vector<std::size_t> unique(dedup.begin(), dedup.end());
    if (unique.size() != cols.size()) return false;
    return rank_of_cols(unique) == unique.size();
}

bool LinearMatroid::is_independent(std::span<const std::string> labels) const {
    return is_independent_cols(cols_of(labels));
}

ColumnAssoc ColumnAssoc::identity(std::size_t n) {
    ColumnAssoc a;
    a.groups.resize(n);
    for (std::size_t i = 0; i < n; ++i) a.groups[i] = {i};
    return a;
}

void ColumnAssoc::validate(std::size_t column_count) const {
    std::set<std::size_t> seen;
    for (const auto& g : groups) {
        for (std::size_t c : g) {
            if (c >= column_count) throw UsageError("column association index out of range");
            if (!seen.insert(c).second)
                throw UsageError("column association groups must be pairwise disjoint");
        }
    }
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

}  // namespace

LinearMatroid uniform_matroid(const FieldCtx& ctx, std::size_t n, std::size_t k,
                              std::vector<std::string> labels) {
    if (k > n) throw SpecError("uniform matroid rank exceeds ground size");
    if (!ctx.order_at_least(n + 1))
        throw CapacityError("field too small for a Vandermonde representation");
    if (labels.empty()) labels = default_labels(n);
    auto points = ctx.enumerate_points(n + 1);  // skip 0
    Matrix rep(ctx, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        FieldElem alpha = points[j + 1];
        FieldElem p = ctx.one();
        for (std::size_t i = 0; i < k; ++i) {
            rep.set(i, j, p);
            p = p * alpha;
        }
    }
    return LinearMatroid(std::move(rep), std::move(labels));
}

LinearMatroid partition_matroid(const FieldCtx& ctx,
                                const std::vector<std::vector<std::string>>& classes,
                                const std::vector<std::size_t>& capacities) {
    if (classes.size() != capacities.size())
        throw SpecError("partition matroid needs one capacity per class");
    std::size_t total_rows = 0, n = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (capacities[c] > classes[c].size())
            throw SpecError("partition matroid capacity exceeds class size");
        total_rows += capacities[c];
        n += classes[c].size();
    }
    Matrix rep(ctx, total_rows, n);
    std::vector<std::string> labels;
    labels.reserve(n);
    std::size_t row0 = 0, col0 = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::size_t sz = classes[c].size();
        if (!ctx.order_at_least(sz + 1))
            throw CapacityError("field too small for a Vandermonde representation");
        auto points = ctx.enumerate_points(sz + 1);
        for (std::size_t j = 0; j < sz; ++j) {
            FieldElem alpha = points[j + 1];
            FieldElem p = ctx.one();
            for (std::size_t i = 0; i < capacities[c]; ++i) {
                rep.set(row0 + i, col0 + j, p);
                p = p * alpha;
            }
            labels.push_back(classes[c][j]);
        }
        row0 += capacities[c];
        col0 += sz;
    }
    return LinearMatroid(std::move(rep), std::move(labels));
}

LinearMatroid graphic_matroid(const FieldCtx& ctx, std::size_t n_vertices,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              std::vector<std::string> labels) {
    if (labels.empty()) labels = default_labels(edges.size());
    Matrix rep(ctx, n_vertices, edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        auto [u, v] = edges[j];
        if (u >= n_vertices || v >= n_vertices) throw SpecError("graphic matroid edge out of range");
        if (u == v) continue;  // loop: zero column
        rep.set(u, j, ctx.one());
        rep.set(v, j, ctx.neg(ctx.one()));
    }
    return LinearMatroid(std::move(rep), std::move(labels));
}

LinearMatroid cographic_matroid(const FieldCtx& ctx, std::size_t n_vertices,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                std::vector<std::string> labels) {
    return dual(graphic_matroid(ctx, n_vertices, edges, std::move(labels)));
}

LinearMatroid transversal_matroid(const FieldCtx& ctx, std::size_t n_hidden,
                                  const std::vector<std::vector<std::size_t>>& links,
                                  std::vector<std::string> labels, Rng& rng) {
    if (labels.empty()) labels = default_labels(links.size());
    Matrix rep(ctx, n_hidden, links.size());
    for (std::size_t j = 0; j < links.size(); ++j) {
        for (std::size_t h : links[j]) {
            if (h >= n_hidden) throw SpecError("transversal matroid link out of range");
            rep.set(h, j, ctx.random_nonzero(rng));
        }
    }
    return LinearMatroid(std::move(rep), std::move(labels));
}

LinearMatroid dual(const LinearMatroid& m) {
    const FieldCtx& F = m.ctx();
    std::size_t n = m.ground_size();
    std::vector<std::size_t> pivots;
    Matrix R = m.rep().rref(&pivots);
    std::size_t r = pivots.size();
    // non-pivot columns index the dual's identity block
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_row(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
        is_pivot[pivots[i]] = true;
        pivot_row[pivots[i]] = i;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix B(F, n - r, n);
    for (std::size_t a = 0; a < free_cols.size(); ++a) {
        B.set(a, free_cols[a], F.one());
        for (std::size_t p : pivots) B.set(a, p, F.neg(R.at(pivot_row[p], free_cols[a])));
    }
    return LinearMatroid(std::move(B), m.ground());
}

LinearMatroid truncate(const LinearMatroid& m, std::size_t k, Rng& rng) {
    if (k == m.rep().rows()) return m;
    Matrix R = Matrix::random(m.ctx(), k, m.rep().rows(), rng);
    return LinearMatroid(R * m.rep(), m.ground());
}

LinearMatroid extend(const LinearMatroid& m, std::size_t d, Rng& rng) {
    Matrix extra = Matrix::random(m.ctx(), d, m.ground_size(), rng);
    return LinearMatroid(m.rep().vstack(extra), m.ground());
}

LinearMatroid direct_sum(const LinearMatroid& a, const LinearMatroid& b) {
    if (!(a.ctx() == b.ctx())) throw SpecError("direct sum across field contexts");
    const FieldCtx& F = a.ctx();
    std::size_t rows = a.rep().rows() + b.rep().rows();
    std::size_t cols = a.ground_size() + b.ground_size();
    Matrix rep(F, rows, cols);
    for (std::size_t i = 0; i < a.rep().rows(); ++i)
        for (std::size_t j = 0; j < a.ground_size(); ++j) rep.set(i, j, a.rep().at(i, j));
    for (std::size_t i = 0; i < b.rep().rows(); ++i)
        for (std::size_t j = 0; j < b.ground_size(); ++j)
            rep.set(a.rep().rows() + i, a.ground_size() + j, b.rep().at(i, j));
    std::vector<std::string> labels = a.ground();
    labels.insert(labels.end(), b.ground().begin(), b.ground().end());
    return LinearMatroid(std::move(rep), std::move(labels));
}

LinearMatroid union_same_ground(const LinearMatroid& a, const LinearMatroid& b, Rng& rng) {
    if (a.ground() != b.ground()) throw SpecError("matroid union requires identical grounds");
    const FieldCtx& F = a.ctx();
    std::size_t n = a.ground_size();
    Matrix top(F, a.rep().rows(), n), bottom(F, b.rep().rows(), n);
    for (std::size_t j = 0; j < n; ++j) {
        FieldElem sa = F.random_nonzero(rng);
        FieldElem sb = F.random_nonzero(rng);
        for (std::size_t i = 0; i < a.rep().rows(); ++i) top.set(i, j, a.rep().at(i, j) * sa);
        for (std::size_t i = 0; i < b.rep().rows(); ++i) bottom.set(i, j, b.rep().at(i, j) * sb);
    }
    return LinearMatroid(top.vstack(bottom), a.ground());
}

}  // namespace detsieve
