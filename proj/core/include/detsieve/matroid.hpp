#ifndef DETSIEVE_MATROID_HPP
#define DETSIEVE_MATROID_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detsieve/linalg.hpp"

namespace detsieve {

// Linear matroid: a k x n representation matrix plus one ground-set
// label per column. Immutable after construction.
class LinearMatroid {
 public:
    LinearMatroid() = default;
    LinearMatroid(Matrix rep, std::vector<std::string> ground);

    const Matrix& rep() const { return rep_; }
    const FieldCtx& ctx() const { return rep_.ctx(); }
    const std::vector<std::string>& ground() const { return ground_; }
    std::size_t ground_size() const { return ground_.size(); }
    std::size_t rank_hint() const { return rep_.rows(); }

    std::size_t col_of(const std::string& label) const;
    std::vector<std::size_t> cols_of(std::span<const std::string> labels) const;

    std::size_t rank_of_cols(std::span<const std::size_t> cols) const;
    bool is_independent_cols(std::span<const std::size_t> cols) const;
    bool is_independent(std::span<const std::string> labels) const;

 private:
    Matrix rep_;
    std::vector<std::string> ground_;
};

// Column association for multi-column sieving: variable i of an oracle
// is bound to the pairwise-disjoint column group groups[i] (possibly
// empty, in which case the variable is unconstrained).
struct ColumnAssoc {
    std::vector<std::vector<std::size_t>> groups;

    static ColumnAssoc identity(std::size_t n);

    std::size_t arity() const { return groups.size(); }
    std::size_t weight(std::size_t var) const { return groups[var].size(); }
    void validate(std::size_t column_count) const;
};

// Standard constructions (Vandermonde uniform, block-diagonal partition,
// incidence graphic, randomized transversal).
LinearMatroid uniform_matroid(const FieldCtx& ctx, std::size_t n, std::size_t k,
                              std::vector<std::string> labels = {});
LinearMatroid partition_matroid(const FieldCtx& ctx,
                                const std::vector<std::vector<std::string>>& classes,
                                const std::vector<std::size_t>& capacities);
LinearMatroid graphic_matroid(const FieldCtx& ctx, std::size_t n_vertices,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              std::vector<std::string> labels = {});
LinearMatroid cographic_matroid(const FieldCtx& ctx, std::size_t n_vertices,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                std::vector<std::string> labels = {});
// Each ground element is linked to a subset of the hidden set [n_hidden].
LinearMatroid transversal_matroid(const FieldCtx& ctx, std::size_t n_hidden,
                                  const std::vector<std::vector<std::size_t>>& links,
                                  std::vector<std::string> labels, Rng& rng);

// Transforms. Randomized ones fail with probability <= poly(n)/|F| per draw.
LinearMatroid dual(const LinearMatroid& m);
LinearMatroid truncate(const LinearMatroid& m, std::size_t k, Rng& rng);
LinearMatroid extend(const LinearMatroid& m, std::size_t d, Rng& rng);
LinearMatroid direct_sum(const LinearMatroid& a, const LinearMatroid& b);
LinearMatroid union_same_ground(const LinearMatroid& a, const LinearMatroid& b, Rng& rng);

}  // namespace detsieve

#endif
