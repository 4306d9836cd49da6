#ifndef DETSIEVE_POLY_ORACLE_HPP
#define DETSIEVE_POLY_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "detsieve/field.hpp"

namespace detsieve {

// Black-box multivariate polynomial: an evaluation function plus the
// metadata every transformer needs (arity, conservative degree bound,
// homogeneity flag). Copies share the evaluation counter, so counting
// works through arbitrarily nested transformers. Evaluation must be
// pure and reentrant.
class PolyOracle {
 public:
    using EvalFn = std::function<FieldElem(std::span<const FieldElem>)>;

    PolyOracle() = default;
    PolyOracle(const FieldCtx& ctx, std::size_t arity, std::size_t degree_bound, bool homogeneous,
               EvalFn fn) {
        auto impl = std::make_shared<Impl>();
        impl->ctx = &ctx;
        impl->arity = arity;
        impl->degree_bound = degree_bound;
        impl->homogeneous = homogeneous;
        impl->fn = std::move(fn);
        impl_ = std::move(impl);
    }

    FieldElem eval(std::span<const FieldElem> point) const {
        if (!impl_) throw UsageError("evaluating an empty oracle");
        if (point.size() != impl_->arity) throw UsageError("oracle arity mismatch");
        impl_->evals.fetch_add(1, std::memory_order_relaxed);
        return impl_->fn(point);
    }

    const FieldCtx& ctx() const { return *impl_->ctx; }
    std::size_t arity() const { return impl_->arity; }
    std::size_t degree_bound() const { return impl_->degree_bound; }
    bool homogeneous() const { return impl_->homogeneous; }
    bool valid() const { return impl_ != nullptr; }

    std::uint64_t eval_count() const { return impl_->evals.load(std::memory_order_relaxed); }
    void reset_eval_count() const { impl_->evals.store(0, std::memory_order_relaxed); }

 private:
    struct Impl {
        const FieldCtx* ctx = nullptr;
        std::size_t arity = 0;
        std::size_t degree_bound = 0;
        bool homogeneous = false;
        EvalFn fn;
        mutable std::atomic<std::uint64_t> evals{0};
    };
    std::shared_ptr<Impl> impl_;
};

// Oracle for the coefficient of z^t where z is the variable at index
// `var` of p, of degree at most `z_degree`. The returned oracle keeps
// p's arity; whatever the caller passes at slot `var` is ignored.
// Each evaluation costs (z_degree + 1) evaluations of p.
PolyOracle coeff_extract(const PolyOracle& p, std::size_t var, std::size_t z_degree, std::size_t t);

// Homogeneous-component extraction: scale variable i by z^weights[i]
// for a fresh z and take the coefficient of z^t. weights of all 1
// select the total-degree-t part. z_degree must bound the z-degree of
// the scaled polynomial (e.g. degree_bound * max weight).
PolyOracle coeff_extract_scaled(const PolyOracle& p, std::vector<std::size_t> weights,
                                std::size_t z_degree, std::size_t t);

// Inclusion-exclusion sieve: keeps exactly the monomials divisible by
// the product of the listed variables. 2^|vars| inner evaluations per
// evaluation.
PolyOracle subset_sieve(const PolyOracle& p, std::vector<std::size_t> vars);

// Pin the listed variables to zero (used by solver self-reduction).
PolyOracle restrict_zero(const PolyOracle& p, std::vector<std::size_t> vars);

// Pointwise sum of oracles over a shared context and arity.
PolyOracle oracle_sum(std::vector<PolyOracle> parts);

// Lagrange helper shared by the extraction transformers and the sieve:
// weights w_i with coeff_of_z_t(P) = sum_i w_i * P(points[i]).
std::vector<FieldElem> lagrange_coeff_weights(const FieldCtx& ctx,
                                              std::span<const FieldElem> points, std::size_t t);

}  // namespace detsieve

#endif
