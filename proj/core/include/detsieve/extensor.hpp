#ifndef DETSIEVE_EXTENSOR_HPP
#define DETSIEVE_EXTENSOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "detsieve/circuit.hpp"
#include "detsieve/matroid.hpp"

namespace detsieve {

// Element of the exterior algebra Lambda(F^k): 2^k coefficients indexed
// by subsets of [k].
class Extensor {
 public:
    Extensor() = default;
    Extensor(const FieldCtx& ctx, std::size_t k)
        : ctx_(&ctx), k_(k), coeffs_(std::size_t{1} << k, 0) {
        if (k > 26) throw CapacityError("extensor dimension too large");
    }

    static Extensor scalar(const FieldCtx& ctx, std::size_t k, FieldElem c);
    static Extensor from_vector(const FieldCtx& ctx, std::span<const FieldElem> v);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t dim() const { return k_; }

    FieldElem coeff(std::uint32_t mask) const { return {coeffs_[mask], ctx_}; }
    void set_coeff(std::uint32_t mask, FieldElem v) {
        if (v.ctx != ctx_) throw UsageError("extensor coefficient from mismatched context");
        coeffs_[mask] = v.bits;
    }
    FieldElem top() const { return coeff((std::uint32_t{1} << k_) - 1); }

    Extensor operator+(const Extensor& other) const;
    Extensor scaled(FieldElem c) const;

 private:
    const FieldCtx* ctx_ = nullptr;
    std::size_t k_ = 0;
    std::vector<std::uint64_t> coeffs_;
};

// Bilinear extension of e_I ^ e_J = (-1)^{sigma(I,J)} e_{I u J}, zero on
// intersecting index sets.
Extensor wedge(const Extensor& a, const Extensor& b);

// Lift phi(v) = v1 ^ v2 with v1 = (v 0), v2 = (0 v) in F^{2k}.
Extensor lift_vector(const FieldCtx& ctx, std::span<const FieldElem> v);

struct ExtensorDecision {
    bool decision = false;
    FieldElem top_coefficient;
    double failure_bound = 0.0;
};

// Evaluates a strongly monotone circuit over Lambda(F^k) with
// x_i -> x_i' * wedge of the associated columns; decision is a nonzero
// e_[k] coefficient. Requires the construction certificate or a passing
// debug check.
ExtensorDecision eval_monotone(const ArithCircuit& c, const Matrix& A, const ColumnAssoc& assoc,
                               Rng& rng);

// Same over Lambda(F^{2k}) through the lift mapping; works for any
// circuit (intended for skew ones), at det^2 survival.
ExtensorDecision eval_lifted(const ArithCircuit& c, const Matrix& A, const ColumnAssoc& assoc,
                             Rng& rng);

}  // namespace detsieve

#endif
