#ifndef DETSIEVE_CIRCUIT_HPP
#define DETSIEVE_CIRCUIT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "detsieve/poly_oracle.hpp"

namespace detsieve {

// DAG of input/constant/add/multiply gates, fan-in 2. Used where the
// extensor path needs gate-level access to a polynomial.
class ArithCircuit {
 public:
    enum class GateKind { Input, Const, Add, Mul };
    struct Gate {
        GateKind kind;
        std::size_t var = 0;       // Input
        std::uint64_t cbits = 0;   // Const (raw field bits)
        std::size_t a = 0, b = 0;  // Add/Mul operands
    };

    explicit ArithCircuit(const FieldCtx& ctx) : ctx_(&ctx) {}

    std::size_t add_input(std::size_t var);
    std::size_t add_const(FieldElem c);
    std::size_t add_add(std::size_t a, std::size_t b);
    std::size_t add_mul(std::size_t a, std::size_t b);
    void set_output(std::size_t gate);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t output() const { return output_; }
    std::size_t arity() const { return arity_; }
    std::size_t degree_bound() const;

    // Structural: every product gate has an input gate as one argument.
    bool is_skew() const;

    // Builders that construct cancellation-free circuits set this.
    bool monotone_certified = false;

    FieldElem eval(std::span<const FieldElem> point) const;
    PolyOracle as_oracle(bool homogeneous = false) const;

 private:
    void check_gate(std::size_t g) const;

    const FieldCtx* ctx_;
    std::vector<Gate> gates_;
    std::size_t output_ = 0;
    std::size_t arity_ = 0;
};

// Exponential debug check of the three strong-monotonicity conditions
// (multilinear gate outputs, disjoint families at sums, distinct unions
// at products). Tracks the full support family per gate, so the arity
// is capped.
bool check_strong_monotonicity(const ArithCircuit& c, std::size_t n_limit = 20);

}  // namespace detsieve

#endif
