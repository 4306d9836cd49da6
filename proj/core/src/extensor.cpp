#include "detsieve/extensor.hpp"

namespace detsieve {

Extensor Extensor::scalar(const FieldCtx& ctx, std::size_t k, FieldElem c) {
    Extensor e(ctx, k);
    e.set_coeff(0, c);
    return e;
}

Extensor Extensor::from_vector(const FieldCtx& ctx, std::span<const FieldElem> v) {
    Extensor e(ctx, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e.set_coeff(std::uint32_t{1} << i, v[i]);
    return e;
}

Extensor Extensor::operator+(const Extensor& other) const {
    if (ctx_ != other.ctx_ || k_ != other.k_) throw UsageError("extensor shape mismatch");
    Extensor out(*ctx_, k_);
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        out.coeffs_[m] = ctx_->add({coeffs_[m], ctx_}, {other.coeffs_[m], ctx_}).bits;
    return out;
}

Extensor Extensor::scaled(FieldElem c) const {
    Extensor out(*ctx_, k_);
    for (std::size_t m = 0; m < coeffs_.size(); ++m)
        out.coeffs_[m] = ctx_->mul({coeffs_[m], ctx_}, c).bits;
    return out;
}

namespace {

// Parity of |{(i,j) : i in I, j in J, i > j}|: the sign of the merge
// permutation.
bool merge_sign_negative(std::uint32_t I, std::uint32_t J) {
    bool neg = false;
    std::uint32_t j = J;
    while (j) {
        std::uint32_t bit = j & (~j + 1);
        std::uint32_t above = I & ~(bit | (bit - 1));
        if (__builtin_popcount(above) & 1) neg = !neg;
        j ^= bit;
    }
    return neg;
}

}  // namespace

Extensor wedge(const Extensor& a, const Extensor& b) {
    if (&a.ctx() != &b.ctx() || a.dim() != b.dim()) throw UsageError("wedge dimension mismatch");
    const FieldCtx& F = a.ctx();
    std::size_t n = std::size_t{1} << a.dim();
    Extensor out(F, a.dim());
    for (std::uint32_t ma = 0; ma < n; ++ma) {
        FieldElem ca = a.coeff(ma);
        if (ca.is_zero()) continue;
        for (std::uint32_t mb = 0; mb < n; ++mb) {
            if (ma & mb) continue;
            FieldElem cb = b.coeff(mb);
            if (cb.is_zero()) continue;
            FieldElem term = ca * cb;
            if (!F.char2() && merge_sign_negative(ma, mb)) term = F.neg(term);
            std::uint32_t u = ma | mb;
            out.set_coeff(u, out.coeff(u) + term);
        }
    }
    return out;
}

Extensor lift_vector(const FieldCtx& ctx, std::span<const FieldElem> v) {
    std::size_t k = v.size();
    std::vector<FieldElem> v1(2 * k, ctx.zero()), v2(2 * k, ctx.zero());
    for (std::size_t i = 0; i < k; ++i) {
        v1[i] = v[i];
        v2[k + i] = v[i];
    }
    return wedge(Extensor::from_vector(ctx, v1), Extensor::from_vector(ctx, v2));
}

namespace {

// Shared DAG evaluation over the exterior algebra. `inputs` holds the
// extensor substituted for each variable. Gate outputs are freed as
// soon as their last consumer has fired.
Extensor eval_circuit_extensor(const ArithCircuit& c, std::size_t dim,
                               const std::vector<Extensor>& inputs) {
    const FieldCtx& F = c.ctx();
    const auto& gates = c.gates();
    std::vector<std::size_t> consumers(gates.size(), 0);
    for (const auto& g : gates) {
        if (g.kind == ArithCircuit::GateKind::Add || g.kind == ArithCircuit::GateKind::Mul) {
            ++consumers[g.a];
            ++consumers[g.b];
        }
    }
    ++consumers[c.output()];
    std::vector<Extensor> value(gates.size());
    auto consume = [&](std::size_t g) -> Extensor {
        if (--consumers[g] == 0) return std::move(value[g]);
        return value[g];
    };
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto& g = gates[i];
        switch (g.kind) {
            case ArithCircuit::GateKind::Input:
                value[i] = inputs[g.var];
                break;
            case ArithCircuit::GateKind::Const:
                value[i] = Extensor::scalar(F, dim, {g.cbits, &F});
                break;
            case ArithCircuit::GateKind::Add: {
                Extensor a = consume(g.a), b = consume(g.b);
                value[i] = a + b;
                break;
            }
            case ArithCircuit::GateKind::Mul: {
                // fixed (left, right) input ordering at products
                Extensor a = consume(g.a), b = consume(g.b);
                value[i] = wedge(a, b);
                break;
            }
        }
    }
    return value[c.output()];
}

}  // namespace

ExtensorDecision eval_monotone(const ArithCircuit& c, const Matrix& A, const ColumnAssoc& assoc,
                               Rng& rng) {
    const FieldCtx& F = c.ctx();
    if (!(F == A.ctx())) throw UsageError("circuit and matroid field contexts differ");
    if (!c.monotone_certified) {
        bool ok = false;
        try {
            ok = check_strong_monotonicity(c);
        } catch (const CapacityError&) {
            throw ContractError("circuit is neither certified strongly monotone nor checkable");
        }
        if (!ok) throw ContractError("circuit fails the strong-monotonicity conditions");
    }
    assoc.validate(A.cols());
    if (assoc.arity() != c.arity())
        throw UsageError("column association arity must match the circuit");
    std::size_t k = A.rows();
    std::vector<Extensor> inputs(c.arity());
    for (std::size_t i = 0; i < c.arity(); ++i) {
        Extensor e = Extensor::scalar(F, k, F.random(rng));
        for (std::size_t q : assoc.groups[i]) {
            std::vector<FieldElem> col(k);
            for (std::size_t r = 0; r < k; ++r) col[r] = A.at(r, q);
            e = wedge(e, Extensor::from_vector(F, col));
        }
        inputs[i] = std::move(e);
    }
    Extensor r = eval_circuit_extensor(c, k, inputs);
    ExtensorDecision out;
    out.top_coefficient = r.top();
    out.decision = !out.top_coefficient.is_zero();
    out.failure_bound = std::min(1.0, 2.0 * static_cast<double>(k) / F.order_approx());
    return out;
}

ExtensorDecision eval_lifted(const ArithCircuit& c, const Matrix& A, const ColumnAssoc& assoc,
                             Rng& rng) {
    const FieldCtx& F = c.ctx();
    if (!(F == A.ctx())) throw UsageError("circuit and matroid field contexts differ");
    assoc.validate(A.cols());
    if (assoc.arity() != c.arity())
        throw UsageError("column association arity must match the circuit");
    std::size_t k = A.rows();
    std::vector<Extensor> inputs(c.arity());
    for (std::size_t i = 0; i < c.arity(); ++i) {
        Extensor e = Extensor::scalar(F, 2 * k, F.random(rng));
        for (std::size_t q : assoc.groups[i]) {
            std::vector<FieldElem> col(k);
            for (std::size_t r = 0; r < k; ++r) col[r] = A.at(r, q);
            e = wedge(e, lift_vector(F, col));
        }
        inputs[i] = std::move(e);
    }
    Extensor r = eval_circuit_extensor(c, 2 * k, inputs);
    ExtensorDecision out;
    out.top_coefficient = r.top();
    out.decision = !out.top_coefficient.is_zero();
    out.failure_bound = std::min(1.0, 2.0 * static_cast<double>(k) / F.order_approx());
    return out;
}

}  // namespace detsieve
