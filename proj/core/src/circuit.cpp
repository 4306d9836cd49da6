#include "detsieve/circuit.hpp"

#include <algorithm>
#include <map>

namespace detsieve {

std::size_t ArithCircuit::add_input(std::size_t var) {
    gates_.push_back({GateKind::Input, var, 0, 0, 0});
    arity_ = std::max(arity_, var + 1);
    output_ = gates_.size() - 1;
    return output_;
}

std::size_t ArithCircuit::add_const(FieldElem c) {
    if (c.ctx != ctx_) throw UsageError("circuit constant from mismatched context");
    gates_.push_back({GateKind::Const, 0, c.bits, 0, 0});
    output_ = gates_.size() - 1;
    return output_;
}

std::size_t ArithCircuit::add_add(std::size_t a, std::size_t b) {
    check_gate(a);
    check_gate(b);
    gates_.push_back({GateKind::Add, 0, 0, a, b});
    output_ = gates_.size() - 1;
    return output_;
}

std::size_t ArithCircuit::add_mul(std::size_t a, std::size_t b) {
    check_gate(a);
    check_gate(b);
    gates_.push_back({GateKind::Mul, 0, 0, a, b});
    output_ = gates_.size() - 1;
    return output_;
}

void ArithCircuit::set_output(std::size_t gate) {
    check_gate(gate);
    output_ = gate;
}

void ArithCircuit::check_gate(std::size_t g) const {
    if (g >= gates_.size()) throw UsageError("circuit gate reference out of range");
}

std::size_t ArithCircuit::degree_bound() const {
    std::vector<std::size_t> deg(gates_.size(), 0);
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
            case GateKind::Input: deg[i] = 1; break;
            case GateKind::Const: deg[i] = 0; break;
            case GateKind::Add: deg[i] = std::max(deg[g.a], deg[g.b]); break;
            case GateKind::Mul: deg[i] = deg[g.a] + deg[g.b]; break;
        }
    }
    return gates_.empty() ? 0 : deg[output_];
}

bool ArithCircuit::is_skew() const {
    for (const Gate& g : gates_) {
        if (g.kind != GateKind::Mul) continue;
        if (gates_[g.a].kind != GateKind::Input && gates_[g.b].kind != GateKind::Input)
            return false;
    }
    return true;
}

FieldElem ArithCircuit::eval(std::span<const FieldElem> point) const {
    if (gates_.empty()) throw UsageError("evaluating an empty circuit");
    std::vector<FieldElem> val(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.kind) {
            case GateKind::Input:
                if (g.var >= point.size()) throw UsageError("circuit input beyond point arity");
                val[i] = point[g.var];
                break;
            case GateKind::Const: val[i] = {g.cbits, ctx_}; break;
            case GateKind::Add: val[i] = val[g.a] + val[g.b]; break;
            case GateKind::Mul: val[i] = val[g.a] * val[g.b]; break;
        }
    }
    return val[output_];
}

PolyOracle ArithCircuit::as_oracle(bool homogeneous) const {
    auto self = *this;  // value copy keeps the oracle self-contained
    return PolyOracle(*ctx_, arity(), degree_bound(), homogeneous,
                      [self = std::move(self)](std::span<const FieldElem> x) {
                          return self.eval(x);
                      });
}

bool check_strong_monotonicity(const ArithCircuit& c, std::size_t n_limit) {
    if (c.arity() > n_limit || c.arity() > 30)
        throw CapacityError("strong-monotonicity checker capped at " + std::to_string(n_limit) +
                            " variables");
    const FieldCtx& F = c.ctx();
    using Family = std::map<std::uint32_t, FieldElem>;  // support mask -> coefficient
    const auto& gates = c.gates();
    std::vector<Family> fam(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto& g = gates[i];
        switch (g.kind) {
            case ArithCircuit::GateKind::Input:
                fam[i][1u << g.var] = F.one();
                break;
            case ArithCircuit::GateKind::Const:
                if (g.cbits != 0) fam[i][0] = {g.cbits, &F};
                break;
            case ArithCircuit::GateKind::Add: {
                fam[i] = fam[g.a];
                for (const auto& [mask, coeff] : fam[g.b]) {
                    if (fam[i].count(mask)) return false;  // families collide
                    fam[i][mask] = coeff;
                }
                break;
            }
            case ArithCircuit::GateKind::Mul: {
                Family out;
                for (const auto& [ma, ca] : fam[g.a]) {
                    for (const auto& [mb, cb] : fam[g.b]) {
                        if (ma & mb) return false;  // non-multilinear product
                        std::uint32_t u = ma | mb;
                        if (out.count(u)) return false;  // duplicate union
                        out[u] = ca * cb;
                    }
                }
                fam[i] = std::move(out);
                break;
            }
        }
    }
    return true;
}

}  // namespace detsieve
