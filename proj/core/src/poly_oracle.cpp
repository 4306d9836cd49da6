#include "detsieve/poly_oracle.hpp"

#include <utility>

namespace detsieve {

std::vector<FieldElem> lagrange_coeff_weights(const FieldCtx& ctx,
                                              std::span<const FieldElem> points, std::size_t t) {
    std::size_t n = points.size();
    if (t >= n) throw UsageError("coefficient degree exceeds interpolation point count");
    // N(z) = prod_j (z - z_j), coefficients low-to-high
    std::vector<FieldElem> full(n + 1, ctx.zero());
    full[0] = ctx.one();
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = deg + 1; i-- > 0;) {
            FieldElem shifted = i > 0 ? full[i - 1] : ctx.zero();
            full[i] = shifted - full[i] * points[j];
        }
        full[deg + 1] = ctx.one();
        ++deg;
    }
    std::vector<FieldElem> weights(n, ctx.zero());
    std::vector<FieldElem> quotient(n, ctx.zero());
    for (std::size_t i = 0; i < n; ++i) {
        // synthetic division of N by (z - z_i): quotient degree n-1
        FieldElem carry = full[n];
        for (std::size_t d = n; d-- > 0;) {
            quotient[d] = carry;
            carry = full[d] + carry * points[i];
        }
        // denominator: prod_{j != i} (z_i - z_j) = quotient evaluated at z_i
        FieldElem denom = ctx.zero();
        FieldElem pw = ctx.one();
        for (std::size_t d = 0; d < n; ++d) {
            denom = denom + quotient[d] * pw;
            pw = pw * points[i];
        }
        weights[i] = quotient[t] * denom.inv();
    }
    return weights;
}

PolyOracle coeff_extract(const PolyOracle& p, std::size_t var, std::size_t z_degree,
                         std::size_t t) {
    const FieldCtx& F = p.ctx();
    if (var >= p.arity()) throw UsageError("coeff_extract variable index out of range");
    if (t > z_degree) {
        // coefficient above the degree bound is identically zero
        return PolyOracle(F, p.arity(), 0, false,
                          [&F](std::span<const FieldElem>) { return F.zero(); });
    }
    if (!F.order_at_least(z_degree + 1))
        throw CapacityError("field too small to interpolate the tracked degree");
    auto points = F.enumerate_points(z_degree + 1);
    auto weights = lagrange_coeff_weights(F, points, t);
    std::size_t arity = p.arity();
    std::size_t deg = p.degree_bound();
    return PolyOracle(F, arity, deg, false,
                      [p, var, points, weights, &F](std::span<const FieldElem> x) {
                          std::vector<FieldElem> point(x.begin(), x.end());
                          FieldElem acc = F.zero();
                          for (std::size_t i = 0; i < points.size(); ++i) {
                              point[var] = points[i];
                              acc = acc + weights[i] * p.eval(point);
                          }
                          return acc;
                      });
}

PolyOracle coeff_extract_scaled(const PolyOracle& p, std::vector<std::size_t> weights_in,
                                std::size_t z_degree, std::size_t t) {
    const FieldCtx& F = p.ctx();
    if (weights_in.size() != p.arity())
        throw UsageError("per-variable weight list must match oracle arity");
    if (t > z_degree) {
        return PolyOracle(F, p.arity(), 0, false,
                          [&F](std::span<const FieldElem>) { return F.zero(); });
    }
    if (!F.order_at_least(z_degree + 1))
        throw CapacityError("field too small to interpolate the tracked degree");
    auto points = F.enumerate_points(z_degree + 1);
    auto lagrange = lagrange_coeff_weights(F, points, t);
    std::size_t arity = p.arity();
    return PolyOracle(
        F, arity, p.degree_bound(), false,
        [p, w = std::move(weights_in), points, lagrange, &F](std::span<const FieldElem> x) {
            std::size_t arity = x.size();
            std::vector<FieldElem> point(arity, F.zero());
            FieldElem acc = F.zero();
            for (std::size_t i = 0; i < points.size(); ++i) {
                for (std::size_t v = 0; v < arity; ++v)
                    point[v] = w[v] == 0 ? x[v] : x[v] * F.pow(points[i], w[v]);
                acc = acc + lagrange[i] * p.eval(point);
            }
            return acc;
        });
}

PolyOracle subset_sieve(const PolyOracle& p, std::vector<std::size_t> vars) {
    const FieldCtx& F = p.ctx();
    for (std::size_t v : vars)
        if (v >= p.arity()) throw UsageError("subset_sieve variable index out of range");
    if (vars.size() >= 63) throw CapacityError("subset_sieve over more than 62 variables");
    return PolyOracle(F, p.arity(), p.degree_bound(), p.homogeneous(),
                      [p, vars = std::move(vars), &F](std::span<const FieldElem> x) {
                          std::vector<FieldElem> point(x.begin(), x.end());
                          FieldElem acc = F.zero();
                          std::uint64_t subsets = 1ULL << vars.size();
                          for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                              for (std::size_t i = 0; i < vars.size(); ++i)
                                  point[vars[i]] = (mask >> i) & 1ULL ? F.zero() : x[vars[i]];
                              FieldElem term = p.eval(point);
                              bool odd = __builtin_parityll(mask);
                              acc = acc + (odd && !F.char2() ? F.neg(term) : term);
                          }
                          return acc;
                      });
}

PolyOracle restrict_zero(const PolyOracle& p, std::vector<std::size_t> vars) {
    const FieldCtx& F = p.ctx();
    for (std::size_t v : vars)
        if (v >= p.arity()) throw UsageError("restrict_zero variable index out of range");
    return PolyOracle(F, p.arity(), p.degree_bound(), p.homogeneous(),
                      [p, vars = std::move(vars), &F](std::span<const FieldElem> x) {
                          std::vector<FieldElem> point(x.begin(), x.end());
                          for (std::size_t v : vars) point[v] = F.zero();
                          return p.eval(point);
                      });
}

PolyOracle oracle_sum(std::vector<PolyOracle> parts) {
    if (parts.empty()) throw UsageError("oracle_sum of nothing");
    const FieldCtx& F = parts.front().ctx();
    std::size_t arity = parts.front().arity();
    std::size_t deg = 0;
    for (const auto& q : parts) {
        if (q.arity() != arity) throw UsageError("oracle_sum arity mismatch");
        deg = std::max(deg, q.degree_bound());
    }
    return PolyOracle(F, arity, deg, false,
                      [parts = std::move(parts), &F](std::span<const FieldElem> x) {
                          FieldElem acc = F.zero();
                          for (const auto& q : parts) acc = acc + q.eval(x);
                          return acc;
                      });
}

}  // namespace detsieve
