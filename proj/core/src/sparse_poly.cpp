#include "detsieve/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

namespace detsieve {

SparsePoly SparsePoly::constant(const FieldCtx& ctx, std::size_t arity, FieldElem c) {
    SparsePoly p(ctx, arity);
    p.add_term(Expo(arity, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(const FieldCtx& ctx, std::size_t arity, std::size_t var) {
    if (var >= arity) throw UsageError("sparse polynomial variable out of range");
    SparsePoly p(ctx, arity);
    Expo e(arity, 0);
    e[var] = 1;
    p.add_term(e, ctx.one());
    return p;
}

std::size_t SparsePoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void SparsePoly::add_term(const Expo& e, FieldElem c) {
    if (c.ctx != ctx_) throw UsageError("sparse polynomial coefficient context mismatch");
    if (e.size() != arity_) throw UsageError("exponent vector arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c.is_zero()) return;
        if (terms_.size() >= kMaxTerms) throw CapacityError("sparse polynomial exceeds term cap");
        terms_.emplace(e, c.bits);
        return;
    }
    FieldElem sum = ctx_->add({it->second, ctx_}, c);
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum.bits;
}

FieldElem SparsePoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ctx_->zero() : FieldElem{it->second, ctx_};
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    if (ctx_ != other.ctx_ || arity_ != other.arity_)
        throw UsageError("sparse polynomial shape mismatch");
    SparsePoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, {c, ctx_});
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
    if (ctx_ != other.ctx_ || arity_ != other.arity_)
        throw UsageError("sparse polynomial shape mismatch");
    SparsePoly out(*ctx_, arity_);
    Expo e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < arity_; ++i) {
                unsigned s = static_cast<unsigned>(ea[i]) + eb[i];
                if (s > 60000) throw CapacityError("exponent overflow");
                e[i] = static_cast<std::uint16_t>(s);
            }
            out.add_term(e, FieldElem{ca, ctx_} * FieldElem{cb, ctx_});
        }
    }
    return out;
}

SparsePoly SparsePoly::scaled(FieldElem c) const {
    SparsePoly out(*ctx_, arity_);
    for (const auto& [e, v] : terms_) out.add_term(e, FieldElem{v, ctx_} * c);
    return out;
}

FieldElem SparsePoly::eval(std::span<const FieldElem> x) const {
    if (x.size() != arity_) throw UsageError("sparse polynomial arity mismatch");
    FieldElem acc = ctx_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElem term{c, ctx_};
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i]) term = term * ctx_->pow(x[i], e[i]);
        acc = acc + term;
    }
    return acc;
}

PolyOracle SparsePoly::as_oracle(bool homogeneous) const {
    auto self = *this;
    std::size_t deg = total_degree();
    return PolyOracle(*ctx_, arity_, deg, homogeneous,
                      [self = std::move(self)](std::span<const FieldElem> x) {
                          return self.eval(x);
                      });
}

std::string SparsePoly::dump_sorted() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << " : " << FieldElem{c, ctx_}.to_hex() << '\n';
    }
    return os.str();
}

SparsePoly det_cofactor(const FieldCtx& ctx, const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return SparsePoly::constant(ctx, 0, ctx.one());
    std::size_t arity = m[0][0].arity();
    // Laplace expansion along the first remaining row, recursing on
    // live column masks.
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    struct Rec {
        const FieldCtx& ctx;
        const std::vector<std::vector<SparsePoly>>& m;
        std::size_t arity;
        SparsePoly run(std::size_t row, std::vector<std::size_t>& cols) {
            if (cols.empty()) return SparsePoly::constant(ctx, arity, ctx.one());
            SparsePoly acc(ctx, arity);
            for (std::size_t idx = 0; idx < cols.size(); ++idx) {
                std::size_t c = cols[idx];
                if (m[row][c].is_zero()) continue;
                std::vector<std::size_t> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != idx) rest.push_back(cols[j]);
                SparsePoly sub = run(row + 1, rest);
                SparsePoly term = m[row][c] * sub;
                if (idx % 2 == 1 && !ctx.char2()) term = term.scaled(ctx.neg(ctx.one()));
                acc = acc + term;
            }
            return acc;
        }
    } rec{ctx, m, arity};
    return rec.run(0, cols);
}

FieldElem det_cofactor_numeric(const Matrix& m) {
    const FieldCtx& F = m.ctx();
    std::size_t n = m.rows();
    if (m.cols() != n) throw UsageError("determinant of a non-square matrix");
    if (n == 0) return F.one();
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    struct Rec {
        const FieldCtx& F;
        const Matrix& m;
        FieldElem run(std::size_t row, std::vector<std::size_t>& cols) {
            if (cols.empty()) return F.one();
            FieldElem acc = F.zero();
            for (std::size_t idx = 0; idx < cols.size(); ++idx) {
                FieldElem pivot = m.at(row, cols[idx]);
                if (pivot.is_zero()) continue;
                std::vector<std::size_t> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != idx) rest.push_back(cols[j]);
                FieldElem term = pivot * run(row + 1, rest);
                if (idx % 2 == 1 && !F.char2()) term = F.neg(term);
                acc = acc + term;
            }
            return acc;
        }
    } rec{F, m};
    return rec.run(0, cols);
}

SparsePoly pfaffian_matchings(const FieldCtx& ctx, const std::vector<std::vector<SparsePoly>>& m) {
    if (!ctx.char2()) throw UsageError("matching-sum pfaffian implemented for characteristic 2");
    std::size_t n = m.size();
    std::size_t arity = n == 0 ? 0 : m[0][0].arity();
    if (n % 2 == 1) return SparsePoly(ctx, arity);
    if (n == 0) return SparsePoly::constant(ctx, 0, ctx.one());
    // sum over perfect matchings of [n]; signs vanish in char 2
    SparsePoly acc(ctx, arity);
    std::vector<std::size_t> unmatched(n);
    for (std::size_t i = 0; i < n; ++i) unmatched[i] = i;
    struct Rec {
        const FieldCtx& ctx;
        const std::vector<std::vector<SparsePoly>>& m;
        SparsePoly* acc;
        std::size_t arity;
        void run(std::vector<std::size_t>& rest, const SparsePoly& partial) {
            if (rest.empty()) {
                *acc = *acc + partial;
                return;
            }
            std::size_t u = rest[0];
            for (std::size_t idx = 1; idx < rest.size(); ++idx) {
                std::size_t v = rest[idx];
                if (m[u][v].is_zero()) continue;
                std::vector<std::size_t> next;
                for (std::size_t j = 1; j < rest.size(); ++j)
                    if (j != idx) next.push_back(rest[j]);
                run(next, partial * m[u][v]);
            }
        }
    } rec{ctx, m, &acc, arity};
    SparsePoly one = SparsePoly::constant(ctx, arity, ctx.one());
    rec.run(unmatched, one);
    return acc;
}

}  // namespace detsieve
