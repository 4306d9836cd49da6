#ifndef DETSIEVE_SPARSE_POLY_HPP
#define DETSIEVE_SPARSE_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "detsieve/linalg.hpp"
#include "detsieve/poly_oracle.hpp"

namespace detsieve {

// Exact monomial-level polynomial for ground-truth testing. Terms are
// held in a sorted map from dense exponent vectors to coefficients; no
// zero coefficients are stored.
class SparsePoly {
 public:
    using Expo = std::vector<std::uint16_t>;
    static constexpr std::size_t kMaxTerms = 100000;

    SparsePoly() = default;
    SparsePoly(const FieldCtx& ctx, std::size_t arity) : ctx_(&ctx), arity_(arity) {}

    static SparsePoly constant(const FieldCtx& ctx, std::size_t arity, FieldElem c);
    static SparsePoly variable(const FieldCtx& ctx, std::size_t arity, std::size_t var);

    const FieldCtx& ctx() const { return *ctx_; }
    std::size_t arity() const { return arity_; }
    const std::map<Expo, std::uint64_t>& terms() const { return terms_; }
    std::size_t n_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const;

    void add_term(const Expo& e, FieldElem c);
    FieldElem coeff(const Expo& e) const;

    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator*(const SparsePoly& other) const;
    SparsePoly scaled(FieldElem c) const;

    FieldElem eval(std::span<const FieldElem> x) const;
    PolyOracle as_oracle(bool homogeneous = false) const;

    // one monomial per line, exponents then coefficient, sorted
    std::string dump_sorted() const;

 private:
    const FieldCtx* ctx_ = nullptr;
    std::size_t arity_ = 0;
    std::map<Expo, std::uint64_t> terms_;
};

// Division-free routes used by the testing oracle so they share no code
// with the elimination path.
SparsePoly det_cofactor(const FieldCtx& ctx, const std::vector<std::vector<SparsePoly>>& m);
FieldElem det_cofactor_numeric(const Matrix& m);
// Pfaffian straight from the perfect-matching definition (char 2).
SparsePoly pfaffian_matchings(const FieldCtx& ctx, const std::vector<std::vector<SparsePoly>>& m);

}  // namespace detsieve

#endif
