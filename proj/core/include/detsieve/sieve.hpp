#ifndef DETSIEVE_SIEVE_HPP
#define DETSIEVE_SIEVE_HPP

#include <optional>
#include <string>

#include "detsieve/matroid.hpp"
#include "detsieve/poly_oracle.hpp"

namespace detsieve {

struct SieveOptions {
    std::uint64_t seed = 1;
    // 0 selects the per-field default: 1 trial when the field has at
    // least 2^63 elements, 20 trials at the calibration fields.
    std::size_t trials = 0;
    unsigned threads = 1;
    // Skip the degree-matching interpolation. Defaults to true exactly
    // when the oracle is homogeneous, every variable is bound to one
    // column and the degree bound equals the matroid rank; solvers that
    // know their polynomial is weight-homogeneous may force it.
    std::optional<bool> weight_matched;
};

struct SieveReport {
    bool decision = false;
    std::uint64_t trials = 0;
    std::uint64_t p_evals = 0;
    double failure_bound = 0.0;  // per-trial false-negative bound
    std::uint64_t seed = 0;

    std::string to_json() const;
};

double basis_failure_bound(const FieldCtx& ctx, std::size_t k);
double odd_failure_bound(const FieldCtx& ctx, std::size_t degree, std::size_t k);
std::size_t default_trials(const FieldCtx& ctx);

// Detects a multilinear monomial m of p whose associated column union
// over supp(m) is a basis of the matroid represented by A. Per trial:
// 2^k oracle evaluations when the weight is matched, times the
// interpolation factor otherwise. No false positives; per-trial
// false-negative probability at most 2k/|F|.
SieveReport basis_sieve(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                        const SieveOptions& opts = {});
SieveReport basis_sieve(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                        const SieveOptions& opts = {});

// Detects a monomial with a subset S of its odd support such that the
// column union over S is a basis. (d+1) * 2^k oracle evaluations per
// trial for unit weights; failure at most (d+k)/|F|.
SieveReport odd_sieve(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                      const SieveOptions& opts = {});
SieveReport odd_sieve(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                      const SieveOptions& opts = {});

// Oracle-transformer form of basis sieving: returns the sieved
// polynomial over the original variables, with this layer's auxiliary
// variables integrated out at a fixed random point. Composable; each
// evaluation costs one basis-sieve trial's worth of p evaluations.
PolyOracle sieve_transform(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                           Rng& rng, const SieveOptions& opts = {});
PolyOracle sieve_transform(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                           Rng& rng, const SieveOptions& opts = {});

}  // namespace detsieve

#endif
