#include "detsieve/sieve.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace detsieve {

namespace {

constexpr std::uint64_t kTagBasis = 0xb1;
constexpr std::uint64_t kTagOdd = 0x0dd;
constexpr std::uint64_t kTagTransform = 0x7f0;

struct Binding {
    std::vector<std::size_t> used_cols;            // concatenated groups
    std::vector<std::pair<std::size_t, std::size_t>> var_range;  // into used_cols
    std::vector<std::size_t> gamma;
    std::size_t gamma_max = 0;
    std::size_t total_weight = 0;
};

Binding bind(const ColumnAssoc& assoc, const Matrix& A, std::size_t arity) {
    if (assoc.arity() != arity)
        throw UsageError("column association arity must match the oracle");
    assoc.validate(A.cols());
    Binding b;
    b.gamma.resize(arity);
    b.var_range.resize(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        std::size_t begin = b.used_cols.size();
        for (std::size_t c : assoc.groups[i]) b.used_cols.push_back(c);
        b.var_range[i] = {begin, b.used_cols.size()};
        b.gamma[i] = assoc.groups[i].size();
        b.gamma_max = std::max(b.gamma_max, b.gamma[i]);
        b.total_weight += b.gamma[i];
    }
    return b;
}

enum class Mode { Basis, Odd, Transform };

// One full subset sum over the y variables, walking masks in gray-code
// order so that flipping a single y only touches each used column once.
// `zpoints`/`lagrange` empty means the weight-matched path (no
// interpolation). x2 is the x'' vector of odd sieving.
FieldElem subset_sum(const PolyOracle& p, const Matrix& A, const Binding& b, Mode mode,
                     std::span<const FieldElem> x, std::span<const FieldElem> x2,
                     std::span<const FieldElem> y, std::span<const FieldElem> zpoints,
                     std::span<const FieldElem> lagrange, std::uint64_t mask_lo,
                     std::uint64_t mask_hi) {
    const FieldCtx& F = p.ctx();
    std::size_t k = A.rows();
    std::size_t arity = p.arity();
    std::size_t npoints = zpoints.size();

    // zpow[t][i] = zpoints[t]^gamma[i]
    std::vector<std::vector<FieldElem>> zpow(npoints);
    for (std::size_t t = 0; t < npoints; ++t) {
        zpow[t].resize(arity);
        for (std::size_t i = 0; i < arity; ++i) zpow[t][i] = F.pow(zpoints[t], b.gamma[i]);
    }

    auto gray = [](std::uint64_t v) { return v ^ (v >> 1); };

    // linear forms for the first mask of this chunk
    std::vector<FieldElem> forms(b.used_cols.size(), F.zero());
    std::uint64_t mask = gray(mask_lo);
    for (std::size_t pos = 0; pos < b.used_cols.size(); ++pos) {
        FieldElem acc = F.zero();
        for (std::size_t j = 0; j < k; ++j)
            if (!((mask >> j) & 1ULL)) acc = acc + y[j] * A.at(j, b.used_cols[pos]);
        forms[pos] = acc;
    }

    std::vector<FieldElem> inputs(arity);
    std::vector<FieldElem> L(arity);
    FieldElem total = F.zero();
    const bool char2 = F.char2();
    for (std::uint64_t idx = mask_lo; idx < mask_hi; ++idx) {
        if (idx != mask_lo) {
            std::uint64_t bit = static_cast<std::uint64_t>(__builtin_ctzll(idx));
            mask = gray(idx);
            bool now_zero = (mask >> bit) & 1ULL;
            for (std::size_t pos = 0; pos < b.used_cols.size(); ++pos) {
                FieldElem delta = y[bit] * A.at(bit, b.used_cols[pos]);
                forms[pos] = now_zero ? forms[pos] - delta : forms[pos] + delta;
            }
        }
        for (std::size_t i = 0; i < arity; ++i) {
            FieldElem prod = F.one();
            for (std::size_t posn = b.var_range[i].first; posn < b.var_range[i].second; ++posn)
                prod = prod * forms[posn];
            L[i] = prod;
        }
        FieldElem value = F.zero();
        if (npoints == 0) {
            for (std::size_t i = 0; i < arity; ++i) {
                inputs[i] = mode == Mode::Odd
                                ? x2[i] * (F.one() + x[i] * L[i])
                                : x[i] * L[i];
            }
            value = p.eval(inputs);
        } else {
            for (std::size_t t = 0; t < npoints; ++t) {
                for (std::size_t i = 0; i < arity; ++i) {
                    inputs[i] = mode == Mode::Odd
                                    ? x2[i] * (F.one() + zpow[t][i] * x[i] * L[i])
                                    : x[i] * zpow[t][i] * L[i];
                }
                value = value + lagrange[t] * p.eval(inputs);
            }
        }
        bool odd_mask = __builtin_parityll(mask);
        total = total + (odd_mask && !char2 ? F.neg(value) : value);
    }
    return total;
}

FieldElem subset_sum_threaded(const PolyOracle& p, const Matrix& A, const Binding& b, Mode mode,
                              std::span<const FieldElem> x, std::span<const FieldElem> x2,
                              std::span<const FieldElem> y, std::span<const FieldElem> zpoints,
                              std::span<const FieldElem> lagrange, unsigned threads) {
    const FieldCtx& F = p.ctx();
    std::size_t k = A.rows();
    if (k >= 62) throw CapacityError("sieve rank too large for subset enumeration");
    std::uint64_t subsets = 1ULL << k;
    if (threads <= 1 || subsets < 1024)
        return subset_sum(p, A, b, mode, x, x2, y, zpoints, lagrange, 0, subsets);
    unsigned nt = std::min<std::uint64_t>(threads, subsets / 256);
    std::vector<FieldElem> partial(nt, F.zero());
    std::vector<std::thread> pool;
    std::uint64_t chunk = subsets / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = t + 1 == nt ? subsets : lo + chunk;
        pool.emplace_back([&, t, lo, hi] {
            partial[t] = subset_sum(p, A, b, mode, x, x2, y, zpoints, lagrange, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    FieldElem total = F.zero();
    for (unsigned t = 0; t < nt; ++t) total = total + partial[t];
    return total;
}

bool weight_matched_default(const PolyOracle& p, const Binding& b, std::size_t k) {
    if (!p.homogeneous()) return false;
    for (std::size_t g : b.gamma)
        if (g != 1) return false;
    return p.degree_bound() == k;
}

struct ZGrid {
    std::vector<FieldElem> points;
    std::vector<FieldElem> lagrange;
    bool impossible = false;  // target degree above the z-degree bound
};

ZGrid make_zgrid(const FieldCtx& F, std::size_t zdeg, std::size_t target) {
    ZGrid g;
    if (target > zdeg) {
        g.impossible = true;
        return g;
    }
    if (!F.order_at_least(zdeg + 1))
        throw CapacityError("field too small to interpolate the weight-matching degree");
    g.points = F.enumerate_points(zdeg + 1);
    g.lagrange = lagrange_coeff_weights(F, g.points, target);
    return g;
}

}  // namespace

std::string SieveReport::to_json() const {
    nlohmann::ordered_json j;
    j["decision"] = decision;
    j["trials"] = trials;
    j["p_evals"] = p_evals;
    j["failure_bound"] = failure_bound;
    j["seed"] = seed;
    return j.dump();
}

double basis_failure_bound(const FieldCtx& ctx, std::size_t k) {
    return std::min(1.0, 2.0 * static_cast<double>(k) / ctx.order_approx());
}

double odd_failure_bound(const FieldCtx& ctx, std::size_t degree, std::size_t k) {
    return std::min(1.0, static_cast<double>(degree + k) / ctx.order_approx());
}

std::size_t default_trials(const FieldCtx& ctx) {
    bool big = ctx.kind() == FieldKind::BinaryExtension ? ctx.width() >= 63
                                                        : ctx.prime() >= (1ULL << 63);
    return big ? 1 : 20;
}

SieveReport basis_sieve(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                        const SieveOptions& opts) {
    const FieldCtx& F = p.ctx();
    if (!(F == A.ctx())) throw UsageError("oracle and matroid field contexts differ");
    std::size_t k = A.rows();
    Binding b = bind(assoc, A, p.arity());
    bool matched = opts.weight_matched.value_or(weight_matched_default(p, b, k));
    ZGrid grid;
    if (!matched) grid = make_zgrid(F, p.degree_bound() * std::max<std::size_t>(b.gamma_max, 1), k);

    SieveReport report;
    report.seed = opts.seed;
    report.trials = opts.trials ? opts.trials : default_trials(F);
    report.failure_bound = basis_failure_bound(F, k);
    std::uint64_t evals_before = p.eval_count();
    for (std::size_t trial = 0; trial < report.trials; ++trial) {
        if (grid.impossible) break;  // no monomial can reach weight k
        Rng rng = Rng::derive(opts.seed, kTagBasis, trial);
        std::vector<FieldElem> x(p.arity()), y(k);
        for (auto& v : x) v = F.random(rng);
        for (auto& v : y) v = F.random(rng);
        FieldElem total = subset_sum_threaded(p, A, b, Mode::Basis, x, {}, y, grid.points,
                                              grid.lagrange, opts.threads);
        if (!total.is_zero()) report.decision = true;
    }
    report.p_evals = p.eval_count() - evals_before;
    return report;
}

SieveReport basis_sieve(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                        const SieveOptions& opts) {
    return basis_sieve(p, m.rep(), assoc, opts);
}

SieveReport odd_sieve(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                      const SieveOptions& opts) {
    const FieldCtx& F = p.ctx();
    if (!(F == A.ctx())) throw UsageError("oracle and matroid field contexts differ");
    if (!F.char2()) throw UnsupportedError("odd sieving requires characteristic 2");
    std::size_t k = A.rows();
    Binding b = bind(assoc, A, p.arity());
    ZGrid grid = make_zgrid(F, p.degree_bound() * std::max<std::size_t>(b.gamma_max, 1), k);

    SieveReport report;
    report.seed = opts.seed;
    report.trials = opts.trials ? opts.trials : default_trials(F);
    report.failure_bound = odd_failure_bound(F, p.degree_bound(), k);
    std::uint64_t evals_before = p.eval_count();
    for (std::size_t trial = 0; trial < report.trials; ++trial) {
        if (grid.impossible) break;
        Rng rng = Rng::derive(opts.seed, kTagOdd, trial);
        std::vector<FieldElem> x1(p.arity()), x2(p.arity()), y(k);
        for (auto& v : x1) v = F.random(rng);
        for (auto& v : x2) v = F.random(rng);
        for (auto& v : y) v = F.random(rng);
        FieldElem total = subset_sum_threaded(p, A, b, Mode::Odd, x1, x2, y, grid.points,
                                              grid.lagrange, opts.threads);
        if (!total.is_zero()) report.decision = true;
    }
    report.p_evals = p.eval_count() - evals_before;
    return report;
}

SieveReport odd_sieve(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                      const SieveOptions& opts) {
    return odd_sieve(p, m.rep(), assoc, opts);
}

PolyOracle sieve_transform(const PolyOracle& p, const Matrix& A, const ColumnAssoc& assoc,
                           Rng& rng, const SieveOptions& opts) {
    const FieldCtx& F = p.ctx();
    if (!(F == A.ctx())) throw UsageError("oracle and matroid field contexts differ");
    std::size_t k = A.rows();
    auto b = std::make_shared<Binding>(bind(assoc, A, p.arity()));
    bool matched = opts.weight_matched.value_or(weight_matched_default(p, *b, k));
    auto grid = std::make_shared<ZGrid>();
    if (!matched)
        *grid = make_zgrid(F, p.degree_bound() * std::max<std::size_t>(b->gamma_max, 1), k);
    auto y = std::make_shared<std::vector<FieldElem>>(k);
    for (auto& v : *y) v = F.random(rng);
    Matrix Acopy = A;
    unsigned threads = opts.threads;
    return PolyOracle(F, p.arity(), p.degree_bound(), p.homogeneous(),
                      [p, Acopy, b, grid, y, threads, &F](std::span<const FieldElem> x) {
                          if (grid->impossible) return F.zero();
                          return subset_sum_threaded(p, Acopy, *b, Mode::Transform, x, {}, *y,
                                                     grid->points, grid->lagrange, threads);
                      });
}

PolyOracle sieve_transform(const PolyOracle& p, const LinearMatroid& m, const ColumnAssoc& assoc,
                           Rng& rng, const SieveOptions& opts) {
    return sieve_transform(p, m.rep(), assoc, rng, opts);
}

}  // namespace detsieve
