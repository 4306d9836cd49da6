#include "detsieve/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace detsieve {

namespace {

constexpr std::uint64_t kTagQmi = 0x101;
constexpr std::uint64_t kTagQmp = 0x102;
constexpr std::uint64_t kTagCover = 0x103;
constexpr std::uint64_t kTagOddCov = 0x104;
constexpr std::uint64_t kTagLinkage = 0x105;
constexpr std::uint64_t kTagLongPath = 0x106;
constexpr std::uint64_t kTagDiverse = 0x107;
constexpr std::uint64_t kTagSubgraph = 0x108;
constexpr std::uint64_t kTagEuler = 0x109;
constexpr std::uint64_t kTagBalanced = 0x10a;
constexpr std::uint64_t kTagWitness = 0x10b;
constexpr std::uint64_t kTagMotif = 0x10c;

void absorb(SolveStats& s, const SieveReport& r) {
    s.trials += r.trials;
    s.p_evals += r.p_evals;
    s.failure_bound += r.failure_bound;
}

std::size_t solver_trials(const FieldCtx& ctx, const SolverOptions& opts) {
    return opts.trials ? opts.trials : default_trials(ctx);
}

// sieve matrix with one column per bound oracle variable (labels may
// repeat; the copied columns keep the association groups disjoint)
struct VarBinding {
    Matrix A;
    ColumnAssoc assoc;
};

VarBinding bind_labels(const LinearMatroid& m, const std::vector<std::string>& var_labels) {
    const FieldCtx& F = m.ctx();
    std::size_t bound = 0;
    for (const auto& l : var_labels)
        if (!l.empty()) ++bound;
    VarBinding b{Matrix(F, m.rep().rows(), bound), ColumnAssoc{}};
    b.assoc.groups.resize(var_labels.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < var_labels.size(); ++i) {
        if (var_labels[i].empty()) continue;
        std::size_t src = m.col_of(var_labels[i]);
        for (std::size_t r = 0; r < m.rep().rows(); ++r) b.A.set(r, next, m.rep().at(r, src));
        b.assoc.groups[i] = {next};
        ++next;
    }
    return b;
}

// Self-reduction: greedily exclude ground items whose removal keeps the
// decision positive; what remains is a minimal positive support.
void attach_witness(SolveResult& res, const SolverOptions& opts, std::size_t n_items,
                    const std::function<std::string(std::size_t)>& label_of,
                    const std::function<bool(const std::vector<bool>&, std::uint64_t)>& decide) {
    if (!opts.witness || !res.decision) return;
    std::vector<bool> excluded(n_items, false);
    for (std::size_t e = 0; e < n_items; ++e) {
        excluded[e] = true;
        std::uint64_t seed = Rng::derive(opts.seed, kTagWitness, e).next();
        if (!decide(excluded, seed)) excluded[e] = false;
    }
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < n_items; ++e)
        if (!excluded[e]) labels.push_back(label_of(e));
    res.witness = std::move(labels);
}

// division-free determinant over a commutative ring (Berkowitz)
template <typename T, typename AddF, typename MulF, typename NegF>
T det_berkowitz(const std::vector<std::vector<T>>& a, const T& one, const T& zero, AddF add,
                MulF mul, NegF neg) {
    std::size_t n = a.size();
    if (n == 0) return one;
    std::vector<T> p{one};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<T> q(i + 2, zero);
        q[0] = one;
        q[1] = neg(a[i][i]);
        if (i > 0) {
            std::vector<T> w(i);
            for (std::size_t r = 0; r < i; ++r) w[r] = a[r][i];
            for (std::size_t j = 2; j <= i + 1; ++j) {
                T dot = zero;
                for (std::size_t r = 0; r < i; ++r) dot = add(dot, mul(a[i][r], w[r]));
                q[j] = neg(dot);
                if (j <= i) {
                    std::vector<T> w2(i, zero);
                    for (std::size_t r = 0; r < i; ++r) {
                        T acc = zero;
                        for (std::size_t s = 0; s < i; ++s) acc = add(acc, mul(a[r][s], w[s]));
                        w2[r] = acc;
                    }
                    w = std::move(w2);
                }
            }
        }
        std::vector<T> pn(i + 2, zero);
        for (std::size_t t = 0; t < i + 2; ++t)
            for (std::size_t j = 0; j <= t && j < q.size(); ++j)
                if (t - j < p.size()) pn[t] = add(pn[t], mul(q[j], p[t - j]));
        p = std::move(pn);
    }
    T det = p[n];
    if (n % 2 == 1) det = neg(det);
    return det;
}

Extensor det_berkowitz_extensor(const FieldCtx& F, std::size_t dim,
                                const std::vector<std::vector<Extensor>>& a) {
    Extensor one = Extensor::scalar(F, dim, F.one());
    Extensor zero(F, dim);
    return det_berkowitz<Extensor>(
        a, one, zero, [](const Extensor& x, const Extensor& y) { return x + y; },
        [](const Extensor& x, const Extensor& y) { return wedge(x, y); },
        [&](const Extensor& x) { return F.char2() ? x : x.scaled(F.neg(F.one())); });
}

}  // namespace

SolveResult q_matroid_intersection(const std::vector<LinearMatroid>& ms, std::size_t k,
                                   const SolverOptions& opts) {
    if (ms.size() < 2) throw SpecError("q-matroid intersection needs q >= 2");
    const FieldCtx& F = ms[0].ctx();
    for (const auto& m : ms) {
        if (!(m.ctx() == F)) throw SpecError("matroids must share a field context");
        if (m.ground() != ms[0].ground()) throw SpecError("matroids must share a ground set");
    }
    std::size_t q = ms.size();
    std::size_t n = ms[0].ground_size();
    SolveResult res;
    res.stats.seed = opts.seed;
    if (k > n) return res;
    if (k == 0) {
        res.decision = true;
        return res;
    }

    auto decide = [&](const std::vector<bool>& excluded, std::uint64_t seed) {
        ColumnAssoc assoc = ColumnAssoc::identity(n);
        std::vector<std::size_t> zeroed;
        for (std::size_t v = 0; v < n; ++v)
            if (excluded[v]) zeroed.push_back(v);
        std::size_t trials = solver_trials(F, opts);
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = Rng::derive(seed, kTagQmi, t);
            std::vector<LinearMatroid> trunc;
            trunc.reserve(q);
            for (const auto& m : ms) trunc.push_back(truncate(m, k, rng));
            if (F.char2()) {
                PolyOracle p = cauchy_binet_poly(trunc[0].rep(), trunc[1].rep());
                double fail = static_cast<double>(k) / F.order_approx();
                for (std::size_t i = 2; i + 1 < q; ++i) {
                    p = sieve_transform(p, trunc[i].rep(), assoc, rng,
                                        {.threads = opts.threads});
                    fail += basis_failure_bound(F, k);
                }
                if (!zeroed.empty()) p = restrict_zero(p, zeroed);
                if (q == 2) {
                    std::vector<FieldElem> x(n);
                    for (auto& v : x) v = F.random(rng);
                    for (std::size_t z : zeroed) x[z] = F.zero();
                    res.stats.trials += 1;
                    res.stats.p_evals += 1;
                    res.stats.failure_bound += fail;
                    if (!p.eval(x).is_zero()) return true;
                } else {
                    SieveOptions so;
                    so.seed = rng.next();
                    so.trials = 1;
                    so.threads = opts.threads;
                    SieveReport rep = basis_sieve(p, trunc[q - 1].rep(), assoc, so);
                    rep.failure_bound += fail;
                    absorb(res.stats, rep);
                    if (rep.decision) return true;
                }
            } else {
                // exterior-algebra route: det(A1' A2^T) over the lifted
                // algebra with each x_v carrying the q-2 remaining columns
                std::size_t bigk = (q - 2) * k;
                if (q == 2) {
                    Matrix b(F, k, k);
                    std::vector<FieldElem> x(n);
                    for (std::size_t v = 0; v < n; ++v)
                        x[v] = excluded[v] ? F.zero() : F.random(rng);
                    PolyOracle p = cauchy_binet_poly(trunc[0].rep(), trunc[1].rep());
                    res.stats.trials += 1;
                    res.stats.p_evals += 1;
                    res.stats.failure_bound += static_cast<double>(k) / F.order_approx();
                    if (!p.eval(x).is_zero()) return true;
                    continue;
                }
                std::size_t dim = 2 * bigk;
                std::vector<Extensor> xs(n);
                for (std::size_t v = 0; v < n; ++v) {
                    Extensor e = Extensor::scalar(F, dim, excluded[v] ? F.zero() : F.random(rng));
                    for (std::size_t i = 2; i + 1 < q + 1; ++i) {
                        std::vector<FieldElem> col(bigk, F.zero());
                        for (std::size_t r = 0; r < k; ++r)
                            col[(i - 2) * k + r] = trunc[i].rep().at(r, v);
                        e = wedge(e, lift_vector(F, col));
                    }
                    xs[v] = std::move(e);
                }
                std::vector<std::vector<Extensor>> b(
                    k, std::vector<Extensor>(k, Extensor(F, dim)));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) {
                        Extensor acc(F, dim);
                        for (std::size_t v = 0; v < n; ++v) {
                            FieldElem c = trunc[0].rep().at(i, v) * trunc[1].rep().at(j, v);
                            if (c.is_zero()) continue;
                            acc = acc + xs[v].scaled(c);
                        }
                        b[i][j] = std::move(acc);
                    }
                Extensor d = det_berkowitz_extensor(F, dim, b);
                res.stats.trials += 1;
                res.stats.failure_bound +=
                    std::min(1.0, 2.0 * static_cast<double>(bigk) / F.order_approx());
                if (!d.top().is_zero()) return true;
            }
        }
        return false;
    };

    res.decision = decide(std::vector<bool>(n, false), opts.seed);
    attach_witness(res, opts, n, [&](std::size_t v) { return ms[0].ground()[v]; }, decide);
    return res;
}

SolveResult q_matroid_parity(const LinearMatroid& m,
                             const std::vector<std::vector<std::string>>& blocks, std::size_t k,
                             const SolverOptions& opts) {
    const FieldCtx& F = m.ctx();
    if (blocks.empty()) throw SpecError("q-matroid parity needs at least one block");
    std::size_t q = blocks[0].size();
    std::set<std::string> seen;
    for (const auto& b : blocks) {
        if (b.size() != q) throw SpecError("all blocks must have the same size");
        for (const auto& l : b) {
            m.col_of(l);  // validates
            if (!seen.insert(l).second) throw SpecError("blocks must be disjoint");
        }
    }
    if (seen.size() != m.ground_size()) throw SpecError("blocks must partition the ground set");
    SolveResult res;
    res.stats.seed = opts.seed;
    if (k == 0) {
        res.decision = true;
        return res;
    }
    if (k > blocks.size()) return res;
    std::size_t rank = q * k;

    auto decide = [&](const std::vector<bool>& excluded, std::uint64_t seed) {
        std::size_t trials = solver_trials(F, opts);
        std::size_t nb = blocks.size();
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = Rng::derive(seed, kTagQmp, t);
            LinearMatroid mt = truncate(m, rank, rng);
            ColumnAssoc assoc;
            assoc.groups.resize(nb);
            for (std::size_t b = 0; b < nb; ++b)
                for (const auto& l : blocks[b]) assoc.groups[b].push_back(mt.col_of(l));
            std::vector<std::size_t> zeroed;
            for (std::size_t b = 0; b < nb; ++b)
                if (excluded[b]) zeroed.push_back(b);
            if (F.char2()) {
                PolyOracle p(F, nb, nb, false, [nb, &F](std::span<const FieldElem> x) {
                    FieldElem acc = F.one();
                    for (std::size_t i = 0; i < nb; ++i) acc = acc * (F.one() + x[i]);
                    return acc;
                });
                if (!zeroed.empty()) p = restrict_zero(p, zeroed);
                SieveOptions so;
                so.seed = rng.next();
                so.trials = 1;
                so.threads = opts.threads;
                SieveReport rep = basis_sieve(p, mt.rep(), assoc, so);
                absorb(res.stats, rep);
                if (rep.decision) return true;
            } else {
                // 1-skew strongly monotone chain of (1 + x_E) factors
                ArithCircuit c(F);
                std::size_t acc = c.add_const(F.one());
                for (std::size_t b = 0; b < nb; ++b) {
                    if (excluded[b]) continue;
                    std::size_t inp = c.add_input(b);
                    acc = c.add_add(acc, c.add_mul(inp, acc));
                }
                c.set_output(acc);
                c.monotone_certified = true;
                ExtensorDecision d = eval_monotone(c, mt.rep(), assoc, rng);
                res.stats.trials += 1;
                res.stats.failure_bound += d.failure_bound;
                if (d.decision) return true;
            }
        }
        return false;
    };

    res.decision = decide(std::vector<bool>(blocks.size(), false), opts.seed);
    attach_witness(
        res, opts, blocks.size(),
        [&](std::size_t b) {
            std::string label;
            for (const auto& l : blocks[b]) label += (label.empty() ? "" : "+") + l;
            return label;
        },
        decide);
    return res;
}

SolveResult rank_set_cover_packing(const std::vector<std::vector<std::string>>& sets,
                                   const LinearMatroid& m, std::size_t t, CoverVariant variant,
                                   const SolverOptions& opts) {
    const FieldCtx& F = m.ctx();
    if (t == 0) throw SpecError("solution size must be positive");
    if (!F.char2()) throw UnsupportedError("set cover/packing sieving requires characteristic 2");
    std::size_t k = m.rank_hint();
    SolveResult res;
    res.stats.seed = opts.seed;
    std::size_t ns = sets.size();
    // variable space: one x_{v,E} per (set, member) incidence
    std::vector<std::string> var_labels;
    std::vector<std::pair<std::size_t, std::size_t>> var_of;  // (set, position)
    std::vector<std::vector<std::size_t>> set_vars(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < sets[i].size(); ++j) {
            set_vars[i].push_back(var_labels.size());
            var_labels.push_back(sets[i][j]);
            var_of.push_back({i, j});
        }
    }
    std::size_t arity = var_labels.size();
    std::size_t max_set = 0;
    for (const auto& s : sets) max_set = std::max(max_set, s.size());

    auto decide = [&](const std::vector<bool>& excluded_sets, std::uint64_t seed) {
        std::size_t trials = solver_trials(F, opts);
        for (std::size_t tr = 0; tr < trials; ++tr) {
            Rng rng = Rng::derive(seed, kTagCover, tr);
            VarBinding bind = bind_labels(m, var_labels);
            std::vector<FieldElem> y(t * ns);
            for (auto& v : y) v = F.random(rng);
            bool cover = variant == CoverVariant::Cover;
            PolyOracle p(
                F, arity, t * max_set, false,
                [&F, t, ns, cover, y, set_vars = set_vars,
                 excluded_sets](std::span<const FieldElem> x) {
                    std::vector<FieldElem> prod(ns, F.one());
                    for (std::size_t i = 0; i < ns; ++i) {
                        if (excluded_sets[i]) continue;
                        for (std::size_t var : set_vars[i])
                            prod[i] = prod[i] * (cover ? F.one() + x[var] : x[var]);
                    }
                    FieldElem acc = F.one();
                    for (std::size_t slot = 0; slot < t; ++slot) {
                        FieldElem layer = F.zero();
                        for (std::size_t i = 0; i < ns; ++i)
                            if (!excluded_sets[i]) layer = layer + y[slot * ns + i] * prod[i];
                        acc = acc * layer;
                    }
                    return acc;
                });
            SieveOptions so;
            so.seed = rng.next();
            so.trials = 1;
            so.threads = opts.threads;
            SieveReport rep = basis_sieve(p, bind.A, bind.assoc, so);
            absorb(res.stats, rep);
            if (rep.decision) return true;
        }
        return false;
    };

    res.decision = decide(std::vector<bool>(ns, false), opts.seed);
    attach_witness(res, opts, ns, [](std::size_t i) { return "set" + std::to_string(i); }, decide);
    (void)k;
    (void)var_of;
    return res;
}

SolveResult odd_coverage(const FieldCtx& ctx, std::size_t n_elements,
                         const std::vector<std::vector<std::size_t>>& sets, std::size_t t,
                         std::size_t p, const SolverOptions& opts) {
    if (!ctx.char2()) throw UnsupportedError("odd coverage requires characteristic 2");
    for (const auto& s : sets)
        for (std::size_t v : s)
            if (v >= n_elements) throw SpecError("set element out of range");
    SolveResult res;
    res.stats.seed = opts.seed;
    if (p > n_elements || t > sets.size()) return res;
    Matrix uni = uniform_matroid(ctx, n_elements, p).rep();
    ColumnAssoc assoc;
    assoc.groups.resize(n_elements + 1);
    for (std::size_t v = 0; v < n_elements; ++v) assoc.groups[v] = {v};
    std::size_t deg = 0;
    for (const auto& s : sets) deg += s.size() + 1;

    std::size_t trials = solver_trials(ctx, opts);
    for (std::size_t tr = 0; tr < trials && !res.decision; ++tr) {
        Rng rng = Rng::derive(opts.seed, kTagOddCov, tr);
        std::vector<FieldElem> y(sets.size());
        for (auto& v : y) v = ctx.random(rng);
        PolyOracle base(ctx, n_elements + 1, deg, false,
                        [&ctx, sets, y, n_elements](std::span<const FieldElem> x) {
                            FieldElem acc = ctx.one();
                            FieldElem z = x[n_elements];
                            for (std::size_t i = 0; i < sets.size(); ++i) {
                                FieldElem term = z * y[i];
                                for (std::size_t v : sets[i]) term = term * x[v];
                                acc = acc * (ctx.one() + term);
                            }
                            return acc;
                        });
        PolyOracle pt = coeff_extract(base, n_elements, sets.size(), t);
        SieveOptions so;
        so.seed = rng.next();
        so.trials = 1;
        so.threads = opts.threads;
        SieveReport rep = odd_sieve(pt, uni, assoc, so);
        absorb(res.stats, rep);
        if (rep.decision) res.decision = true;
    }
    return res;
}

SolveResult balanced_solution(const PolyOracle& enumerator, const LinearMatroid& m,
                              const std::vector<std::string>& var_labels, bool weight_matched,
                              const SolverOptions& opts) {
    const FieldCtx& F = m.ctx();
    SolveResult res;
    res.stats.seed = opts.seed;
    std::size_t trials = solver_trials(F, opts);
    for (std::size_t tr = 0; tr < trials && !res.decision; ++tr) {
        Rng rng = Rng::derive(opts.seed, kTagBalanced, tr);
        LinearMatroid mt = truncate(m, m.rank_hint(), rng);
        VarBinding bind = bind_labels(mt, var_labels);
        SieveOptions so;
        so.seed = rng.next();
        so.trials = 1;
        so.threads = opts.threads;
        if (weight_matched) so.weight_matched = true;
        SieveReport rep = basis_sieve(enumerator, bind.A, bind.assoc, so);
        absorb(res.stats, rep);
        if (rep.decision) res.decision = true;
    }
    return res;
}

SolveResult balanced_k_path(const Graph& g, std::size_t s, std::size_t t, std::size_t k,
                            const LinearMatroid& m, const SolverOptions& opts) {
    if (k < 2) throw SpecError("path needs at least two vertices");
    const FieldCtx& F = m.ctx();
    WalkPoly wp = walk_poly(F, g, s, t, k - 1);
    std::vector<std::string> var_labels(wp.layout.arity);
    var_labels[wp.layout.index("x0", 0)] = std::to_string(s);
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t v = 0; v < g.n; ++v)
            var_labels[wp.layout.index("xv", i * g.n + v)] = std::to_string(v);
    return balanced_solution(wp.oracle, m, var_labels, /*weight_matched=*/true, opts);
}

SolveResult diverse_collection(const std::vector<PolyOracle>& enumerators, std::size_t ground,
                               const std::vector<std::vector<std::size_t>>& d, DiverseMode mode,
                               std::size_t sum_bound, const std::vector<std::size_t>* weights,
                               const SolverOptions& opts) {
    if (enumerators.empty()) throw SpecError("diverse collection needs at least one enumerator");
    const FieldCtx& F = enumerators[0].ctx();
    if (!F.char2()) throw UnsupportedError("diverse collection sieving requires characteristic 2");
    std::size_t r = enumerators.size();
    for (const auto& e : enumerators)
        if (e.arity() != ground) throw SpecError("enumerators must share the ground set");
    std::vector<std::size_t> w(ground, 1);
    if (weights) {
        if (weights->size() != ground) throw SpecError("weight list must match the ground set");
        w = *weights;
        for (std::size_t we : w)
            if (we == 0) throw SpecError("weights must be positive");
    }
    std::size_t wtotal = 0;
    for (std::size_t we : w) wtotal += we;

    SolveResult res;
    res.stats.seed = opts.seed;

    // pair-block layout over expanded variables x_{e,rep}^{(i,j)}
    std::size_t npairs = r * (r - 1) / 2;
    auto pair_index = [r](std::size_t i, std::size_t j) {
        // i < j
        return i * r - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<std::size_t> dflat(npairs, 0);
    std::size_t dtotal = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::size_t dij = mode == DiverseMode::Pairwise ? d[i][j] : 0;
            dflat[pair_index(i, j)] = dij;
            dtotal += dij;
        }
    std::size_t rank = mode == DiverseMode::Pairwise ? dtotal : sum_bound;
    if (mode == DiverseMode::Pairwise) {
        for (std::size_t dij : dflat)
            if (dij > wtotal) return res;  // unattainable distance
    } else if (sum_bound > npairs * wtotal) {
        return res;
    }

    std::size_t block = wtotal;  // expanded vars per pair
    std::size_t arity = npairs * block;
    // offsets of (e, rep) within a pair block
    std::vector<std::size_t> eoff(ground + 1, 0);
    for (std::size_t e = 0; e < ground; ++e) eoff[e + 1] = eoff[e] + w[e];

    // matroid: per-pair uniform blocks (one uniform matroid of the sum
    // bound over everything in sum mode)
    Matrix A(F, rank, arity);
    {
        std::size_t row0 = 0;
        if (mode == DiverseMode::Pairwise) {
            for (std::size_t pi = 0; pi < npairs; ++pi) {
                std::size_t dij = dflat[pi];
                if (dij == 0) continue;
                Matrix u = uniform_matroid(F, block, dij).rep();
                for (std::size_t rr = 0; rr < dij; ++rr)
                    for (std::size_t cc = 0; cc < block; ++cc)
                        A.set(row0 + rr, pi * block + cc, u.at(rr, cc));
                row0 += dij;
            }
        } else {
            Matrix u = uniform_matroid(F, arity, rank).rep();
            A = u;
        }
    }
    ColumnAssoc assoc = ColumnAssoc::identity(arity);

    std::size_t deg = 0;
    for (const auto& e : enumerators) deg += e.degree_bound();
    deg *= r;  // substitution blows each ground variable into <= r-1 pair vars + y

    std::size_t trials = solver_trials(F, opts);
    for (std::size_t tr = 0; tr < trials && !res.decision; ++tr) {
        Rng rng = Rng::derive(opts.seed, kTagDiverse, tr);
        std::vector<FieldElem> y(r * ground);
        for (auto& v : y) v = F.random(rng);
        PolyOracle p(
            F, arity, deg, false,
            [&F, enumerators, r, ground, y, pair_index, eoff,
             w](std::span<const FieldElem> x) {
                FieldElem acc = F.one();
                std::vector<FieldElem> point(ground);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t e = 0; e < ground; ++e) {
                        FieldElem val = y[i * ground + e];
                        for (std::size_t j = 0; j < r; ++j) {
                            if (j == i) continue;
                            std::size_t pi = pair_index(std::min(i, j), std::max(i, j));
                            std::size_t base = pi * eoff[ground] + eoff[e];
                            for (std::size_t rep = 0; rep < w[e]; ++rep)
                                val = val * x[base + rep];
                        }
                        point[e] = val;
                    }
                    acc = acc * enumerators[i].eval(point);
                }
                return acc;
            });
        SieveOptions so;
        so.seed = rng.next();
        so.trials = 1;
        so.threads = opts.threads;
        SieveReport rep = odd_sieve(p, A, assoc, so);
        absorb(res.stats, rep);
        if (rep.decision) res.decision = true;
    }
    return res;
}

SolveResult diverse_perfect_matchings(const Graph& g, std::size_t r,
                                      const std::vector<std::vector<std::size_t>>& d,
                                      const SolverOptions& opts) {
    const FieldCtx& F = FieldCtx::gf2(64);
    std::vector<PolyOracle> enums;
    for (std::size_t i = 0; i < r; ++i) enums.push_back(matching_poly(F, g).oracle);
    return diverse_collection(enums, g.m(), d, DiverseMode::Pairwise, 0, nullptr, opts);
}

SolveResult k_distinct_branchings(const Graph& g, std::size_t s, std::size_t t, std::size_t k,
                                  const SolverOptions& opts) {
    const FieldCtx& F = FieldCtx::gf2(64);
    std::vector<PolyOracle> enums{branching_poly(F, g, s, BranchingSense::Out).oracle,
                                  branching_poly(F, g, t, BranchingSense::In).oracle};
    std::vector<std::vector<std::size_t>> d{{0, k}, {k, 0}};
    return diverse_collection(enums, g.m(), d, DiverseMode::Pairwise, 0, nullptr, opts);
}

SolveResult diverse_bases(const LinearMatroid& m, std::size_t r,
                          const std::vector<std::vector<std::size_t>>& d,
                          const SolverOptions& opts) {
    const FieldCtx& F = m.ctx();
    std::vector<PolyOracle> enums;
    for (std::size_t i = 0; i < r; ++i) enums.push_back(cauchy_binet_poly(m.rep(), m.rep()));
    return diverse_collection(enums, m.ground_size(), d, DiverseMode::Pairwise, 0, nullptr, opts);
    (void)F;
}

SolveResult diverse_common_independent_sets(const LinearMatroid& m1, const LinearMatroid& m2,
                                            std::size_t r,
                                            const std::vector<std::vector<std::size_t>>& d,
                                            const SolverOptions& opts) {
    const FieldCtx& F = m1.ctx();
    if (m1.ground() != m2.ground()) throw SpecError("matroids must share a ground set");
    std::size_t n = m1.ground_size();
    std::size_t maxr = std::min(m1.rank_hint(), m2.rank_hint());
    Rng rng = Rng::derive(opts.seed, kTagDiverse, 0xc15);
    // common independent sets of every size: sum of Cauchy-Binet
    // oracles over truncations to each rank
    std::vector<PolyOracle> parts;
    parts.push_back(PolyOracle(F, n, 0, false,
                               [&F](std::span<const FieldElem>) { return F.one(); }));
    for (std::size_t rr = 1; rr <= maxr; ++rr) {
        LinearMatroid t1 = truncate(m1, rr, rng);
        LinearMatroid t2 = truncate(m2, rr, rng);
        parts.push_back(cauchy_binet_poly(t1.rep(), t2.rep()));
    }
    PolyOracle cis = oracle_sum(parts);
    std::vector<PolyOracle> enums(r, cis);
    return diverse_collection(enums, n, d, DiverseMode::Pairwise, 0, nullptr, opts);
}

SolveResult connected_rank_subgraph(const Graph& g, const LinearMatroid& m, std::size_t k,
                                    std::size_t w, bool edge_mode, const SolverOptions& opts) {
    const FieldCtx& F = m.ctx();
    if (!F.char2())
        throw UnsupportedError("connected-subgraph sieving requires characteristic 2");
    SolveResult res;
    res.stats.seed = opts.seed;
    if (w < k) return res;  // cannot reach rank k within the size cap

    std::size_t lo = edge_mode ? k + 1 : std::max<std::size_t>(k, 1);
    std::size_t hi = edge_mode ? std::min(w, g.m()) + 1 : std::min(w, g.n);

    auto decide = [&](const std::vector<bool>& excluded, std::uint64_t seed,
                      double* found_size) {
        std::size_t trials = solver_trials(F, opts);
        for (std::size_t ell = lo; ell <= hi; ++ell) {
            BranchingWalk bw = branching_walk_poly(F, g, ell);
            std::vector<std::string> var_labels(bw.layout.arity);
            if (!edge_mode) {
                for (std::size_t v = 0; v < g.n; ++v)
                    var_labels[bw.layout.index("xv", v)] = std::to_string(v);
            } else {
                for (std::size_t e = 0; e < g.m(); ++e) {
                    var_labels[bw.layout.index("ya", 2 * e)] = std::to_string(e);
                    var_labels[bw.layout.index("ya", 2 * e + 1)] = std::to_string(e);
                }
            }
            std::vector<std::size_t> zeroed;
            for (std::size_t i = 0; i < excluded.size(); ++i) {
                if (!excluded[i]) continue;
                if (!edge_mode) {
                    zeroed.push_back(bw.layout.index("xv", i));
                } else {
                    zeroed.push_back(bw.layout.index("ya", 2 * i));
                    zeroed.push_back(bw.layout.index("ya", 2 * i + 1));
                }
            }
            for (std::size_t tr = 0; tr < trials; ++tr) {
                Rng rng = Rng::derive(seed, kTagSubgraph, ell * 1000 + tr);
                LinearMatroid mt = truncate(m, k, rng);
                VarBinding bind = bind_labels(mt, var_labels);
                PolyOracle p = bw.oracle;
                if (!zeroed.empty()) p = restrict_zero(p, zeroed);
                SieveOptions so;
                so.seed = rng.next();
                so.trials = 1;
                so.threads = opts.threads;
                SieveReport rep = odd_sieve(p, bind.A, bind.assoc, so);
                absorb(res.stats, rep);
                if (rep.decision) {
                    if (found_size) *found_size = static_cast<double>(ell);
                    return true;
                }
            }
        }
        return false;
    };

    double found = 0;
    std::size_t items = edge_mode ? g.m() : g.n;
    res.decision = decide(std::vector<bool>(items, false), opts.seed, &found);
    if (res.decision) res.extras["min_walk_size"] = found;
    attach_witness(res, opts, items, [&](std::size_t i) { return std::to_string(i); },
                   [&](const std::vector<bool>& ex, std::uint64_t seed) {
                       return decide(ex, seed, nullptr);
                   });
    return res;
}

SolveResult steiner_tree(const Graph& g, const std::vector<std::size_t>& terminals, std::size_t w,
                         const SolverOptions& opts) {
    const FieldCtx& F = FieldCtx::gf2(64);
    std::size_t k = terminals.size();
    Matrix rep(F, k, g.n);
    for (std::size_t i = 0; i < k; ++i) {
        if (terminals[i] >= g.n) throw SpecError("terminal out of range");
        rep.set(i, terminals[i], F.one());
    }
    std::vector<std::string> labels(g.n);
    for (std::size_t v = 0; v < g.n; ++v) labels[v] = std::to_string(v);
    LinearMatroid m(std::move(rep), std::move(labels));
    return connected_rank_subgraph(g, m, k, std::min(w, g.n), false, opts);
}

LinearMatroid build_motif_edit_matroid(const FieldCtx& ctx, const Graph& g,
                                       const std::map<int, std::size_t>& Q, std::size_t k,
                                       std::size_t ks, std::size_t kd, std::size_t ki, Rng& rng) {
    std::size_t qtotal = 0;
    for (const auto& [c, cnt] : Q) qtotal += cnt;
    std::size_t k0 = std::max(qtotal > ki ? qtotal - ki : 0, k > kd ? k - kd : 0);
    if (k0 > k) throw SpecError("edit budgets reject the parameters (k0 > k)");

    // colour classes over all vertices; capacity = multiplicity in Q
    std::map<int, std::vector<std::string>> classes;
    for (std::size_t v = 0; v < g.n; ++v) classes[g.colour[v]].push_back(std::to_string(v));
    std::vector<std::vector<std::string>> class_list;
    std::vector<std::size_t> caps;
    for (const auto& [c, members] : classes) {
        class_list.push_back(members);
        auto it = Q.find(c);
        std::size_t cap = it == Q.end() ? 0 : it->second;
        caps.push_back(std::min(cap, members.size()));
    }
    LinearMatroid m1 = partition_matroid(ctx, class_list, caps);
    LinearMatroid m2 = ks > 0 ? extend(m1, ks, rng) : m1;
    LinearMatroid m3 = truncate(m2, std::min<std::size_t>(k0, m2.rank_hint()), rng);
    // truncation must land exactly on rank k0 for the final extension
    if (m3.rank_hint() != k0) m3 = truncate(m2, k0, rng);
    LinearMatroid m4 = k > k0 ? extend(m3, k - k0, rng) : m3;
    return m4;
}

SolveResult graph_motif(const Graph& g, const std::map<int, std::size_t>& Q, std::size_t k,
                        std::size_t ks, std::size_t kd, std::size_t ki,
                        const SolverOptions& opts) {
    const FieldCtx& F = FieldCtx::gf2(64);
    Rng rng = Rng::derive(opts.seed, kTagMotif, 0);
    LinearMatroid m = build_motif_edit_matroid(F, g, Q, k, ks, kd, ki, rng);
    return connected_rank_subgraph(g, m, k, k, false, opts);
}

SolveResult eulerian_deletion_undirected(const Graph& g, std::size_t k,
                                         const SolverOptions& opts) {
    const FieldCtx& F = FieldCtx::gf2(64);
    SolveResult res;
    res.stats.seed = opts.seed;
    if (!g.connected()) return res;
    auto T = g.odd_degree_vertices();
    if (T.empty()) {
        res.decision = true;
        res.extras["deletion_size"] = 0;
        return res;
    }

    std::size_t corank = g.m() + 1 - g.n;  // cographic rank of a connected graph
    auto decide = [&](const std::vector<bool>& excluded, std::uint64_t seed, double* found) {
        std::size_t trials = solver_trials(F, opts);
        std::vector<std::size_t> zeroed;
        for (std::size_t e = 0; e < g.m(); ++e)
            if (excluded[e]) zeroed.push_back(e);
        for (std::size_t kp = T.size() / 2; kp <= std::min(k, corank); ++kp) {
            TJoinPoly tp = tjoin_poly(F, g, T, kp);
            PolyOracle p = tp.oracle;
            if (!zeroed.empty()) p = restrict_zero(p, zeroed);
            ColumnAssoc assoc = ColumnAssoc::identity(g.m());
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (const auto& e : g.edges) edges.push_back({e.u, e.v});
            for (std::size_t tr = 0; tr < trials; ++tr) {
                Rng rng = Rng::derive(seed, kTagEuler, kp * 1000 + tr);
                LinearMatroid cg = cographic_matroid(F, g.n, edges);
                LinearMatroid cgt = truncate(cg, kp, rng);
                SieveOptions so;
                so.seed = rng.next();
                so.trials = 1;
                so.threads = opts.threads;
                SieveReport rep = basis_sieve(p, cgt.rep(), assoc, so);
                absorb(res.stats, rep);
                if (rep.decision) {
                    if (found) *found = static_cast<double>(kp);
                    return true;
                }
            }
        }
        return false;
    };

    double found = 0;
    res.decision = decide(std::vector<bool>(g.m(), false), opts.seed, &found);
    if (res.decision) res.extras["deletion_size"] = found;
    attach_witness(res, opts, g.m(),
                   [&](std::size_t e) {
                       return std::to_string(g.edges[e].u) + "-" + std::to_string(g.edges[e].v);
                   },
                   [&](const std::vector<bool>& ex, std::uint64_t seed) {
                       return decide(ex, seed, nullptr);
                   });
    return res;
}

}  // namespace detsieve
