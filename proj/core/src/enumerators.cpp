#include "detsieve/enumerators.hpp"

#include <algorithm>
#include <set>

namespace detsieve {

std::size_t VariableLayout::add_block(const std::string& name, std::size_t count) {
    blocks.push_back({name, arity, count});
    arity += count;
    return blocks.back().offset;
}

const VariableLayout::Block& VariableLayout::block(const std::string& name) const {
    for (const auto& b : blocks)
        if (b.name == name) return b;
    throw UsageError("unknown variable block: " + name);
}

bool VariableLayout::has_block(const std::string& name) const {
    for (const auto& b : blocks)
        if (b.name == name) return true;
    return false;
}

std::size_t VariableLayout::index(const std::string& name, std::size_t i) const {
    const Block& b = block(name);
    if (i >= b.count) throw UsageError("variable index outside block " + name);
    return b.offset + i;
}

std::vector<std::size_t> VariableLayout::indices(const std::string& name) const {
    const Block& b = block(name);
    std::vector<std::size_t> out(b.count);
    for (std::size_t i = 0; i < b.count; ++i) out[i] = b.offset + i;
    return out;
}

WalkPoly walk_poly(const FieldCtx& ctx, const Graph& g, std::size_t s, std::size_t t,
                   std::size_t k) {
    if (k < 1) throw SpecError("walk length must be at least 1");
    if (s >= g.n || t >= g.n) throw SpecError("walk endpoint out of range");
    WalkPoly out;
    out.steps = k;
    std::size_t n = g.n, m = g.m();
    out.layout.add_block("x0", 1);
    out.layout.add_block("xv", k * n);
    out.layout.add_block("xe", k * m);
    Graph graph = g;
    bool directed = g.directed;
    out.oracle = PolyOracle(
        ctx, out.layout.arity, 2 * k + 1, true,
        [graph, s, t, k, n, m, directed, &ctx](std::span<const FieldElem> x) {
            std::vector<FieldElem> cur(n, ctx.zero()), next(n, ctx.zero());
            cur[s] = x[0];
            for (std::size_t i = 1; i <= k; ++i) {
                std::fill(next.begin(), next.end(), ctx.zero());
                for (std::size_t e = 0; e < m; ++e) {
                    auto [u, v] = graph.edges[e];
                    FieldElem xe = x[1 + k * n + (i - 1) * m + e];
                    if (u != v) {
                        next[v] = next[v] + cur[u] * x[1 + (i - 1) * n + v] * xe;
                        if (!directed) next[u] = next[u] + cur[v] * x[1 + (i - 1) * n + u] * xe;
                    }
                }
                std::swap(cur, next);
            }
            return cur[t];
        });
    return out;
}

PolyOracle cauchy_binet_poly(const Matrix& a1, const Matrix& a2) {
    if (!(a1.ctx() == a2.ctx())) throw UsageError("representations over different contexts");
    if (a1.rows() != a2.rows() || a1.cols() != a2.cols())
        throw UsageError("Cauchy-Binet inputs must share their k x n shape");
    const FieldCtx& F = a1.ctx();
    std::size_t k = a1.rows(), n = a1.cols();
    return PolyOracle(F, n, k, true, [a1, a2, k, n, &F](std::span<const FieldElem> x) {
        Matrix b(F, k, k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                FieldElem acc = F.zero();
                for (std::size_t v = 0; v < n; ++v)
                    acc = acc + a1.at(i, v) * x[v] * a2.at(j, v);
                b.set(i, j, acc);
            }
        }
        return b.det();
    });
}

MatchingPoly matching_poly(const FieldCtx& ctx, const Graph& g, std::optional<std::size_t> k,
                           Rng* rng) {
    if (g.directed) throw SpecError("matching enumerator needs an undirected graph");
    MatchingPoly out;
    std::size_t n = g.n, m = g.m();
    out.layout.add_block("xe", m);
    if (!k) {
        if (n % 2 == 1) {
            out.oracle = PolyOracle(ctx, m, 0, false,
                                    [&ctx](std::span<const FieldElem>) { return ctx.zero(); });
            return out;
        }
        Graph graph = g;
        out.oracle =
            PolyOracle(ctx, m, n / 2, true, [graph, n, m, &ctx](std::span<const FieldElem> x) {
                Matrix a(ctx, n, n);
                for (std::size_t e = 0; e < m; ++e) {
                    auto [u, v] = graph.edges[e];
                    if (u == v) continue;
                    a.set(u, v, x[e]);
                    a.set(v, u, x[e]);
                }
                return a.pfaffian_char2();
            });
        return out;
    }
    // k-matching: pad with n - 2k universal vertices holding fixed
    // random constants toward every original vertex.
    std::size_t kk = *k;
    if (2 * kk > n) throw SpecError("k-matching size exceeds half the vertex count");
    if (!rng) throw UsageError("k-matching padding needs a random stream");
    std::size_t pads = n - 2 * kk;
    std::vector<FieldElem> pad_consts;
    pad_consts.reserve(pads * n);
    for (std::size_t i = 0; i < pads * n; ++i) pad_consts.push_back(ctx.random_nonzero(*rng));
    Graph graph = g;
    out.oracle = PolyOracle(
        ctx, m, kk, true, [graph, n, m, pads, pad_consts, &ctx](std::span<const FieldElem> x) {
            std::size_t total = n + pads;
            Matrix a(ctx, total, total);
            for (std::size_t e = 0; e < m; ++e) {
                auto [u, v] = graph.edges[e];
                if (u == v) continue;
                a.set(u, v, x[e]);
                a.set(v, u, x[e]);
            }
            for (std::size_t p = 0; p < pads; ++p) {
                for (std::size_t v = 0; v < n; ++v) {
                    FieldElem c = pad_consts[p * n + v];
                    a.set(n + p, v, c);
                    a.set(v, n + p, c);
                }
            }
            return a.pfaffian_char2();
        });
    return out;
}

namespace {

struct BranchingWalkDp {
    const Graph* g;
    std::size_t k, n, m;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // sorted by neighbour

    // arc variable index for travelling edge e from u: 2e if u is the
    // canonical lower endpoint, else 2e+1
    static std::size_t arc_index(const Graph& g, std::size_t e, std::size_t from) {
        return 2 * e + (g.edges[e].u == from ? 0 : 1);
    }

    FieldElem eval(const FieldCtx& F, std::span<const FieldElem> x,
                   std::optional<std::size_t> start) const {
        // B[v][j]: properly ordered branching walks of size j from v;
        // layered by j so that child subtrees are already available.
        std::vector<std::vector<FieldElem>> B(n, std::vector<FieldElem>(k + 1, F.zero()));
        for (std::size_t v = 0; v < n; ++v) B[v][1] = x[v];
        for (std::size_t j = 2; j <= k; ++j) {
            for (std::size_t v = 0; v < n; ++v) {
                // C[i][jj]: forests of total size jj over children drawn
                // from neighbours i.. in increasing order
                std::size_t d = adj[v].size();
                std::vector<std::vector<FieldElem>> C(d + 1,
                                                      std::vector<FieldElem>(j, F.zero()));
                for (std::size_t i = 0; i <= d; ++i) C[i][0] = F.one();
                for (std::size_t i = d; i-- > 0;) {
                    auto [u, e] = adj[v][i];
                    FieldElem ya = x[n + arc_index(*g, e, v)];
                    for (std::size_t jj = 1; jj < j; ++jj) {
                        FieldElem acc = C[i + 1][jj];
                        for (std::size_t t = 1; t <= jj; ++t)
                            acc = acc + ya * B[u][t] * C[i + 1][jj - t];
                        C[i][jj] = acc;
                    }
                }
                B[v][j] = x[v] * C[0][j - 1];
            }
        }
        if (start) return B[*start][k];
        FieldElem acc = F.zero();
        for (std::size_t v = 0; v < n; ++v) acc = acc + B[v][k];
        return acc;
    }
};

}  // namespace

BranchingWalk branching_walk_poly(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                  std::optional<std::size_t> start) {
    if (k < 1) throw SpecError("branching walk size must be at least 1");
    if (g.directed) throw SpecError("branching walks are defined over undirected graphs");
    if (start && *start >= g.n) throw SpecError("start vertex out of range");
    BranchingWalk out;
    out.layout.add_block("xv", g.n);
    out.layout.add_block("ya", 2 * g.m());
    auto dp = std::make_shared<BranchingWalkDp>();
    dp->k = k;
    dp->n = g.n;
    dp->m = g.m();
    auto graph = std::make_shared<Graph>(g);
    dp->g = graph.get();
    dp->adj = graph->adjacency();
    for (auto& lst : dp->adj) std::sort(lst.begin(), lst.end());
    out.oracle = PolyOracle(ctx, out.layout.arity, 2 * k - 1, true,
                            [dp, graph, start, &ctx](std::span<const FieldElem> x) {
                                return dp->eval(ctx, x, start);
                            });
    return out;
}

namespace {

struct CircuitBuilder {
    ArithCircuit* c;
    const Graph* g;
    const FieldCtx* F;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
    std::vector<std::ptrdiff_t>* copy_vertex;
    std::vector<std::ptrdiff_t>* copy_arc;
    std::size_t next_var = 0;

    std::size_t fresh_vertex_copy(std::size_t v) {
        copy_vertex->push_back(static_cast<std::ptrdiff_t>(v));
        copy_arc->push_back(-1);
        return c->add_input(next_var++);
    }
    std::size_t fresh_arc_copy(std::size_t arc) {
        copy_vertex->push_back(-1);
        copy_arc->push_back(static_cast<std::ptrdiff_t>(arc));
        return c->add_input(next_var++);
    }

    // gate computing B(v, j), or nullopt when no walk of that size exists
    std::optional<std::size_t> walks(std::size_t v, std::size_t j) {
        if (j == 1) return fresh_vertex_copy(v);
        auto rest = forests(v, 0, j - 1);
        if (!rest) return std::nullopt;
        return c->add_mul(fresh_vertex_copy(v), *rest);
    }

    // gate computing C(v, i, j): forests over neighbours adj[v][i..]
    std::optional<std::size_t> forests(std::size_t v, std::size_t i, std::size_t j) {
        if (j == 0) return c->add_const(F->one());
        if (i == adj[v].size()) return std::nullopt;
        auto [u, e] = adj[v][i];
        std::optional<std::size_t> acc = forests(v, i + 1, j);
        for (std::size_t t = 1; t <= j; ++t) {
            auto child = walks(u, t);
            if (!child) continue;
            auto rest = forests(v, i + 1, j - t);
            if (!rest) continue;
            std::size_t arc = BranchingWalkDp::arc_index(*g, e, v);
            std::size_t term = c->add_mul(c->add_mul(fresh_arc_copy(arc), *child), *rest);
            acc = acc ? std::optional<std::size_t>(c->add_add(*acc, term)) : term;
        }
        return acc;
    }
};

}  // namespace

BranchingWalkCircuit branching_walk_circuit(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                            std::optional<std::size_t> start) {
    if (k < 1) throw SpecError("branching walk size must be at least 1");
    BranchingWalkCircuit out{ArithCircuit(ctx), {}, {}};
    CircuitBuilder b{&out.circuit, &g, &ctx, g.adjacency(), &out.copy_vertex, &out.copy_arc, 0};
    for (auto& lst : b.adj) std::sort(lst.begin(), lst.end());
    std::optional<std::size_t> total;
    for (std::size_t v = 0; v < g.n; ++v) {
        if (start && *start != v) continue;
        auto w = b.walks(v, k);
        if (!w) continue;
        total = total ? std::optional<std::size_t>(out.circuit.add_add(*total, *w)) : w;
    }
    if (!total) total = out.circuit.add_const(ctx.zero());
    out.circuit.set_output(*total);
    out.circuit.monotone_certified = true;
    return out;
}

LinkageDet stpath_linkage_det(const FieldCtx& ctx, const Graph& g, std::vector<std::size_t> S,
                              std::vector<std::size_t> T, LinkageMode mode) {
    if (g.directed) throw SpecError("linkage enumerator needs an undirected graph");
    if (S.size() != T.size()) throw SpecError("linkage needs |S| = |T|");
    LinkageDet out;
    out.mode = mode;

    // delete S cap T
    std::set<std::size_t> sset(S.begin(), S.end()), tset(T.begin(), T.end());
    std::set<std::size_t> both;
    for (std::size_t v : sset)
        if (tset.count(v)) both.insert(v);
    std::vector<std::ptrdiff_t> remap(g.n, -1);
    Graph h(0, false);
    for (std::size_t v = 0; v < g.n; ++v) {
        if (both.count(v)) continue;
        remap[v] = static_cast<std::ptrdiff_t>(h.n++);
        out.vertex_origin.push_back(static_cast<std::ptrdiff_t>(v));
    }
    h.colour.assign(h.n, -1);
    for (std::size_t v : S)
        if (remap[v] >= 0) out.S.push_back(static_cast<std::size_t>(remap[v]));
    for (std::size_t v : T)
        if (remap[v] >= 0) out.T.push_back(static_cast<std::size_t>(remap[v]));
    std::set<std::size_t> hs(out.S.begin(), out.S.end()), ht(out.T.begin(), out.T.end());
    if (hs.size() != out.S.size() || ht.size() != out.T.size())
        throw SpecError("terminal lists contain repeats");

    for (const auto& e : g.edges) {
        if (remap[e.u] < 0 || remap[e.v] < 0) continue;
        std::size_t u = static_cast<std::size_t>(remap[e.u]);
        std::size_t v = static_cast<std::size_t>(remap[e.v]);
        if (u == v) continue;  // loops never matter for linkages
        bool us = hs.count(u), ut = ht.count(u), vs = hs.count(v), vt = ht.count(v);
        if ((us && vs) || (ut && vt)) continue;  // edges inside S or inside T
        if ((us && vt) || (ut && vs)) {
            // subdivide: u - w - v
            std::size_t w = h.n++;
            h.colour.push_back(-1);
            out.vertex_origin.push_back(-1);
            h.add_edge(u, w);
            out.edge_zweight.push_back(1);
            out.edge_origin.push_back({static_cast<std::ptrdiff_t>(e.u),
                                       static_cast<std::ptrdiff_t>(e.v)});
            h.add_edge(w, v);
            out.edge_zweight.push_back(0);
            out.edge_origin.push_back({-1, -1});
            continue;
        }
        h.add_edge(u, v);
        out.edge_zweight.push_back(1);
        out.edge_origin.push_back({static_cast<std::ptrdiff_t>(e.u),
                                   static_cast<std::ptrdiff_t>(e.v)});
    }

    std::size_t n = h.n, m = h.m();
    out.layout.add_block("xe", m);
    if (mode == LinkageMode::VertexVars) out.layout.add_block("xv", n);

    std::vector<bool> in_s(n, false), in_t(n, false);
    for (std::size_t v : out.S) in_s[v] = true;
    for (std::size_t v : out.T) in_t[v] = true;

    out.pattern.assign(n, std::vector<LinkageDet::Entry>(n));
    for (std::size_t v = 0; v < n; ++v)
        if (!in_s[v] && !in_t[v]) out.pattern[v][v] = {LinkageDet::Entry::Kind::One, 0, v, v};
    for (std::size_t e = 0; e < m; ++e) {
        auto [u, v] = h.edges[e];
        if (!in_t[u] && !in_s[v]) out.pattern[u][v] = {LinkageDet::Entry::Kind::Var, e, u, v};
        if (!in_t[v] && !in_s[u]) out.pattern[v][u] = {LinkageDet::Entry::Kind::Var, e, u, v};
    }
    for (std::size_t i = 0; i < out.S.size(); ++i)
        out.pattern[out.T[i]][out.S[i]] = {LinkageDet::Entry::Kind::One, 0, out.T[i], out.S[i]};

    out.graph = h;
    std::size_t degree = mode == LinkageMode::EdgeVars ? n : 2 * n + out.S.size();
    auto pattern = out.pattern;
    auto slist = out.S;
    bool vertex_mode = mode == LinkageMode::VertexVars;
    out.oracle = PolyOracle(
        ctx, out.layout.arity, degree, false,
        [pattern, slist, n, m, vertex_mode, &ctx](std::span<const FieldElem> x) {
            Matrix a(ctx, n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& ent = pattern[i][j];
                    switch (ent.kind) {
                        case LinkageDet::Entry::Kind::Zero: break;
                        case LinkageDet::Entry::Kind::One: a.set(i, j, ctx.one()); break;
                        case LinkageDet::Entry::Kind::Var: {
                            FieldElem val = x[ent.edge];
                            if (vertex_mode) val = val * (x[m + ent.u] + x[m + ent.v]);
                            a.set(i, j, val);
                            break;
                        }
                    }
                }
            }
            FieldElem d = a.det();
            if (vertex_mode)
                for (std::size_t s : slist) d = d * x[m + s];
            return d;
        });
    return out;
}

TJoinPoly tjoin_poly(const FieldCtx& ctx, const Graph& g, const std::vector<std::size_t>& T,
                     std::size_t k) {
    if (T.size() % 2 == 1) throw SpecError("T-join needs an even terminal set");
    TJoinPoly out;
    std::size_t n = g.n, m = g.m();
    out.layout.add_block("xe", m);
    Graph graph = g;
    std::vector<std::size_t> terms = T;
    out.oracle = PolyOracle(
        ctx, m, std::max<std::size_t>(1, k) * (T.size() / 2), false,
        [graph, terms, k, n, m, &ctx](std::span<const FieldElem> x) {
            std::size_t tn = terms.size();
            if (tn == 0) return ctx.one();  // empty Pfaffian
            Matrix a(ctx, n, n);
            for (std::size_t e = 0; e < m; ++e) {
                auto [u, v] = graph.edges[e];
                if (u == v) continue;
                a.set(u, v, x[e]);
                a.set(v, u, x[e]);
            }
            // W = sum_{l=1..k} A^l
            Matrix power = a;
            Matrix walks = a;
            for (std::size_t l = 2; l <= k; ++l) {
                power = power * a;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        walks.set(i, j, walks.at(i, j) + power.at(i, j));
            }
            Matrix b(ctx, tn, tn);
            for (std::size_t i = 0; i < tn; ++i)
                for (std::size_t j = 0; j < tn; ++j)
                    if (i != j) b.set(i, j, walks.at(terms[i], terms[j]));
            return b.pfaffian_char2();
        });
    return out;
}

BranchingPoly branching_poly(const FieldCtx& ctx, const Graph& g, std::size_t root,
                             BranchingSense sense) {
    if (!g.directed) throw SpecError("branching enumerator needs a directed graph");
    if (root >= g.n) throw SpecError("branching root out of range");
    BranchingPoly out;
    std::size_t n = g.n, m = g.m();
    out.layout.add_block("xa", m);
    Graph graph = g;
    bool reverse = sense == BranchingSense::In;
    out.oracle = PolyOracle(
        ctx, m, n > 0 ? n - 1 : 0, true,
        [graph, root, reverse, n, m, &ctx](std::span<const FieldElem> x) {
            // symbolic Laplacian with the root row/column removed
            std::vector<std::size_t> keep;
            for (std::size_t v = 0; v < n; ++v)
                if (v != root) keep.push_back(v);
            std::vector<std::size_t> pos(n, 0);
            for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
            Matrix l(ctx, keep.size(), keep.size());
            for (std::size_t e = 0; e < m; ++e) {
                std::size_t u = graph.edges[e].u, v = graph.edges[e].v;
                if (reverse) std::swap(u, v);
                if (u == v) continue;
                if (v != root) {
                    std::size_t j = pos[v];
                    l.set(j, j, l.at(j, j) + x[e]);
                    if (u != root) l.set(pos[u], j, l.at(pos[u], j) - x[e]);
                }
            }
            return l.det();
        });
    return out;
}

}  // namespace detsieve
