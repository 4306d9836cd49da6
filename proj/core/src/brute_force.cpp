#include "detsieve/brute_force.hpp"

#include <algorithm>
#include <functional>

namespace detsieve::oracle {

namespace {

void check_cap(std::size_t arity, std::size_t n_objects) {
    if (arity > 64) throw CapacityError("symbolic expansion arity cap exceeded");
    if (n_objects > SparsePoly::kMaxTerms) throw CapacityError("symbolic expansion term cap");
}

// iterate over all size-r index subsets of [n]
template <typename Fn>
bool for_subsets(std::size_t n, std::size_t r, Fn&& fn) {
    std::vector<std::size_t> idx(r);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) -> bool {
        if (depth == r) return fn(idx);
        for (std::size_t i = start; i + (r - depth) <= n; ++i) {
            idx[depth] = i;
            if (rec(i + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

SparsePoly expand_walks(const FieldCtx& ctx, const Graph& g, std::size_t s, std::size_t t,
                        std::size_t k) {
    std::size_t n = g.n, m = g.m();
    std::size_t arity = 1 + k * n + k * m;
    check_cap(arity, 0);
    SparsePoly out(ctx, arity);
    auto adj = g.directed ? g.out_adjacency() : g.adjacency();
    SparsePoly::Expo expo(arity, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t step) {
        if (step == k) {
            if (v == t) {
                SparsePoly::Expo e = expo;
                e[0] += 1;
                out.add_term(e, ctx.one());
            }
            return;
        }
        for (auto [w, eidx] : adj[v]) {
            if (w == v) continue;
            std::size_t xv = 1 + step * n + w;
            std::size_t xe = 1 + k * n + step * m + eidx;
            ++expo[xv];
            ++expo[xe];
            rec(w, step + 1);
            --expo[xv];
            --expo[xe];
        }
    };
    rec(s, 0);
    return out;
}

SparsePoly expand_cauchy_binet(const Matrix& a1, const Matrix& a2) {
    const FieldCtx& F = a1.ctx();
    std::size_t k = a1.rows(), n = a1.cols();
    check_cap(n, 0);
    SparsePoly out(F, n);
    for_subsets(n, k, [&](const std::vector<std::size_t>& cols) {
        FieldElem c = det_cofactor_numeric(a1.submatrix_cols(cols)) *
                      det_cofactor_numeric(a2.submatrix_cols(cols));
        if (!c.is_zero()) {
            SparsePoly::Expo e(n, 0);
            for (std::size_t col : cols) e[col] = 1;
            out.add_term(e, c);
        }
        return false;
    });
    return out;
}

SparsePoly expand_perfect_matchings(const FieldCtx& ctx, const Graph& g) {
    std::size_t n = g.n, m = g.m();
    check_cap(m, 0);
    SparsePoly out(ctx, m);
    if (n % 2 == 1) return out;
    std::vector<bool> used(n, false);
    SparsePoly::Expo expo(m, 0);
    std::function<void()> rec = [&]() {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) {
                u = v;
                break;
            }
        if (u == n) {
            out.add_term(expo, ctx.one());
            return;
        }
        used[u] = true;
        for (std::size_t e = 0; e < m; ++e) {
            auto [a, b] = g.edges[e];
            if (a == b) continue;
            std::size_t other;
            if (a == u)
                other = b;
            else if (b == u)
                other = a;
            else
                continue;
            if (used[other]) continue;
            used[other] = true;
            ++expo[e];
            rec();
            --expo[e];
            used[other] = false;
        }
        used[u] = false;
    };
    rec();
    return out;
}

SparsePoly expand_branching_walks(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                  std::optional<std::size_t> start) {
    std::size_t n = g.n, m = g.m();
    std::size_t arity = n + 2 * m;
    check_cap(arity, 0);
    auto adj = g.adjacency();
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());
    SparsePoly out(ctx, arity);

    // enumerate (T, phi): ordered trees with strictly increasing sibling
    // images, one monomial per properly ordered branching walk
    std::function<std::vector<SparsePoly::Expo>(std::size_t, std::size_t)> walks;
    std::function<std::vector<SparsePoly::Expo>(std::size_t, std::size_t, std::size_t)> forests;
    walks = [&](std::size_t v, std::size_t size) {
        std::vector<SparsePoly::Expo> res;
        if (size == 0) return res;
        if (size == 1) {
            SparsePoly::Expo e(arity, 0);
            e[v] = 1;
            res.push_back(e);
            return res;
        }
        for (auto& f : forests(v, 0, size - 1)) {
            f[v] += 1;
            res.push_back(f);
        }
        return res;
    };
    forests = [&](std::size_t v, std::size_t i, std::size_t total) {
        std::vector<SparsePoly::Expo> res;
        if (total == 0) {
            res.emplace_back(arity, 0);
            return res;
        }
        if (i == adj[v].size()) return res;
        res = forests(v, i + 1, total);  // skip neighbour i
        auto [u, eidx] = adj[v][i];
        std::size_t arc = 2 * eidx + (g.edges[eidx].u == v ? 0 : 1);
        for (std::size_t t = 1; t <= total; ++t) {
            for (const auto& child : walks(u, t)) {
                for (const auto& rest : forests(v, i + 1, total - t)) {
                    SparsePoly::Expo e(arity, 0);
                    for (std::size_t j = 0; j < arity; ++j)
                        e[j] = static_cast<std::uint16_t>(child[j] + rest[j]);
                    e[n + arc] += 1;
                    res.push_back(e);
                }
            }
        }
        return res;
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (start && *start != v) continue;
        for (const auto& e : walks(v, k)) out.add_term(e, ctx.one());
    }
    return out;
}

SparsePoly expand_linkage_det(const FieldCtx& ctx, const LinkageDet& det) {
    std::size_t n = det.graph.n, m = det.graph.m();
    std::size_t arity = det.layout.arity;
    check_cap(arity, 0);
    bool vertex_mode = det.mode == LinkageMode::VertexVars;
    std::vector<std::vector<SparsePoly>> sym(n, std::vector<SparsePoly>(n, SparsePoly(ctx, arity)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ent = det.pattern[i][j];
            switch (ent.kind) {
                case LinkageDet::Entry::Kind::Zero: break;
                case LinkageDet::Entry::Kind::One:
                    sym[i][j] = SparsePoly::constant(ctx, arity, ctx.one());
                    break;
                case LinkageDet::Entry::Kind::Var: {
                    SparsePoly xe = SparsePoly::variable(ctx, arity, ent.edge);
                    if (vertex_mode)
                        xe = xe * (SparsePoly::variable(ctx, arity, m + ent.u) +
                                   SparsePoly::variable(ctx, arity, m + ent.v));
                    sym[i][j] = xe;
                    break;
                }
            }
        }
    }
    SparsePoly d = det_cofactor(ctx, sym);
    if (vertex_mode)
        for (std::size_t s : det.S) d = d * SparsePoly::variable(ctx, arity, m + s);
    return d;
}

SparsePoly expand_tjoin(const FieldCtx& ctx, const Graph& g, const std::vector<std::size_t>& T,
                        std::size_t k) {
    std::size_t n = g.n, m = g.m();
    check_cap(m, 0);
    if (T.empty()) return SparsePoly::constant(ctx, m, ctx.one());
    std::vector<std::vector<SparsePoly>> a(n, std::vector<SparsePoly>(n, SparsePoly(ctx, m)));
    for (std::size_t e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        if (u == v) continue;
        a[u][v] = a[u][v] + SparsePoly::variable(ctx, m, e);
        a[v][u] = a[v][u] + SparsePoly::variable(ctx, m, e);
    }
    auto mat_mul = [&](const std::vector<std::vector<SparsePoly>>& x,
                       const std::vector<std::vector<SparsePoly>>& y) {
        std::vector<std::vector<SparsePoly>> z(n, std::vector<SparsePoly>(n, SparsePoly(ctx, m)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (x[i][l].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!y[l][j].is_zero()) z[i][j] = z[i][j] + x[i][l] * y[l][j];
            }
        return z;
    };
    auto power = a;
    auto walks = a;
    for (std::size_t l = 2; l <= k; ++l) {
        power = mat_mul(power, a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) walks[i][j] = walks[i][j] + power[i][j];
    }
    std::size_t tn = T.size();
    std::vector<std::vector<SparsePoly>> b(tn, std::vector<SparsePoly>(tn, SparsePoly(ctx, m)));
    for (std::size_t i = 0; i < tn; ++i)
        for (std::size_t j = 0; j < tn; ++j)
            if (i != j) b[i][j] = walks[T[i]][T[j]];
    return pfaffian_matchings(ctx, b);
}

SparsePoly expand_branchings(const FieldCtx& ctx, const Graph& g, std::size_t root,
                             BranchingSense sense) {
    std::size_t n = g.n, m = g.m();
    check_cap(m, 0);
    SparsePoly out(ctx, m);
    if (n == 0) return out;
    if (n == 1) return SparsePoly::constant(ctx, m, ctx.one());
    for_subsets(m, n - 1, [&](const std::vector<std::size_t>& arcs) {
        // out-branching: every non-root has in-degree 1, root 0, all
        // reachable from the root
        std::vector<std::size_t> indeg(n, 0);
        std::vector<std::vector<std::size_t>> children(n);
        for (std::size_t a : arcs) {
            std::size_t u = g.edges[a].u, v = g.edges[a].v;
            if (sense == BranchingSense::In) std::swap(u, v);
            ++indeg[v];
            children[u].push_back(v);
        }
        if (indeg[root] != 0) return false;
        for (std::size_t v = 0; v < n; ++v)
            if (v != root && indeg[v] != 1) return false;
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{root};
        seen[root] = true;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : children[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt == n) {
            SparsePoly::Expo e(m, 0);
            for (std::size_t a : arcs) e[a] = 1;
            out.add_term(e, ctx.one());
        }
        return false;
    });
    return out;
}

bool qmi(const std::vector<LinearMatroid>& ms, std::size_t k) {
    if (ms.empty()) throw UsageError("matroid intersection needs at least one matroid");
    std::size_t n = ms.front().ground_size();
    if (k > n) return false;
    return for_subsets(n, k, [&](const std::vector<std::size_t>& idx) {
        for (const auto& m : ms)
            if (!m.is_independent_cols(idx)) return false;
        return true;
    });
}

bool qmp(const LinearMatroid& m, const std::vector<std::vector<std::string>>& blocks,
         std::size_t k) {
    if (k > blocks.size()) return false;
    return for_subsets(blocks.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> cols;
        for (std::size_t b : idx)
            for (const auto& label : blocks[b]) cols.push_back(m.col_of(label));
        return m.is_independent_cols(cols);
    });
}

bool rank_set_cover(const std::vector<std::vector<std::string>>& sets, const LinearMatroid& m,
                    std::size_t t) {
    std::size_t k = m.rank_hint();
    std::size_t count = sets.size();
    for (std::size_t r = 0; r <= std::min(t, count); ++r) {
        bool found = for_subsets(count, r, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::size_t> cols;
            for (std::size_t i : idx)
                for (const auto& label : sets[i]) cols.push_back(m.col_of(label));
            std::sort(cols.begin(), cols.end());
            cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
            return m.rank_of_cols(cols) == k;
        });
        if (found) return true;
    }
    return false;
}

bool rank_set_packing(const std::vector<std::vector<std::string>>& sets, const LinearMatroid& m,
                      std::size_t t) {
    std::size_t k = m.rank_hint();
    return for_subsets(sets.size(), t, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> cols;
        for (std::size_t i : idx)
            for (const auto& label : sets[i]) cols.push_back(m.col_of(label));
        std::set<std::size_t> dedup(cols.begin(), cols.end());
        if (dedup.size() != cols.size()) return false;  // sets intersect
        if (cols.size() != k) return false;
        return m.is_independent_cols(cols);
    });
}

bool odd_coverage(std::size_t n_elements, const std::vector<std::vector<std::size_t>>& sets,
                  std::size_t t, std::size_t p) {
    if (t > sets.size()) return false;
    return for_subsets(sets.size(), t, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> parity(n_elements, 0);
        for (std::size_t i : idx)
            for (std::size_t v : sets[i]) parity[v] ^= 1;
        std::size_t odd = 0;
        for (std::size_t v = 0; v < n_elements; ++v) odd += parity[v];
        return odd >= p;
    });
}

std::vector<LinkageWitness> enumerate_linkages(const Graph& g, const std::vector<std::size_t>& Sin,
                                               const std::vector<std::size_t>& Tin) {
    std::vector<LinkageWitness> out;
    if (Sin.size() != Tin.size()) return out;
    // vertices in both sets form their own zero-length paths
    std::set<std::size_t> sset(Sin.begin(), Sin.end()), tset(Tin.begin(), Tin.end());
    std::vector<std::size_t> S, T, common;
    for (std::size_t v : Sin)
        if (tset.count(v))
            common.push_back(v);
        else
            S.push_back(v);
    for (std::size_t v : Tin)
        if (!sset.count(v)) T.push_back(v);

    auto adj = g.adjacency();
    std::vector<bool> used(g.n, false), in_s(g.n, false), in_t(g.n, false);
    for (std::size_t v : common) used[v] = true;
    for (std::size_t v : S) in_s[v] = true;
    for (std::size_t v : T) in_t[v] = true;
    LinkageWitness cur;
    for (std::size_t v : common) cur.vertices.insert(v);

    std::function<void(std::size_t)> next_path;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t si) {
        for (auto [w, e] : adj[v]) {
            if (used[w] || w == v || in_s[w]) continue;
            if (in_t[w]) {
                used[w] = true;
                cur.vertices.insert(w);
                cur.edges.insert(e);
                next_path(si + 1);
                cur.edges.erase(e);
                cur.vertices.erase(w);
                used[w] = false;
                continue;  // paths never pass through a T vertex
            }
            used[w] = true;
            cur.vertices.insert(w);
            cur.edges.insert(e);
            walk(w, si);
            cur.edges.erase(e);
            cur.vertices.erase(w);
            used[w] = false;
        }
    };
    next_path = [&](std::size_t si) {
        if (si == S.size()) {
            out.push_back(cur);
            return;
        }
        std::size_t s = S[si];
        if (used[s]) return;
        used[s] = true;
        cur.vertices.insert(s);
        walk(s, si);
        cur.vertices.erase(s);
        used[s] = false;
    };
    next_path(0);
    // dedupe (the same linkage can be found through different path orders)
    std::sort(out.begin(), out.end(), [](const LinkageWitness& a, const LinkageWitness& b) {
        return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const LinkageWitness& a, const LinkageWitness& b) {
                              return a.vertices == b.vertices && a.edges == b.edges;
                          }),
              out.end());
    return out;
}

int linkage_min_length(const Graph& g, const std::vector<std::size_t>& S,
                       const std::vector<std::size_t>& T, const LinearMatroid* m_over_v,
                       std::size_t k, int parity) {
    int best = -1;
    for (const auto& w : enumerate_linkages(g, S, T)) {
        if (parity >= 0 && static_cast<int>(w.edges.size() % 2) != parity) continue;
        if (m_over_v) {
            std::vector<std::size_t> cols;
            for (std::size_t v : w.vertices) cols.push_back(m_over_v->col_of(std::to_string(v)));
            if (m_over_v->rank_of_cols(cols) < k) continue;
        }
        int len = static_cast<int>(w.edges.size());
        if (best < 0 || len < best) best = len;
    }
    return best;
}

bool tcycle(const Graph& g, const std::vector<std::size_t>& terminals) {
    if (terminals.empty()) return true;
    std::size_t t0 = terminals[0];
    auto adj = g.adjacency();
    for (auto [u, e] : adj[t0]) {
        if (u == t0) continue;
        Graph h = g;
        h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(e));
        for (const auto& w : enumerate_linkages(h, {u}, {t0})) {
            bool all = true;
            for (std::size_t t : terminals)
                if (!w.vertices.count(t)) {
                    all = false;
                    break;
                }
            if (all && w.edges.size() >= 2) return true;
        }
    }
    return false;
}

std::size_t longest_st_path_vertices(const Graph& g, std::size_t s, std::size_t t) {
    if (s == t) return 1;
    std::size_t n = g.n;
    if (n > 20) throw CapacityError("longest-path oracle capped at 20 vertices");
    auto adj = g.adjacency();
    std::vector<std::vector<bool>> reach(std::size_t{1} << n, std::vector<bool>(n, false));
    std::uint64_t smask = 1ULL << s;
    reach[smask][s] = true;
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        if (!(mask & smask)) continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            if (v == t) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
            if (v == t) continue;  // paths stop at t
            for (auto [w, e] : adj[v]) {
                if (w == v || (mask >> w) & 1ULL) continue;
                reach[mask | (1ULL << w)][w] = true;
            }
        }
    }
    return best;
}

std::vector<std::set<std::size_t>> all_perfect_matchings(const Graph& g) {
    std::vector<std::set<std::size_t>> out;
    for (const auto& [e, c] : expand_perfect_matchings(FieldCtx::gf2(64), g).terms()) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) s.insert(i);
        out.push_back(s);
    }
    return out;
}

std::vector<std::set<std::size_t>> all_branchings(const Graph& g, std::size_t root,
                                                  BranchingSense sense) {
    std::vector<std::set<std::size_t>> out;
    for (const auto& [e, c] : expand_branchings(FieldCtx::gf2(64), g, root, sense).terms()) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) s.insert(i);
        out.push_back(s);
    }
    return out;
}

std::vector<std::set<std::size_t>> all_bases(const LinearMatroid& m) {
    std::vector<std::set<std::size_t>> out;
    std::size_t n = m.ground_size();
    std::size_t k = m.rep().rank();
    for_subsets(n, k, [&](const std::vector<std::size_t>& idx) {
        if (m.is_independent_cols(idx)) out.emplace_back(idx.begin(), idx.end());
        return false;
    });
    return out;
}

std::vector<std::set<std::size_t>> all_common_independent_sets(const LinearMatroid& a,
                                                               const LinearMatroid& b) {
    std::vector<std::set<std::size_t>> out;
    std::size_t n = a.ground_size();
    if (n > 20) throw CapacityError("common-independent enumeration capped at 20 elements");
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1ULL) idx.push_back(i);
        if (a.is_independent_cols(idx) && b.is_independent_cols(idx))
            out.emplace_back(idx.begin(), idx.end());
    }
    return out;
}

bool diverse_tuples(const std::vector<std::vector<std::set<std::size_t>>>& collections,
                    const std::vector<std::vector<std::size_t>>& pair_bounds, bool sum_mode,
                    std::size_t sum_bound, const std::vector<std::size_t>* weights) {
    std::size_t r = collections.size();
    std::vector<std::size_t> pick(r, 0);
    auto wdiff = [&](const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
        std::size_t d = 0;
        for (std::size_t e : a)
            if (!b.count(e)) d += weights ? (*weights)[e] : 1;
        for (std::size_t e : b)
            if (!a.count(e)) d += weights ? (*weights)[e] : 1;
        return d;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == r) {
            std::size_t total = 0;
            for (std::size_t a = 0; a < r; ++a) {
                for (std::size_t b = a + 1; b < r; ++b) {
                    std::size_t d = wdiff(collections[a][pick[a]], collections[b][pick[b]]);
                    if (!sum_mode && d < pair_bounds[a][b]) return false;
                    total += d;
                }
            }
            return !sum_mode || total >= sum_bound;
        }
        for (std::size_t c = 0; c < collections[i].size(); ++c) {
            pick[i] = c;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    if (r == 0) return true;
    for (const auto& coll : collections)
        if (coll.empty()) return false;
    return rec(0);
}

bool connected_rank_subgraph(const Graph& g, const LinearMatroid& m, bool edge_mode,
                             std::size_t k, std::size_t w) {
    if (w < 1) return k == 0;
    if (!edge_mode) {
        if (g.n > 20) throw CapacityError("subset enumeration capped at 20 vertices");
        auto adj = g.adjacency();
        for (std::uint64_t mask = 1; mask < (1ULL << g.n); ++mask) {
            std::size_t size = __builtin_popcountll(mask);
            if (size > w) continue;
            // connectivity of the induced subgraph
            std::size_t first = __builtin_ctzll(mask);
            std::vector<bool> seen(g.n, false);
            std::vector<std::size_t> stack{first};
            seen[first] = true;
            std::size_t cnt = 1;
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (auto [u, e] : adj[v]) {
                    if (((mask >> u) & 1ULL) && !seen[u]) {
                        seen[u] = true;
                        ++cnt;
                        stack.push_back(u);
                    }
                }
            }
            if (cnt != size) continue;
            std::vector<std::size_t> cols;
            for (std::size_t v = 0; v < g.n; ++v)
                if ((mask >> v) & 1ULL) cols.push_back(m.col_of(std::to_string(v)));
            if (m.rank_of_cols(cols) >= k) return true;
        }
        return false;
    }
    if (g.m() > 20) throw CapacityError("subset enumeration capped at 20 edges");
    for (std::uint64_t mask = 1; mask < (1ULL << g.m()); ++mask) {
        std::size_t size = __builtin_popcountll(mask);
        if (size > w) continue;
        // connectivity of (V(F), F)
        std::vector<std::size_t> verts;
        for (std::size_t e = 0; e < g.m(); ++e)
            if ((mask >> e) & 1ULL) {
                verts.push_back(g.edges[e].u);
                verts.push_back(g.edges[e].v);
            }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<std::size_t> stack{verts[0]};
        std::set<std::size_t> seen{verts[0]};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < g.m(); ++e) {
                if (!((mask >> e) & 1ULL)) continue;
                std::size_t other;
                if (g.edges[e].u == v)
                    other = g.edges[e].v;
                else if (g.edges[e].v == v)
                    other = g.edges[e].u;
                else
                    continue;
                if (!seen.count(other)) {
                    seen.insert(other);
                    stack.push_back(other);
                }
            }
        }
        if (seen.size() != verts.size()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t e = 0; e < g.m(); ++e)
            if ((mask >> e) & 1ULL) cols.push_back(m.col_of(std::to_string(e)));
        if (m.rank_of_cols(cols) >= k) return true;
    }
    return false;
}

int min_eulerian_deletion(const Graph& g, std::size_t cap) {
    if (!g.connected()) return -1;
    std::size_t m = g.m();
    if (m > 20) throw CapacityError("deletion enumeration capped at 20 edges");
    auto odd = g.odd_degree_vertices();
    for (std::size_t size = 0; size <= std::min(cap, m); ++size) {
        bool found = for_subsets(m, size, [&](const std::vector<std::size_t>& idx) {
            Graph h(g.n, false);
            std::set<std::size_t> del(idx.begin(), idx.end());
            for (std::size_t e = 0; e < m; ++e)
                if (!del.count(e)) h.edges.push_back(g.edges[e]);
            if (!h.odd_degree_vertices().empty()) return false;
            return h.connected();
        });
        if (found) return static_cast<int>(size);
    }
    return -1;
}

bool motif_edit_feasible(const std::vector<int>& chosen_colours,
                         const std::map<int, std::size_t>& Q, std::size_t ks, std::size_t kd,
                         std::size_t ki, std::size_t k) {
    std::map<int, std::size_t> C;
    for (int c : chosen_colours) ++C[c];
    std::size_t c0 = 0;
    for (const auto& [c, cnt] : C) {
        auto it = Q.find(c);
        if (it != Q.end()) c0 += std::min(cnt, it->second);
    }
    std::size_t qtotal = 0;
    for (const auto& [c, cnt] : Q) qtotal += cnt;
    std::size_t csize = chosen_colours.size();
    std::size_t a = std::min({csize - c0, qtotal - c0, ks});
    std::size_t k0 = std::max(qtotal > ki ? qtotal - ki : 0, k > kd ? k - kd : 0);
    return c0 + a >= k0;
}

}  // namespace detsieve::oracle
