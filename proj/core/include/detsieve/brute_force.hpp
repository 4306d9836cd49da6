#ifndef DETSIEVE_BRUTE_FORCE_HPP
#define DETSIEVE_BRUTE_FORCE_HPP

#include <map>
#include <set>

#include "detsieve/enumerators.hpp"
#include "detsieve/sparse_poly.hpp"

namespace detsieve::oracle {

// ---- symbolic expansions (independent derivations of the enumerator
// algebra: DFS/backtracking enumeration, cofactor determinants,
// matching-sum Pfaffians) ----

SparsePoly expand_walks(const FieldCtx& ctx, const Graph& g, std::size_t s, std::size_t t,
                        std::size_t k);
SparsePoly expand_cauchy_binet(const Matrix& a1, const Matrix& a2);
SparsePoly expand_perfect_matchings(const FieldCtx& ctx, const Graph& g);
SparsePoly expand_branching_walks(const FieldCtx& ctx, const Graph& g, std::size_t k,
                                  std::optional<std::size_t> start = std::nullopt);
SparsePoly expand_linkage_det(const FieldCtx& ctx, const LinkageDet& det);
SparsePoly expand_tjoin(const FieldCtx& ctx, const Graph& g, const std::vector<std::size_t>& T,
                        std::size_t k);
SparsePoly expand_branchings(const FieldCtx& ctx, const Graph& g, std::size_t root,
                             BranchingSense sense);

// ---- exhaustive combinatorial deciders (desk-scale ground truth) ----

bool qmi(const std::vector<LinearMatroid>& ms, std::size_t k);
bool qmp(const LinearMatroid& m, const std::vector<std::vector<std::string>>& blocks,
         std::size_t k);
bool rank_set_cover(const std::vector<std::vector<std::string>>& sets, const LinearMatroid& m,
                    std::size_t t);
bool rank_set_packing(const std::vector<std::vector<std::string>>& sets, const LinearMatroid& m,
                      std::size_t t);
bool odd_coverage(std::size_t n_elements, const std::vector<std::vector<std::size_t>>& sets,
                  std::size_t t, std::size_t p);

struct LinkageWitness {
    std::set<std::size_t> vertices;
    std::set<std::size_t> edges;
};
std::vector<LinkageWitness> enumerate_linkages(const Graph& g, const std::vector<std::size_t>& S,
                                               const std::vector<std::size_t>& T);
// minimal total edge count of a perfect (S,T)-linkage whose vertex set
// has rank >= k in m (parity: -1 none, 0 even, 1 odd); -1 when none
int linkage_min_length(const Graph& g, const std::vector<std::size_t>& S,
                       const std::vector<std::size_t>& T, const LinearMatroid* m_over_v,
                       std::size_t k, int parity);
bool tcycle(const Graph& g, const std::vector<std::size_t>& terminals);
// maximum |V(P)| over simple st-paths; 0 when s and t are disconnected
std::size_t longest_st_path_vertices(const Graph& g, std::size_t s, std::size_t t);

std::vector<std::set<std::size_t>> all_perfect_matchings(const Graph& g);
std::vector<std::set<std::size_t>> all_branchings(const Graph& g, std::size_t root,
                                                  BranchingSense sense);
std::vector<std::set<std::size_t>> all_bases(const LinearMatroid& m);
std::vector<std::set<std::size_t>> all_common_independent_sets(const LinearMatroid& a,
                                                               const LinearMatroid& b);

// tuple search over explicit solution collections with pairwise (or
// summed) weighted symmetric-difference lower bounds
bool diverse_tuples(const std::vector<std::vector<std::set<std::size_t>>>& collections,
                    const std::vector<std::vector<std::size_t>>& pair_bounds, bool sum_mode,
                    std::size_t sum_bound, const std::vector<std::size_t>* weights);

bool connected_rank_subgraph(const Graph& g, const LinearMatroid& m, bool edge_mode,
                             std::size_t k, std::size_t w);
// smallest deletion set size <= cap leaving an Eulerian graph; -1 if none
int min_eulerian_deletion(const Graph& g, std::size_t cap);

// the motif edit-distance feasibility claim
bool motif_edit_feasible(const std::vector<int>& chosen_colours, const std::map<int, std::size_t>& Q,
                         std::size_t ks, std::size_t kd, std::size_t ki, std::size_t k);

}  // namespace detsieve::oracle

#endif
