#ifndef DETSIEVE_SOLVERS_HPP
#define DETSIEVE_SOLVERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detsieve/brute_force.hpp"
#include "detsieve/enumerators.hpp"
#include "detsieve/extensor.hpp"
#include "detsieve/sieve.hpp"

namespace detsieve {

struct SolverOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 0;      // randomized re-draws; 0 = field default
    unsigned threads = 1;
    bool witness = false;        // self-reduction by element exclusion
    double rep_multiplier = 1.0; // long-path repetition scaling
};

struct SolveStats {
    std::uint64_t trials = 0;
    std::uint64_t p_evals = 0;
    double failure_bound = 0.0;
    std::uint64_t seed = 0;
};

// Closed-form long-path parameters for one target cycle size ck.
struct LongPathSchedule {
    std::size_t ck = 0;
    double c = 0.0;
    double p = 0.0;
    double k2_exact = 0.0;
    double kx_exact = 0.0;
    std::size_t k2 = 0, kx = 0, ell1 = 0, mu = 0;
    std::size_t repetitions = 0;
};

struct SolveResult {
    bool decision = false;
    std::optional<std::vector<std::string>> witness;
    SolveStats stats;
    std::map<std::string, double> extras;
    std::vector<LongPathSchedule> schedule;
};

// ---- matroid covering / packing / intersection ----

SolveResult q_matroid_intersection(const std::vector<LinearMatroid>& ms, std::size_t k,
                                   const SolverOptions& opts = {});
SolveResult q_matroid_parity(const LinearMatroid& m,
                             const std::vector<std::vector<std::string>>& blocks, std::size_t k,
                             const SolverOptions& opts = {});

enum class CoverVariant { Cover, Packing };
SolveResult rank_set_cover_packing(const std::vector<std::vector<std::string>>& sets,
                                   const LinearMatroid& m, std::size_t t, CoverVariant variant,
                                   const SolverOptions& opts = {});
SolveResult odd_coverage(const FieldCtx& ctx, std::size_t n_elements,
                         const std::vector<std::vector<std::size_t>>& sets, std::size_t t,
                         std::size_t p, const SolverOptions& opts = {});

// ---- path / cycle / linkage ----

struct LinkageFlags {
    bool shortest = false;
    int parity = -1;                  // -1 none, 0 even, 1 odd
    bool matroid_on_edges_too = false; // matroid over V u E (basis-sieve route)
};
// Matroid label conventions: vertices "0".."n-1", edges "u-v" (u<v).
SolveResult rank_linkage(const Graph& g, const std::vector<std::size_t>& S,
                         const std::vector<std::size_t>& T, const LinearMatroid& m, std::size_t k,
                         const LinkageFlags& flags = {}, const SolverOptions& opts = {});
SolveResult t_cycle(const Graph& g, const std::vector<std::size_t>& terminals,
                    const SolverOptions& opts = {});

LongPathSchedule long_path_schedule(std::size_t k, std::size_t ck, std::size_t n,
                                    double rep_multiplier = 1.0);
SolveResult long_st_path(const Graph& g, std::size_t s, std::size_t t, std::size_t k,
                         const SolverOptions& opts = {});
SolveResult long_cycle(const Graph& g, std::size_t k, const SolverOptions& opts = {});

// ---- balanced and diverse ----

// Basis sieve of a user enumerator against a user matroid; var_labels
// binds oracle variables to ground labels ("" leaves a variable free).
SolveResult balanced_solution(const PolyOracle& enumerator, const LinearMatroid& m,
                              const std::vector<std::string>& var_labels,
                              bool weight_matched = false, const SolverOptions& opts = {});
SolveResult balanced_k_path(const Graph& g, std::size_t s, std::size_t t, std::size_t k,
                            const LinearMatroid& m, const SolverOptions& opts = {});

enum class DiverseMode { Pairwise, SumOfDistances };
// Enumerators share a ground set of `ground` elements; d[i][j] are the
// pairwise lower bounds (sum bound under SumOfDistances). `weights`,
// when given, turns Hamming distance into weighted distance.
SolveResult diverse_collection(const std::vector<PolyOracle>& enumerators, std::size_t ground,
                               const std::vector<std::vector<std::size_t>>& d, DiverseMode mode,
                               std::size_t sum_bound = 0,
                               const std::vector<std::size_t>* weights = nullptr,
                               const SolverOptions& opts = {});
SolveResult diverse_perfect_matchings(const Graph& g, std::size_t r,
                                      const std::vector<std::vector<std::size_t>>& d,
                                      const SolverOptions& opts = {});
SolveResult k_distinct_branchings(const Graph& g, std::size_t s, std::size_t t, std::size_t k,
                                  const SolverOptions& opts = {});
SolveResult diverse_bases(const LinearMatroid& m, std::size_t r,
                          const std::vector<std::vector<std::size_t>>& d,
                          const SolverOptions& opts = {});
SolveResult diverse_common_independent_sets(const LinearMatroid& m1, const LinearMatroid& m2,
                                            std::size_t r,
                                            const std::vector<std::vector<std::size_t>>& d,
                                            const SolverOptions& opts = {});

// ---- subgraph problems ----

SolveResult connected_rank_subgraph(const Graph& g, const LinearMatroid& m, std::size_t k,
                                    std::size_t w, bool edge_mode = false,
                                    const SolverOptions& opts = {});
SolveResult steiner_tree(const Graph& g, const std::vector<std::size_t>& terminals, std::size_t w,
                         const SolverOptions& opts = {});

LinearMatroid build_motif_edit_matroid(const FieldCtx& ctx, const Graph& g,
                                       const std::map<int, std::size_t>& Q, std::size_t k,
                                       std::size_t ks, std::size_t kd, std::size_t ki, Rng& rng);
SolveResult graph_motif(const Graph& g, const std::map<int, std::size_t>& Q, std::size_t k,
                        std::size_t ks, std::size_t kd, std::size_t ki,
                        const SolverOptions& opts = {});

// ---- speeding up DP ----

SolveResult eulerian_deletion_undirected(const Graph& g, std::size_t k,
                                         const SolverOptions& opts = {});

}  // namespace detsieve

#endif
