#pragma once

#include "itcraft/certificate.hpp"
#include "itcraft/core.hpp"
#include "itcraft/transforms.hpp"
#include "itcraft/transversal.hpp"

#include <cstdint>
#include <optional>

namespace itcraft {

/// A generated graph with its certificate. Replaying the certificate gives
/// back `graph` exactly.
struct Construction {
    PartitionedGraph graph;
    Certificate certificate;
};

/// K_{a,b}: side A = 0..a-1 is block 0, side B = a..a+b-1 is block 1.
PartitionedGraph gen_complete_bipartite(std::size_t a, std::size_t b);

/// 2d-1 copies of K_{d,d} in 2d blocks of size 2d-1. Each small-block step
/// sends one vertex from every copy present to the new copy's A side.
Construction gen_szabo_tardos(std::size_t d);

/// Same graph as gen_szabo_tardos; each step halves a smallest block between
/// the two sides of the new copy. Throws NotPowerOfTwo.
Construction gen_yuster(std::size_t d);

/// Indices (into components(g)) of components with exactly one vertex in every block.
std::vector<std::size_t> colorful_components(const PartitionedGraph& g);

/// C_{3r+1} with r-1 blocks of size 3 and two of size 2.
Construction gen_cycle_partition(std::size_t r);

/// C_{l1} + C_{l2} + C_{l3} with all blocks of size 3. Throws BadLength.
Construction gen_three_cycles(std::size_t l1, std::size_t l2, std::size_t l3);

/// r-1 copies of K_r(m) with the standard r-partition. Vertex (copy c, part p,
/// index t) is c*r*m + p*m + t.
PartitionedGraph gen_multipartite_base(std::size_t r, std::size_t m);

/// Szabo-Tardos graph for d with every block spread over a fresh copy of
/// gen_multipartite_base(d/m+1, m). Throws NotDivisible.
Construction gen_locally_sparse(std::size_t d, std::size_t m);

/// 4(d+1)^2 blocks of size d+1 satisfying the list cover conditions.
Construction gen_list_coloring_cx(std::size_t d);

struct StarFreeReport {
    std::size_t d = 0;          // maximum degree
    std::size_t block_size = 0; // 2m-1
    std::size_t bound = 0;      // d+k-1
    bool counterexample = false;
};

struct StarFreeConstruction {
    PartitionedGraph graph;
    Certificate certificate;
    StarFreeReport report;
};

/// Szabo-Tardos graph for m with k-1 disjoint cliques of size m/(k-1) added on
/// each side of every component. Throws NotDivisible.
StarFreeConstruction gen_star_free_cx(std::size_t k, std::size_t m);

/// Szabo-Tardos graph for d with every block spread over a fresh K_{d,d-1}.
Construction gen_ahhs_cx(std::size_t d);

struct JoinPowerReport {
    std::size_t copies = 0;
    std::size_t formula_copies = 0; // copies the closed-form bound asks for
    std::size_t padding = 0;        // copies added beyond the procedure
    bool matches_formula = true;    // copies - padding == formula_copies
};

struct JoinPowerConstruction {
    PartitionedGraph graph;
    Certificate certificate;
    JoinPowerReport report;
};

/// Joins copies of `seed` until every block has at least n vertices, then keeps
/// adding copies until there are at least `min_copies`. Throws ConditionFails,
/// SeedHasIT, or BudgetExceeded if the seed cannot be checked under `budget`.
JoinPowerConstruction gen_join_power(const PartitionedGraph& seed, std::size_t n, std::size_t min_copies = 0,
    const SearchBudget& budget = {});

/// d = ceil(rn / (2(r-1))), r-1 copies of K_{d,d}, r blocks of size >= n.
JoinPowerConstruction gen_general_szabo_tardos(std::size_t n, std::size_t r);

/// gen_join_power over gen_multipartite_base(r, m) with n = rm-1.
JoinPowerConstruction gen_complete_multipartite(std::size_t r, std::size_t m);

/// Closed-form copy count for the complete multipartite instance.
std::size_t complete_multipartite_copies(std::size_t r, std::size_t m);

/// Same as the deterministic generators but with uniformly random choices in
/// each join distribution. Used by property tests.
Construction gen_random_kdd_joins(std::size_t d, std::size_t copies, std::uint64_t seed);

} // namespace itcraft
