#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainforge/chains.hpp"
#include "chainforge/rational.hpp"

namespace chainforge {

struct Budget {
    std::size_t max_graph_vertices = 100;
    std::size_t max_enum_vertices = 64;
    unsigned long long max_point_chains = 6000000ull;
    int max_point_mode_n_d2 = 7;

    // CHAINFORGE_BUDGET=<vertices> raises or lowers the oracle budgets.
    static Budget from_env();
};

// Total group weight per canonical start key. Entries exist for every
// enumerated group; lookups for any other type go through the mirror, which
// names the same group weight.
struct WeightTable {
    int n = 0;
    int d = 1;
    int k = 1;
    FootprintStyle style = FootprintStyle::Basic;
    std::vector<ChainGroup> groups;
    std::vector<Rational> weights;  // parallel to groups
    std::map<std::pair<int, int>, std::size_t> owner_index;

    // W of the group starting at the type with `a` zeros and `c` twos
    // (d = 1: at layer m, key (n-m, 0)); zero outside the simplex.
    Rational lookup(int a, int c) const;
    Rational lookup_layer(int m) const;  // d = 1 convenience
    Rational per_chain_weight(std::size_t group_index) const;

    bool same_weights(const WeightTable& other) const;
};

// Recursive assignment: owners ordered by decreasing distance from the
// middle layer, each receiving its type size minus everything already
// passing through. A seed shuffles owners inside each distance class, which
// must not change the result.
WeightTable assign_weights_generic(int n, int d, int k,
                                   FootprintStyle style = FootprintStyle::Basic,
                                   std::optional<unsigned long long> shuffle_seed = std::nullopt);

// Closed recursions, entrywise equal to the generic table.
WeightTable assign_weights_fast_d1(int n, int k);
WeightTable assign_weights_fast_d2(int n, int k);

// Weighted symmetric-chain decomposition of the subset lattice: group weight
// C(n,i) - C(n,i-1) at start layer i, split evenly over c = C(n,i)*(n-i)!/i!
// chains.
WeightTable sperner_table(int n);

// Sum of all group weights; for the subset-lattice table this is the
// middle binomial coefficient.
Rational total_weight(const WeightTable& table);

enum class InducedMode { Type, Point };

struct InducedDeviation {
    TypeTriple type;     // point mode reports the point's type context
    Point point;         // meaningful in point mode only
    Rational induced;    // per-element induced weight
};

struct InducedReport {
    InducedMode mode = InducedMode::Type;
    int n = 0, d = 1, k = 1;
    std::vector<InducedDeviation> deviations;
    Rational max_abs_deviation;  // max |induced - 1|

    bool ok() const { return deviations.empty(); }
};

// Type mode: sum of W over groups covering each type must equal the type
// size. Point mode: enumerate chains, split W evenly, accumulate per point,
// compare to 1. Both exact.
InducedReport verify_induced(const WeightTable& table, InducedMode mode,
                             const Budget& budget = {}, int jobs = 1);

// Entries with W <= 0, in group order.
std::vector<std::pair<TypeTriple, Rational>> positivity_report(const WeightTable& table);

}  // namespace chainforge
