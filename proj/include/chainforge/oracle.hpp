#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainforge/weights.hpp"

namespace chainforge {

// All (d+1)^n points in lexicographic order; an edge joins every pair the
// width-k condition forbids from coexisting. Independent sets are exactly
// the feasible extremal sets.
struct ConflictGraph {
    int n = 0;
    int d = 1;
    int k = 0;
    int vertices = 0;
    int words = 0;
    std::vector<std::uint64_t> adjacency;  // row-major bitset
    std::size_t edge_count = 0;

    bool has_edge(int u, int v) const {
        return adjacency[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64) & 1;
    }
    Point point(int v) const { return point_from_index(v, n, d); }
};

ConflictGraph build_conflict_graph(int n, int d, int k, const Budget& budget = {});

struct MisResult {
    int size = 0;
    PointSet witness;
    std::optional<std::vector<PointSet>> all_solutions;
    bool truncated = false;
};

// Exact branch and bound with a greedy coloring bound; deterministic in the
// vertex order.
MisResult max_independent_set(const ConflictGraph& g);

// Every maximum independent set, up to `cap` of them (truncated flag set
// beyond that). No symmetry pruning: uniqueness checks must see everything.
std::vector<PointSet> enumerate_maximum_sets(const ConflictGraph& g, std::size_t cap,
                                             bool& truncated);

struct Verdict {
    int n = 0, d = 1, k = 0;
    std::string status;  // "PASS" | "FAIL" | "INCOMPLETE"
    bool proven = false; // the d <= 2 construction is a theorem, beyond it a conjecture
    BigInt candidate_size;
    int mis_size = 0;
    PointSet witness;
    std::optional<bool> unique;
    std::optional<std::size_t> maximum_set_count;
    std::optional<bool> predicted_sets_match;
    bool enumeration_truncated = false;
    std::string note;
};

// The residue classes the maximum sets are expected to be, for d in {1,2}
// and k >= 2 (middle-layer classes for d = 1; for k = 1 every residue class
// ties and other maximum sets exist, so no uniqueness is predicted).
std::vector<PointSet> predicted_maximum_sets(int n, int d, int k);

// PASS iff the oracle's maximum matches the residue-class size, and, when
// enumeration is requested and predictions exist, the maximum sets are
// exactly the predicted ones.
Verdict certify_theorem(int n, int d, int k, const Budget& budget = {},
                        bool enumerate_unique = false, std::size_t cap = 10000);

}  // namespace chainforge
