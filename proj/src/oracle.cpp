#include "chainforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace chainforge {

ConflictGraph build_conflict_graph(int n, int d, int k, const Budget& budget) {
    if (n < 1 || d < 1 || k < 0) throw std::invalid_argument("build_conflict_graph: bad parameters");
    long long count = point_count(n, d);
    if (count > static_cast<long long>(budget.max_graph_vertices)) {
        throw BudgetError("conflict graph budget exceeded: " + std::to_string(count) + " vertices > " +
                          std::to_string(budget.max_graph_vertices));
    }
    ConflictGraph g;
    g.n = n;
    g.d = d;
    g.k = k;
    g.vertices = static_cast<int>(count);
    g.words = (g.vertices + 63) / 64;
    g.adjacency.assign(static_cast<std::size_t>(g.vertices) * g.words, 0);

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for_each_point(n, d, [&](const Point& p) { pts.push_back(p); });
    for (int u = 0; u < g.vertices; ++u) {
        for (int v = u + 1; v < g.vertices; ++v) {
            if (forbidden_pair(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)], k)) {
                g.adjacency[static_cast<std::size_t>(u) * g.words + v / 64] |= 1ull << (v % 64);
                g.adjacency[static_cast<std::size_t>(v) * g.words + u / 64] |= 1ull << (u % 64);
                ++g.edge_count;
            }
        }
    }
    return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

// Independence solver: vertices still allowed live in `candidates`; a greedy
// partition of them into cliques of the conflict graph bounds how many can
// still join the set (one per clique).
struct MisSolver {
    const ConflictGraph& g;
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> current;

    // enumeration state
    bool enumerate = false;
    std::size_t cap = 0;
    bool truncated = false;
    std::vector<std::vector<int>> solutions;

    explicit MisSolver(const ConflictGraph& gr) : g(gr) {}

    std::vector<int> members(const Bits& b) const {
        std::vector<int> out;
        for (int w = 0; w < g.words; ++w) {
            std::uint64_t word = b[static_cast<std::size_t>(w)];
            while (word) {
                int bit = std::countr_zero(word);
                out.push_back(w * 64 + bit);
                word &= word - 1;
            }
        }
        return out;
    }

    // Upper bound: candidates are split greedily into cliques; an
    // independent set meets each clique at most once.
    int clique_cover_bound(const Bits& candidates) const {
        std::vector<int> verts = members(candidates);
        std::vector<Bits> cliques;          // candidate members of each clique so far
        std::vector<int> clique_of(verts.size());
        int used = 0;
        for (int v : verts) {
            bool placed = false;
            for (int ci = 0; ci < used; ++ci) {
                // v joins a clique if adjacent to every member
                bool all_adj = true;
                for (int w = 0; w < g.words; ++w) {
                    std::uint64_t need = cliques[static_cast<std::size_t>(ci)][static_cast<std::size_t>(w)];
                    std::uint64_t have = g.adjacency[static_cast<std::size_t>(v) * g.words + w];
                    if ((need & ~have) != 0) { all_adj = false; break; }
                }
                if (all_adj) {
                    cliques[static_cast<std::size_t>(ci)][static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                Bits fresh(static_cast<std::size_t>(g.words), 0);
                fresh[static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
                cliques.push_back(std::move(fresh));
                ++used;
            }
        }
        return used;
    }

    void expand(Bits candidates) {
        if (enumerate) {
            if (static_cast<int>(current.size()) == best) {
                if (solutions.size() >= cap) {
                    truncated = true;
                    return;
                }
                solutions.push_back(current);
                return;
            }
        } else if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_set = current;
        }
        std::vector<int> verts = members(candidates);
        if (verts.empty()) return;
        int bound_budget = enumerate ? best : best + 1;
        for (std::size_t idx = 0; idx < verts.size(); ++idx) {
            if (truncated) return;
            if (static_cast<int>(current.size()) + clique_cover_bound(candidates) <
                bound_budget) {
                return;
            }
            int v = verts[idx];
            // branch on v
            Bits next = candidates;
            for (int w = 0; w < g.words; ++w) {
                next[static_cast<std::size_t>(w)] &= ~g.adjacency[static_cast<std::size_t>(v) * g.words + w];
            }
            // only vertices after v, so each set is generated once
            for (int w = 0; w <= v / 64; ++w) {
                std::uint64_t mask = w == v / 64 ? ~((2ull << (v % 64)) - 1) : 0ull;
                next[static_cast<std::size_t>(w)] &= mask;
            }
            current.push_back(v);
            expand(next);
            current.pop_back();
            candidates[static_cast<std::size_t>(v / 64)] &= ~(1ull << (v % 64));
        }
    }
};

PointSet to_point_set(const ConflictGraph& g, const std::vector<int>& verts) {
    PointSet out;
    out.n = g.n;
    out.d = g.d;
    out.k = g.k;
    for (int v : verts) out.points.push_back(g.point(v));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Bits full_candidates(const ConflictGraph& g) {
    Bits all(static_cast<std::size_t>(g.words), 0);
    for (int v = 0; v < g.vertices; ++v) all[static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
    return all;
}

}  // namespace

MisResult max_independent_set(const ConflictGraph& g) {
    MisSolver solver(g);
    solver.best = 0;
    solver.expand(full_candidates(g));
    MisResult out;
    out.size = solver.best;
    out.witness = to_point_set(g, solver.best_set);
    return out;
}

std::vector<PointSet> enumerate_maximum_sets(const ConflictGraph& g, std::size_t cap,
                                             bool& truncated) {
    if (static_cast<std::size_t>(g.vertices) > 512) {
        throw BudgetError("enumerate_maximum_sets: graph too large");
    }
    MisSolver sizer(g);
    sizer.best = 0;
    sizer.expand(full_candidates(g));

    MisSolver lister(g);
    lister.best = sizer.best;
    lister.enumerate = true;
    lister.cap = cap;
    lister.expand(full_candidates(g));
    truncated = lister.truncated;

    std::vector<PointSet> out;
    out.reserve(lister.solutions.size());
    for (const auto& sol : lister.solutions) out.push_back(to_point_set(g, sol));
    std::sort(out.begin(), out.end(), [](const PointSet& x, const PointSet& y) {
        return x.points < y.points;
    });
    return out;
}

std::vector<PointSet> predicted_maximum_sets(int n, int d, int k) {
    if (d > 2 || k < 2) return {};
    std::vector<PointSet> out;
    out.push_back(build_candidate_set(n, d, k, CandidateVariant::Floor));
    PointSet ceil_set = build_candidate_set(n, d, k, CandidateVariant::Ceil);
    if (!(ceil_set == out.front())) out.push_back(std::move(ceil_set));
    std::sort(out.begin(), out.end(), [](const PointSet& x, const PointSet& y) {
        return x.points < y.points;
    });
    return out;
}

Verdict certify_theorem(int n, int d, int k, const Budget& budget, bool enumerate_unique,
                        std::size_t cap) {
    Verdict v;
    v.n = n;
    v.d = d;
    v.k = k;
    v.proven = d <= 2;
    v.candidate_size = candidate_set_size(n, d, k, CandidateVariant::Floor);

    ConflictGraph g;
    try {
        g = build_conflict_graph(n, d, k, budget);
    } catch (const BudgetError& e) {
        v.status = "INCOMPLETE";
        v.note = e.what();
        return v;
    }
    MisResult mis = max_independent_set(g);
    v.mis_size = mis.size;
    v.witness = mis.witness;
    bool ok = BigInt(mis.size) == v.candidate_size;

    if (enumerate_unique) {
        if (static_cast<std::size_t>(g.vertices) <= budget.max_enum_vertices) {
            bool truncated = false;
            auto sets = enumerate_maximum_sets(g, cap, truncated);
            v.maximum_set_count = sets.size();
            v.enumeration_truncated = truncated;
            v.unique = !truncated && sets.size() == 1;
            auto predicted = predicted_maximum_sets(n, d, k);
            if (!predicted.empty() && !truncated) {
                v.predicted_sets_match = sets == predicted;
                ok = ok && *v.predicted_sets_match;
            }
        } else {
            v.note = "uniqueness enumeration skipped: graph above enumeration budget";
        }
    }
    v.status = ok ? "PASS" : "FAIL";
    return v;
}

}  // namespace chainforge
