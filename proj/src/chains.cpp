#include "chainforge/chains.hpp"

#include <algorithm>
#include <map>

namespace chainforge {

std::vector<Point> BasicChain::realize() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(length()));
    Point cur = start;
    out.push_back(cur);
    for (int coord : coords) {
        for (int step = 0; step < start.d; ++step) {
            ++cur.digits[static_cast<std::size_t>(coord)];
            out.push_back(cur);
        }
    }
    return out;
}

bool is_basic(const std::vector<Point>& points) {
    if (points.empty()) throw NotAChainError("is_basic: empty sequence");
    if (points.size() == 1) return true;
    const int d = points[0].d;
    std::vector<int> steps;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const Point& x = points[i];
        const Point& y = points[i + 1];
        if (x.n() != y.n() || x.d != y.d) throw NotAChainError("is_basic: dimension mismatch");
        int j = -1;
        for (int t = 0; t < x.n(); ++t) {
            if (x.digits[static_cast<std::size_t>(t)] == y.digits[static_cast<std::size_t>(t)]) continue;
            if (j >= 0 || y.digits[static_cast<std::size_t>(t)] != x.digits[static_cast<std::size_t>(t)] + 1) {
                throw NotAChainError("is_basic: step is not a unit increment");
            }
            j = t;
        }
        if (j < 0) throw NotAChainError("is_basic: repeated point");
        steps.push_back(j);
    }
    // first raised coordinate starts at 0
    if (points[0].digits[static_cast<std::size_t>(steps[0])] != 0) return false;
    // a coordinate may be left only once it reached d, and the next starts at 0
    for (std::size_t i = 1; i < steps.size(); ++i) {
        if (steps[i] == steps[i - 1]) continue;
        const Point& mid = points[i];
        if (mid.digits[static_cast<std::size_t>(steps[i - 1])] != d) return false;
        if (mid.digits[static_cast<std::size_t>(steps[i])] != 0) return false;
    }
    // last raised coordinate ends at d
    return points.back().digits[static_cast<std::size_t>(steps.back())] == d;
}

bool ChainGroup::symmetric() const {
    if (d == 1) {
        int m = owner_layer();
        int span_end = upper ? m - width : m + width;
        return m + span_end == n;
    }
    return upper ? owner.c - owner.a == width : owner.a - owner.c == width;
}

std::vector<ChainGroup> enumerate_chain_groups(int n, int d, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_chain_groups: need n, k >= 1");
    if (d != 1 && d != 2) throw std::invalid_argument("enumerate_chain_groups: chain families exist for d in {1,2}");
    std::vector<ChainGroup> out;
    if (d == 1) {
        for (int m = 0; m <= n; ++m) {
            if (2 * m <= n) {
                int w = std::min(k, n - 2 * m);
                out.push_back({n, d, k, TypeTriple{n - m, m, 0}, w, n - 2 * m >= k, false});
            } else if (2 * m - n > k) {
                out.push_back({n, d, k, TypeTriple{n - m, m, 0}, k, true, true});
            }
        }
        return out;
    }
    for (const TypeTriple& t : all_types(n)) {
        if (t.a >= t.c) {
            int w = std::min(k, t.a - t.c);
            out.push_back({n, d, k, t, w, t.a - t.c >= k, false});
        } else if (t.c - t.a > k) {
            out.push_back({n, d, k, t, k, true, true});
        }
    }
    std::sort(out.begin(), out.end(), [](const ChainGroup& x, const ChainGroup& y) {
        return std::tuple(x.owner_layer(), x.owner.c, x.owner.a) <
               std::tuple(y.owner_layer(), y.owner.c, y.owner.a);
    });
    return out;
}

std::vector<TypeTriple> footprint(const ChainGroup& g, FootprintStyle style) {
    std::vector<TypeTriple> out;
    out.reserve(static_cast<std::size_t>(g.d * g.width + 1));
    const TypeTriple& o = g.owner;
    if (g.d == 1) {
        int m = g.owner_layer();
        for (int i = 0; i <= g.width; ++i) {
            int layer = g.upper ? m - i : m + i;
            out.push_back(TypeTriple{g.n - layer, layer, 0});
        }
        return out;
    }
    if (style == FootprintStyle::Basic) {
        out.push_back(o);
        for (int i = 1; i <= g.width; ++i) {
            if (g.upper) {
                out.push_back(TypeTriple{o.a + i - 1, o.b + 1, o.c - i});
                out.push_back(TypeTriple{o.a + i, o.b, o.c - i});
            } else {
                out.push_back(TypeTriple{o.a - i, o.b + 1, o.c + i - 1});
                out.push_back(TypeTriple{o.a - i, o.b, o.c + i});
            }
        }
        return out;
    }
    // Anti shape: all 0->1 raises first, then the 1->2 raises.
    if (!g.upper) {
        for (int i = 0; i <= g.width; ++i) out.push_back(TypeTriple{o.a - i, o.b + i, o.c});
        for (int j = 1; j <= g.width; ++j)
            out.push_back(TypeTriple{o.a - g.width, o.b + g.width - j, o.c + j});
    } else {
        for (int j = 0; j <= g.width; ++j) out.push_back(TypeTriple{o.a, o.b + j, o.c - j});
        for (int i = 1; i <= g.width; ++i)
            out.push_back(TypeTriple{o.a + i, o.b + g.width - i, o.c - g.width});
    }
    return out;
}

BigInt group_count(const ChainGroup& g) {
    if (g.d == 1) {
        int m = g.owner_layer();
        int start_layer = g.upper ? m - g.width : m;
        return binomial(g.n, start_layer) * falling_factorial(g.n - start_layer, g.width);
    }
    TypeTriple start = g.upper ? TypeTriple{g.owner.a + g.width, g.owner.b, g.owner.c - g.width}
                               : g.owner;
    return type_size(start) * falling_factorial(start.a, g.width);
}

namespace {

// Emits every ordered `width`-tuple of distinct zero coordinates of `p`.
void emit_chains_from(const Point& p, int width, unsigned long long& budget_left,
                      const std::function<void(const BasicChain&)>& fn) {
    std::vector<int> zeros;
    for (int i = 0; i < p.n(); ++i) {
        if (p.digits[static_cast<std::size_t>(i)] == 0) zeros.push_back(i);
    }
    std::vector<int> tuple;
    std::vector<bool> used(zeros.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == width) {
            if (budget_left == 0) throw BudgetError("point-chain enumeration budget exceeded");
            --budget_left;
            fn(BasicChain{p, tuple});
            return;
        }
        for (std::size_t t = 0; t < zeros.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            tuple.push_back(zeros[t]);
            self(self);
            tuple.pop_back();
            used[t] = false;
        }
    };
    rec(rec);
}

}  // namespace

void for_each_point_chain(
    const std::vector<ChainGroup>& groups, unsigned long long max_chains,
    const std::function<void(std::size_t, const BasicChain&)>& fn) {
    if (groups.empty()) return;
    const int n = groups[0].n, d = groups[0].d, k = groups[0].k;

    // owner (a, c) -> group for lower groups, chain-bottom (a, c) -> group for upper ones
    std::map<std::pair<int, int>, std::size_t> lower_at, upper_bottom_at;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const ChainGroup& g = groups[gi];
        if (g.upper) {
            TypeTriple bottom = g.d == 1
                                    ? TypeTriple{g.n - (g.owner_layer() - g.width), g.owner_layer() - g.width, 0}
                                    : TypeTriple{g.owner.a + g.width, g.owner.b, g.owner.c - g.width};
            upper_bottom_at[{bottom.a, bottom.c}] = gi;
        } else {
            lower_at[{g.owner.a, g.owner.c}] = gi;
        }
    }

    unsigned long long budget_left = max_chains;
    for_each_point(n, d, [&](const Point& p) {
        TypeTriple t = d == 1 ? TypeTriple{n - p.level(), p.level(), 0} : type_of(p);
        if (auto it = lower_at.find({t.a, t.c}); it != lower_at.end()) {
            const ChainGroup& g = groups[it->second];
            emit_chains_from(p, g.width, budget_left,
                             [&](const BasicChain& ch) { fn(it->second, ch); });
        }
        if (auto it = upper_bottom_at.find({t.a, t.c}); it != upper_bottom_at.end()) {
            emit_chains_from(p, k, budget_left,
                             [&](const BasicChain& ch) { fn(it->second, ch); });
        }
    });
}

std::vector<BasicChain> enumerate_point_chains(int n, int d, int k,
                                               unsigned long long max_chains) {
    std::vector<BasicChain> out;
    for_each_point_chain(enumerate_chain_groups(n, d, k), max_chains,
                         [&](std::size_t, const BasicChain& ch) { out.push_back(ch); });
    return out;
}

}  // namespace chainforge
