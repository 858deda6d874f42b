#include "chainforge/weights.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "chainforge/closed_forms.hpp"

namespace chainforge {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("CHAINFORGE_BUDGET"); env && *env) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            b.max_graph_vertices = static_cast<std::size_t>(v);
            b.max_enum_vertices = static_cast<std::size_t>(v);
        }
    }
    return b;
}

Rational WeightTable::lookup(int a, int c) const {
    if (a < 0 || c < 0 || a + c > n) return Rational(0);
    if (auto it = owner_index.find({a, c}); it != owner_index.end()) return weights[it->second];
    // the mirror names the same group: layer n-m for d = 1, type (c, a) for d = 2
    std::pair<int, int> mirrored = d == 1 ? std::pair(n - a, 0) : std::pair(c, a);
    if (auto it = owner_index.find(mirrored); it != owner_index.end()) return weights[it->second];
    return Rational(0);
}

Rational WeightTable::lookup_layer(int m) const {
    if (d != 1) throw std::logic_error("lookup_layer: table is not a d=1 table");
    if (m < 0 || m > n) return Rational(0);
    return lookup(n - m, 0);
}

Rational WeightTable::per_chain_weight(std::size_t group_index) const {
    return weights[group_index] / Rational(group_count(groups[group_index]));
}

bool WeightTable::same_weights(const WeightTable& other) const {
    if (n != other.n || d != other.d || k != other.k) return false;
    if (groups.size() != other.groups.size()) return false;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (!(groups[i].owner == other.groups[i].owner) ||
            groups[i].width != other.groups[i].width)
            return false;
        if (!(weights[i] == other.weights[i])) return false;
    }
    return true;
}

namespace {

BigInt owner_size(const ChainGroup& g) {
    return g.d == 1 ? binomial(g.n, g.owner_layer()) : type_size(g.owner);
}

WeightTable make_table_shell(int n, int d, int k, FootprintStyle style) {
    WeightTable t;
    t.n = n;
    t.d = d;
    t.k = k;
    t.style = style;
    t.groups = enumerate_chain_groups(n, d, k);
    t.weights.assign(t.groups.size(), Rational(0));
    for (std::size_t i = 0; i < t.groups.size(); ++i) {
        t.owner_index[{t.groups[i].owner.a, t.groups[i].owner.c}] = i;
    }
    return t;
}

}  // namespace

WeightTable assign_weights_generic(int n, int d, int k, FootprintStyle style,
                                   std::optional<unsigned long long> shuffle_seed) {
    WeightTable t = make_table_shell(n, d, k, style);

    // Which groups pass through each type.
    std::map<std::pair<int, int>, std::vector<std::size_t>> covered_by;
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        for (const TypeTriple& ft : footprint(t.groups[gi], style)) {
            covered_by[{ft.a, ft.c}].push_back(gi);
        }
    }

    std::vector<std::size_t> order(t.groups.size());
    std::iota(order.begin(), order.end(), 0);
    auto distance = [&](std::size_t gi) {
        return std::abs(2 * t.groups[gi].owner_layer() - d * n);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::tuple(-distance(x), t.groups[x].owner.c, t.groups[x].owner.a) <
               std::tuple(-distance(y), t.groups[y].owner.c, t.groups[y].owner.a);
    });
    if (shuffle_seed) {
        std::mt19937_64 rng(*shuffle_seed);
        for (std::size_t lo = 0; lo < order.size();) {
            std::size_t hi = lo + 1;
            while (hi < order.size() && distance(order[hi]) == distance(order[lo])) ++hi;
            std::shuffle(order.begin() + static_cast<std::ptrdiff_t>(lo),
                         order.begin() + static_cast<std::ptrdiff_t>(hi), rng);
            lo = hi;
        }
    }

    std::vector<bool> assigned(t.groups.size(), false);
    for (std::size_t gi : order) {
        const ChainGroup& g = t.groups[gi];
        Rational w(owner_size(g));
        for (std::size_t other : covered_by[{g.owner.a, g.owner.c}]) {
            if (assigned[other]) w -= t.weights[other];
        }
        t.weights[gi] = w;
        assigned[gi] = true;
    }
    return t;
}

WeightTable assign_weights_fast_d1(int n, int k) {
    WeightTable t = make_table_shell(n, 1, k, FootprintStyle::Basic);
    ClosedForms forms(n, k);
    std::vector<Rational> by_layer(static_cast<std::size_t>(n / 2 + 1));
    for (int m = 0; m <= n / 2; ++m) {
        if (n - 2 * m >= k) {
            Rational prev = m - k - 1 >= 0 ? by_layer[static_cast<std::size_t>(m - k - 1)] : Rational(0);
            by_layer[static_cast<std::size_t>(m)] =
                Rational(binomial(n, m)) - Rational(binomial(n, m - 1)) + prev;
        } else {
            by_layer[static_cast<std::size_t>(m)] =
                Rational(forms.u_layer(m) - forms.u_layer(m + k));
        }
    }
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        int m = t.groups[gi].owner_layer();
        t.weights[gi] = by_layer[static_cast<std::size_t>(std::min(m, n - m))];
    }
    return t;
}

WeightTable assign_weights_fast_d2(int n, int k) {
    WeightTable t = make_table_shell(n, 2, k, FootprintStyle::Basic);

    // Weights of groups starting at lower types, computed layer by layer.
    std::map<std::pair<int, int>, Rational> lower;
    auto get = [&](int a, int c) -> Rational {
        if (a < 0 || c < 0 || a + c > n) return Rational(0);
        auto it = lower.find({a, c});
        if (it != lower.end()) return it->second;
        it = lower.find({c, a});
        return it != lower.end() ? it->second : Rational(0);
    };
    for (int m = 0; m <= n; ++m) {
        for (int c = 0; 2 * c <= m; ++c) {
            int a = c + (n - m);
            if (a + c > n) continue;
            Rational w = Rational(multinomial_ac(n, a, c)) - Rational(multinomial_ac(n, a + 1, c - 1)) -
                         get(a + 1, c) + get(a + 1 + k, c - 1 - k) + get(a + 1 + k, c - k);
            if (a - c < k) {
                // cross-middle starts reach inner types from the far side
                w -= get(a - k, c + k);
                if (a - c < k - 1) w -= get(a - k + 1, c + k);
            }
            lower[{a, c}] = w;
        }
    }
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        const TypeTriple& o = t.groups[gi].owner;
        t.weights[gi] = t.groups[gi].upper ? get(o.c, o.a) : get(o.a, o.c);
    }
    return t;
}

WeightTable sperner_table(int n) {
    WeightTable t = make_table_shell(n, 1, n, FootprintStyle::Basic);
    for (std::size_t gi = 0; gi < t.groups.size(); ++gi) {
        int m = t.groups[gi].owner_layer();
        t.weights[gi] = Rational(binomial(n, m) - binomial(n, m - 1));
    }
    return t;
}

Rational total_weight(const WeightTable& table) {
    Rational sum(0);
    for (const Rational& w : table.weights) sum += w;
    return sum;
}

namespace {

InducedReport verify_type_mode(const WeightTable& table) {
    InducedReport rep;
    rep.mode = InducedMode::Type;
    rep.n = table.n;
    rep.d = table.d;
    rep.k = table.k;

    std::map<std::pair<int, int>, Rational> through;
    for (std::size_t gi = 0; gi < table.groups.size(); ++gi) {
        for (const TypeTriple& ft : footprint(table.groups[gi], table.style)) {
            through[{ft.a, ft.c}] += table.weights[gi];
        }
    }
    auto check_type = [&](const TypeTriple& ty, const BigInt& size) {
        auto it = through.find({ty.a, ty.c});
        Rational total = it == through.end() ? Rational(0) : it->second;
        if (!(total == Rational(size))) {
            Rational per_point = total / Rational(size);
            rep.deviations.push_back({ty, Point{}, per_point});
            Rational dev = (per_point - Rational(1)).abs();
            if (dev > rep.max_abs_deviation) rep.max_abs_deviation = dev;
        }
    };
    if (table.d == 1) {
        for (int m = 0; m <= table.n; ++m) {
            check_type(TypeTriple{table.n - m, m, 0}, binomial(table.n, m));
        }
    } else {
        for (const TypeTriple& ty : all_types(table.n)) check_type(ty, type_size(ty));
    }
    return rep;
}

InducedReport verify_point_mode(const WeightTable& table, const Budget& budget, int jobs) {
    InducedReport rep;
    rep.mode = InducedMode::Point;
    rep.n = table.n;
    rep.d = table.d;
    rep.k = table.k;
    if (table.style != FootprintStyle::Basic) {
        throw std::invalid_argument("verify_induced: point mode needs point-level chains (basic style)");
    }
    if (table.d == 2 && table.n > budget.max_point_mode_n_d2) {
        throw BudgetError("verify_induced: point mode budget exceeded for this n");
    }

    const long long num_points = point_count(table.n, table.d);
    std::vector<Rational> per_chain(table.groups.size());
    for (std::size_t gi = 0; gi < table.groups.size(); ++gi) {
        per_chain[gi] = table.per_chain_weight(gi);
    }

    jobs = std::max(1, jobs);
    std::vector<std::vector<Rational>> partial(
        static_cast<std::size_t>(jobs), std::vector<Rational>(static_cast<std::size_t>(num_points)));
    // Chains distribute round-robin over workers by group; each worker owns
    // its accumulator, merged at the end.
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next_group{0};
    auto worker = [&](int wi) {
        std::vector<Rational>& acc = partial[static_cast<std::size_t>(wi)];
        while (true) {
            std::size_t gi = next_group.fetch_add(1);
            if (gi >= table.groups.size()) break;
            std::vector<ChainGroup> one = {table.groups[gi]};
            for_each_point_chain(one, budget.max_point_chains,
                                 [&](std::size_t, const BasicChain& ch) {
                                     for (const Point& p : ch.realize()) {
                                         acc[static_cast<std::size_t>(point_to_index(p))] += per_chain[gi];
                                     }
                                 });
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        for (int wi = 0; wi < jobs; ++wi) pool.emplace_back(worker, wi);
        for (auto& th : pool) th.join();
    }

    for (long long idx = 0; idx < num_points; ++idx) {
        Rational total(0);
        for (int wi = 0; wi < jobs; ++wi) total += partial[static_cast<std::size_t>(wi)][static_cast<std::size_t>(idx)];
        if (!(total == Rational(1))) {
            Point p = point_from_index(idx, table.n, table.d);
            TypeTriple ty = table.d == 1 ? TypeTriple{table.n - p.level(), p.level(), 0} : type_of(p);
            rep.deviations.push_back({ty, p, total});
            Rational dev = (total - Rational(1)).abs();
            if (dev > rep.max_abs_deviation) rep.max_abs_deviation = dev;
        }
    }
    return rep;
}

}  // namespace

InducedReport verify_induced(const WeightTable& table, InducedMode mode, const Budget& budget,
                             int jobs) {
    return mode == InducedMode::Type ? verify_type_mode(table)
                                     : verify_point_mode(table, budget, jobs);
}

std::vector<std::pair<TypeTriple, Rational>> positivity_report(const WeightTable& table) {
    std::vector<std::pair<TypeTriple, Rational>> out;
    for (std::size_t gi = 0; gi < table.groups.size(); ++gi) {
        if (table.weights[gi].sign() <= 0) out.emplace_back(table.groups[gi].owner, table.weights[gi]);
    }
    return out;
}

}  // namespace chainforge
