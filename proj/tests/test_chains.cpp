#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "chainforge/chains.hpp"

using namespace chainforge;

namespace {

std::vector<Point> pts(std::vector<std::vector<int>> rows, int d) {
    std::vector<Point> out;
    for (auto& r : rows) out.push_back(make_point(r, d));
    return out;
}

const ChainGroup* find_group(const std::vector<ChainGroup>& groups, TypeTriple owner) {
    for (const auto& g : groups) {
        if (g.owner == owner) return &g;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("is_basic accepts the width-2 example and rejects broken shapes") {
    CHECK(is_basic(pts({{0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 2, 0}, {1, 1, 1, 2, 0}, {2, 1, 1, 2, 0}}, 2)));
    CHECK_FALSE(is_basic(pts({{0, 0}, {1, 0}, {1, 1}}, 2)));  // left the first coordinate at 1
    CHECK_FALSE(is_basic(pts({{1}, {2}}, 2)));                // does not start at 0
    CHECK(is_basic(pts({{1, 1}}, 2)));                        // singletons are basic
    CHECK(is_basic(pts({{0, 1}, {1, 1}, {2, 1}}, 2)));
    CHECK_THROWS_AS(is_basic(pts({{0, 0}, {0, 2}}, 2)), NotAChainError);
    CHECK_THROWS_AS(is_basic(pts({{0, 0}, {0, 0}}, 2)), NotAChainError);
}

TEST_CASE("realized chains are basic by construction") {
    BasicChain ch{make_point({0, 1, 0, 2}, 2), {2, 0}};
    auto realized = ch.realize();
    CHECK(realized.size() == 5);
    CHECK(is_basic(realized));
    CHECK(realized.back() == make_point({2, 1, 2, 2}, 2));
}

TEST_CASE("group enumeration: n=1 d=2 k=1") {
    auto groups = enumerate_chain_groups(1, 2, 1);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].owner == TypeTriple{1, 0, 0});
    CHECK(groups[0].width == 1);
    CHECK(groups[0].full_width);
    CHECK(groups[1].owner == TypeTriple{0, 1, 0});
    CHECK(groups[1].width == 0);
}

TEST_CASE("group enumeration: n=4 d=1 k=2") {
    auto groups = enumerate_chain_groups(4, 1, 2);
    std::map<int, std::pair<int, bool>> by_layer;  // layer -> (width, full)
    for (const auto& g : groups) by_layer[g.owner_layer()] = {g.width, g.full_width};
    REQUIRE(by_layer.size() == 4);
    CHECK(by_layer.at(0) == std::pair(2, true));
    CHECK(by_layer.at(1) == std::pair(2, true));  // symmetric span 1..3, full width boundary
    CHECK(by_layer.at(2) == std::pair(0, false));
    CHECK(by_layer.at(4) == std::pair(2, true));
    CHECK(by_layer.count(3) == 0);  // owned by the lower end
    CHECK(find_group(groups, TypeTriple{3, 1, 0})->symmetric());
}

TEST_CASE("group enumeration: k > n leaves only symmetric groups") {
    auto groups = enumerate_chain_groups(2, 2, 3);
    REQUIRE(groups.size() == 4);
    std::multiset<int> widths;
    for (const auto& g : groups) {
        CHECK_FALSE(g.full_width);
        CHECK(g.owner.a - g.owner.c == g.width);
        widths.insert(g.width);
    }
    CHECK(widths == std::multiset<int>({0, 0, 1, 2}));
}

TEST_CASE("footprints") {
    auto groups9 = enumerate_chain_groups(9, 2, 2);
    const ChainGroup* g = find_group(groups9, TypeTriple{5, 3, 1});
    REQUIRE(g != nullptr);
    CHECK(g->width == 2);
    CHECK(footprint(*g) == std::vector<TypeTriple>{{5, 3, 1}, {4, 4, 1}, {4, 3, 2}, {3, 4, 2}, {3, 3, 3}});

    auto groups1 = enumerate_chain_groups(1, 2, 1);
    CHECK(footprint(groups1[0]) == std::vector<TypeTriple>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    auto groups41 = enumerate_chain_groups(4, 1, 2);
    const ChainGroup* g1 = find_group(groups41, TypeTriple{3, 1, 0});
    REQUIRE(g1 != nullptr);
    std::vector<int> layers;
    for (const TypeTriple& t : footprint(*g1)) layers.push_back(t.layer());
    CHECK(layers == std::vector<int>{1, 2, 3});

    // upper-owned footprints descend from the owner
    const ChainGroup* gu = find_group(groups41, TypeTriple{0, 4, 0});
    REQUIRE(gu != nullptr);
    layers.clear();
    for (const TypeTriple& t : footprint(*gu)) layers.push_back(t.layer());
    CHECK(layers == std::vector<int>{4, 3, 2});
}

TEST_CASE("anti footprints trace the other corner of the rectangle") {
    ChainGroup g{6, 2, 2, TypeTriple{4, 1, 1}, 2, true, false};
    CHECK(footprint(g, FootprintStyle::AntiBasic) ==
          std::vector<TypeTriple>{{4, 1, 1}, {3, 2, 1}, {2, 3, 1}, {2, 2, 2}, {2, 1, 3}});
    CHECK(footprint(g, FootprintStyle::Basic) ==
          std::vector<TypeTriple>{{4, 1, 1}, {3, 2, 1}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}});
    // both shapes share the two ends
    CHECK(footprint(g, FootprintStyle::AntiBasic).front() == footprint(g).front());
    CHECK(footprint(g, FootprintStyle::AntiBasic).back() == footprint(g).back());
}

TEST_CASE("symmetric groups end at the mirror type") {
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const ChainGroup& g : enumerate_chain_groups(n, 2, k)) {
                auto fp = footprint(g);
                CHECK(fp.size() == static_cast<std::size_t>(2 * g.width + 1));
                CHECK(fp.front() == g.owner);
                if (g.symmetric()) CHECK(fp.back() == g.owner.mirror());
            }
        }
    }
}

TEST_CASE("group counts") {
    auto groups1 = enumerate_chain_groups(1, 2, 1);
    CHECK(group_count(groups1[0]) == BigInt(1));
    ChainGroup g2{2, 2, 2, TypeTriple{2, 0, 0}, 2, true, false};
    CHECK(group_count(g2) == BigInt(2));
    auto groups41 = enumerate_chain_groups(4, 1, 2);
    CHECK(group_count(*find_group(groups41, TypeTriple{4, 0, 0})) == BigInt(12));
}

TEST_CASE("point chains: n=1 d=2 k=1 gives the full chain and the singleton") {
    auto chains = enumerate_point_chains(1, 2, 1, 1000);
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].start == make_point({0}, 2));
    CHECK(chains[0].width() == 1);
    CHECK(chains[1].start == make_point({1}, 2));
    CHECK(chains[1].width() == 0);
}

TEST_CASE("point chains match the group counts") {
    for (int d = 1; d <= 2; ++d) {
        for (int n = 1; n <= (d == 1 ? 8 : 6); ++n) {
            for (int k = 1; k <= n; ++k) {
                auto groups = enumerate_chain_groups(n, d, k);
                std::vector<long long> counted(groups.size(), 0);
                std::set<std::vector<long long>> seen;  // encoded chains, checks duplicates
                for_each_point_chain(groups, 2000000, [&](std::size_t gi, const BasicChain& ch) {
                    ++counted[gi];
                    std::vector<long long> code{point_to_index(ch.start)};
                    for (int coord : ch.coords) code.push_back(-1 - coord);
                    CHECK(seen.insert(code).second);
                });
                for (std::size_t gi = 0; gi < groups.size(); ++gi) {
                    CHECK(BigInt(counted[gi]) == group_count(groups[gi]));
                }
            }
        }
    }
}

TEST_CASE("every chain stays inside its group footprint") {
    for (int k = 1; k <= 4; ++k) {
        auto groups = enumerate_chain_groups(4, 2, k);
        for_each_point_chain(groups, 2000000, [&](std::size_t gi, const BasicChain& ch) {
            auto fp = footprint(groups[gi]);
            auto realized = ch.realize();
            REQUIRE(realized.size() == fp.size());
            // upper-owned groups are enumerated from the bottom end
            if (groups[gi].upper) {
                for (std::size_t i = 0; i < fp.size(); ++i) {
                    CHECK(type_of(realized[i]) == fp[fp.size() - 1 - i]);
                }
            } else {
                for (std::size_t i = 0; i < fp.size(); ++i) CHECK(type_of(realized[i]) == fp[i]);
            }
            CHECK(is_basic(realized));
        });
    }
}

TEST_CASE("svector of sperner chain counts for n=3") {
    // width-3 chains: 3! orderings from the all-zero point; width-1 middle pairs
    auto groups = enumerate_chain_groups(3, 1, 3);
    REQUIRE(groups.size() == 2);
    CHECK(group_count(groups[0]) == BigInt(6));
    CHECK(group_count(groups[1]) == BigInt(6));
    CHECK(groups[1].width == 1);
}

TEST_CASE("every type is an end of some group") {
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto groups = enumerate_chain_groups(n, 2, k);
            std::set<std::pair<int, int>> ends;
            for (const auto& g : groups) {
                auto fp = footprint(g);
                ends.insert({fp.front().a, fp.front().c});
                ends.insert({fp.back().a, fp.back().c});
            }
            for (const TypeTriple& t : all_types(n)) {
                CHECK(ends.count({t.a, t.c}) == 1);
            }
        }
    }
}

TEST_CASE("enumeration budget trips") {
    CHECK_THROWS_AS(enumerate_point_chains(4, 2, 2, 10), BudgetError);
}
