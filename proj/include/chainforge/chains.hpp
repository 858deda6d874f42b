#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "chainforge/grid.hpp"

namespace chainforge {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAChainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A basic chain is stored as (start point, ordered coordinate list): each
// listed coordinate is raised from 0 all the way to d before the next one is
// touched. This reconstruction is unique, so explicit point lists appear
// only in verification paths.
struct BasicChain {
    Point start;
    std::vector<int> coords;  // distinct indices, all zero in start

    int width() const { return static_cast<int>(coords.size()); }
    int length() const { return start.d * width() + 1; }
    std::vector<Point> realize() const;
};

// True iff consecutive points are unit increments and the chain raises each
// coordinate fully before moving on (first raised coordinate starts at 0, a
// coordinate is left only at value d, the last one ends at d).
bool is_basic(const std::vector<Point>& points);

// Which type-level path a chain family traces. The alternative shape raises
// all its coordinates to 1 first and only then walks them up to 2; it exists
// purely as a negative control for the weight assignment.
enum class FootprintStyle { Basic, AntiBasic };

// All chains of the family sharing one start type and width, owned once.
// Lower types own their full-width or symmetric group; upper types own a
// full-width group only when strictly more than k twos separate them from
// the mirror (the symmetric boundary case belongs to the lower end).
struct ChainGroup {
    int n = 0;
    int d = 1;
    int k = 1;
    TypeTriple owner;   // for d = 1 the owner is the layer, stored as (n-m, m, 0)
    int width = 0;
    bool full_width = false;
    bool upper = false;  // owner sits above the middle and chains descend from it

    int owner_layer() const { return owner.layer(); }
    bool symmetric() const;
};

std::vector<ChainGroup> enumerate_chain_groups(int n, int d, int k);

// The 2w+1 (d=2) or w+1 (d=1) types the group's chains visit, owner first.
std::vector<TypeTriple> footprint(const ChainGroup& g,
                                  FootprintStyle style = FootprintStyle::Basic);

// Number of distinct point-level chains in the group (basic style):
// size of the start type times a falling factorial over its zero count.
BigInt group_count(const ChainGroup& g);

// Streams every point-level chain of the family, group by group. Throws
// BudgetError once more than max_chains chains have been emitted.
void for_each_point_chain(
    const std::vector<ChainGroup>& groups, unsigned long long max_chains,
    const std::function<void(std::size_t group_index, const BasicChain&)>& fn);

std::vector<BasicChain> enumerate_point_chains(int n, int d, int k,
                                               unsigned long long max_chains);

}  // namespace chainforge
