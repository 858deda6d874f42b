#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainforge/binomials.hpp"

namespace chainforge {

// One point of {0,...,d}^n as an explicit digit vector.
struct Point {
    std::vector<int> digits;
    int d = 1;

    int n() const { return static_cast<int>(digits.size()); }
    int level() const;
    bool operator==(const Point&) const = default;
    bool operator<(const Point& rhs) const { return digits < rhs.digits; }
};

Point make_point(std::vector<int> digits, int d);

// Orbit of a point of {0,1,2}^n under coordinate permutation: counts of
// zeros (a), ones (b) and twos (c). Layer index is b + 2c.
struct TypeTriple {
    int a = 0;
    int b = 0;
    int c = 0;

    int n() const { return a + b + c; }
    int layer() const { return b + 2 * c; }
    TypeTriple mirror() const { return {c, b, a}; }
    bool operator==(const TypeTriple&) const = default;
    auto operator<=>(const TypeTriple&) const = default;
};

TypeTriple make_type(int a, int b, int c);
TypeTriple type_of(const Point& p);

// Multinomial n!/(a!b!c!): number of points in the orbit.
BigInt type_size(const TypeTriple& t);

// All triples (a, b, c) with a+b+c = n, ordered by (layer, c).
std::vector<TypeTriple> all_types(int n);

struct TypeClass {
    bool lower = false;  // a >= c
    bool upper = false;  // a <= c
    bool outer = false;  // |layer - n| >= k
};

TypeClass classify_type(const TypeTriple& t, int k);

// The excluded-pair relation: x and y comparable coordinatewise with the
// number of strictly differing coordinates in [1, k]. Symmetric in (x, y).
bool forbidden_pair(const Point& x, const Point& y, int k);

struct PointSet {
    int n = 0;
    int d = 1;
    int k = 0;
    std::vector<Point> points;  // kept sorted lexicographically

    std::size_t size() const { return points.size(); }
    bool operator==(const PointSet&) const = default;
};

enum class CandidateVariant { Floor, Ceil };

// Residue-class candidate {x : |x| = floor(dn/2) or ceil(dn/2) mod (dk+1)}.
int candidate_residue(int n, int d, int k, CandidateVariant variant);
int candidate_modulus(int d, int k);
BigInt candidate_set_size(int n, int d, int k, CandidateVariant variant);
PointSet build_candidate_set(int n, int d, int k,
                             CandidateVariant variant = CandidateVariant::Floor);

// Ok iff no pair of the set is forbidden at width k; otherwise one witness.
std::optional<std::pair<Point, Point>> validate_set(const PointSet& s, int k);
std::optional<std::pair<Point, Point>> validate_points(const std::vector<Point>& pts, int k);

// Lexicographic point enumeration helpers (index <-> digit vector).
long long point_count(int n, int d);
Point point_from_index(long long index, int n, int d);
long long point_to_index(const Point& p);
void for_each_point(int n, int d, const std::function<void(const Point&)>& fn);

std::string point_set_to_json(const PointSet& s);

}  // namespace chainforge
