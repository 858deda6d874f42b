#include "chainforge/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chainforge {

int Point::level() const {
    return std::accumulate(digits.begin(), digits.end(), 0);
}

Point make_point(std::vector<int> digits, int d) {
    if (d < 1) throw std::invalid_argument("point: need d >= 1");
    for (int v : digits) {
        if (v < 0 || v > d) throw std::invalid_argument("point: digit out of [0, d]");
    }
    return Point{std::move(digits), d};
}

TypeTriple make_type(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("type: negative part");
    return TypeTriple{a, b, c};
}

TypeTriple type_of(const Point& p) {
    TypeTriple t;
    for (int v : p.digits) {
        if (v == 0) ++t.a;
        else if (v == 1) ++t.b;
        else if (v == 2) ++t.c;
        else throw std::invalid_argument("type_of: digits above 2 have no type triple");
    }
    return t;
}

BigInt type_size(const TypeTriple& t) {
    return multinomial_ac(t.n(), t.a, t.c);
}

std::vector<TypeTriple> all_types(int n) {
    std::vector<TypeTriple> out;
    for (int a = 0; a <= n; ++a) {
        for (int c = 0; c + a <= n; ++c) out.push_back(TypeTriple{a, n - a - c, c});
    }
    std::sort(out.begin(), out.end(), [](const TypeTriple& x, const TypeTriple& y) {
        return std::pair(x.layer(), x.c) < std::pair(y.layer(), y.c);
    });
    return out;
}

TypeClass classify_type(const TypeTriple& t, int k) {
    TypeClass cls;
    cls.lower = t.a >= t.c;
    cls.upper = t.a <= t.c;
    cls.outer = std::abs(t.layer() - t.n()) >= k;
    return cls;
}

bool forbidden_pair(const Point& x, const Point& y, int k) {
    if (x.n() != y.n() || x.d != y.d) throw std::invalid_argument("forbidden_pair: dimension mismatch");
    if (k < 0) throw std::invalid_argument("forbidden_pair: need k >= 0");
    bool le = true, ge = true;
    int strict = 0;
    for (int i = 0; i < x.n(); ++i) {
        if (x.digits[i] < y.digits[i]) { ge = false; ++strict; }
        else if (x.digits[i] > y.digits[i]) { le = false; ++strict; }
        if (!le && !ge) return false;  // incomparable
    }
    if (strict == 0) return false;  // equal points
    if (le || ge) {
        int differing = 0;
        for (int i = 0; i < x.n(); ++i) differing += x.digits[i] != y.digits[i];
        return differing >= 1 && differing <= k;
    }
    return false;
}

int candidate_modulus(int d, int k) { return d * k + 1; }

int candidate_residue(int n, int d, int k, CandidateVariant variant) {
    long long mid = static_cast<long long>(d) * n;
    long long r = variant == CandidateVariant::Floor ? mid / 2 : (mid + 1) / 2;
    return static_cast<int>(r % candidate_modulus(d, k));
}

BigInt candidate_set_size(int n, int d, int k, CandidateVariant variant) {
    const int mod = candidate_modulus(d, k);
    const int res = candidate_residue(n, d, k, variant);
    auto row = layer_row(n, d);
    BigInt total = 0;
    for (int m = 0; m <= d * n; ++m) {
        if (m % mod == res) total += row[static_cast<std::size_t>(m)];
    }
    return total;
}

long long point_count(int n, int d) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > (1ll << 40)) throw std::overflow_error("point_count: cube too large to enumerate");
        total *= d + 1;
    }
    return total;
}

Point point_from_index(long long index, int n, int d) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(index % (d + 1));
        index /= d + 1;
    }
    return Point{std::move(digits), d};
}

long long point_to_index(const Point& p) {
    long long idx = 0;
    for (int v : p.digits) idx = idx * (p.d + 1) + v;
    return idx;
}

void for_each_point(int n, int d, const std::function<void(const Point&)>& fn) {
    Point p{std::vector<int>(static_cast<std::size_t>(n), 0), d};
    while (true) {
        fn(p);
        int i = n - 1;
        while (i >= 0 && p.digits[static_cast<std::size_t>(i)] == d) {
            p.digits[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++p.digits[static_cast<std::size_t>(i)];
    }
}

PointSet build_candidate_set(int n, int d, int k, CandidateVariant variant) {
    const int mod = candidate_modulus(d, k);
    const int res = candidate_residue(n, d, k, variant);
    PointSet out;
    out.n = n;
    out.d = d;
    out.k = k;
    for_each_point(n, d, [&](const Point& p) {
        if (p.level() % mod == res) out.points.push_back(p);
    });
    // for_each_point runs in lexicographic order already
    return out;
}

std::optional<std::pair<Point, Point>> validate_points(const std::vector<Point>& pts, int k) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (forbidden_pair(pts[i], pts[j], k)) return std::pair(pts[i], pts[j]);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Point, Point>> validate_set(const PointSet& s, int k) {
    return validate_points(s.points, k);
}

std::string point_set_to_json(const PointSet& s) {
    std::string out = "{\"n\":" + std::to_string(s.n) + ",\"d\":" + std::to_string(s.d) +
                      ",\"k\":" + std::to_string(s.k) + ",\"points\":[";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < s.points[i].n(); ++j) {
            if (j) out += ",";
            out += std::to_string(s.points[i].digits[static_cast<std::size_t>(j)]);
        }
        out += "]";
    }
    out += "]}";
    return out;
}

}  // namespace chainforge
