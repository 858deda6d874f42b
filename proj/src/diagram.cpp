#include "chainforge/diagram.hpp"

#include <map>
#include <stdexcept>

#include "chainforge/chains.hpp"

namespace chainforge {

namespace {

constexpr int kCell = 28;
constexpr int kMargin = 8;

const char* fill_for(CellStyle style, bool middle) {
    switch (style) {
        case CellStyle::HighlightSize: return "#9ecbff";
        case CellStyle::HighlightWeight: return "#c2c2c2";
        case CellStyle::Plain: break;
    }
    return middle ? "#e8e8e8" : "#ffffff";
}

}  // namespace

std::string render_staircase_svg(const DiagramSpec& spec) {
    const int n = spec.n;
    if (n < 0) throw std::invalid_argument("render_staircase_svg: negative n");
    std::map<std::pair<int, int>, const DiagramCell*> overlay;
    for (const DiagramCell& cell : spec.cells) overlay[{cell.a, cell.c}] = &cell;

    const int side = (n + 1) * kCell + 2 * kMargin;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(side) + "\" height=\"" + std::to_string(side) + "\">\n";
    out += "<title>types of the cube, n=" + std::to_string(n) +
           (spec.k > 0 ? ", k=" + std::to_string(spec.k) : "") + "</title>\n";
    for (int a = n; a >= 0; --a) {
        for (int c = 0; a + c <= n; ++c) {
            const int x = kMargin + c * kCell;
            const int y = kMargin + (n - a) * kCell;
            const DiagramCell* cell = nullptr;
            if (auto it = overlay.find({a, c}); it != overlay.end()) cell = it->second;
            const char* fill = fill_for(cell ? cell->style : CellStyle::Plain, a == c);
            out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(kCell) + "\" height=\"" + std::to_string(kCell) +
                   "\" fill=\"" + fill + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
            if (cell && !cell->annotation.empty()) {
                out += "<text x=\"" + std::to_string(x + kCell / 2) + "\" y=\"" +
                       std::to_string(y + kCell / 2 + 5) +
                       "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" +
                       cell->annotation + "</text>\n";
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_staircase_ascii(const DiagramSpec& spec) {
    const int n = spec.n;
    std::map<std::pair<int, int>, const DiagramCell*> overlay;
    for (const DiagramCell& cell : spec.cells) overlay[{cell.a, cell.c}] = &cell;

    std::string out = "staircase n=" + std::to_string(n) +
                      (spec.k > 0 ? " k=" + std::to_string(spec.k) : "") + "\n";
    for (int a = n; a >= 0; --a) {
        std::string line = "a=" + std::to_string(a) + (a < 10 ? "  " : " ") + "|";
        for (int c = 0; a + c <= n; ++c) {
            const DiagramCell* cell = nullptr;
            if (auto it = overlay.find({a, c}); it != overlay.end()) cell = it->second;
            char style_ch = a == c ? '=' : '.';
            if (cell) {
                style_ch = cell->style == CellStyle::HighlightSize
                               ? 'S'
                               : cell->style == CellStyle::HighlightWeight ? 'W' : style_ch;
            }
            char ann_ch = cell && !cell->annotation.empty() ? cell->annotation[0] : ' ';
            line += style_ch;
            line += ann_ch;
        }
        out += line + "\n";
    }
    return out;
}

DiagramSpec diagram_plain(int n) { return DiagramSpec{n, 0, {}}; }

DiagramSpec diagram_footprint(int n, int k, int a, int c) {
    if (a < 0 || c < 0 || a + c > n) throw std::invalid_argument("diagram_footprint: type outside simplex");
    DiagramSpec spec{n, k, {}};
    ChainGroup g;
    g.n = n;
    g.d = 2;
    g.k = k;
    g.owner = TypeTriple{a, n - a - c, c};
    g.upper = c - a > k;
    g.width = g.upper || a - c >= k ? k : a - c;
    g.full_width = g.width == k;
    for (const TypeTriple& t : footprint(g)) {
        spec.cells.push_back({t.a, t.c, CellStyle::HighlightSize, ""});
    }
    return spec;
}

DiagramSpec diagram_contributions(int n, int k, int a, int c) {
    if (a - c < k || a + c > n) {
        throw std::invalid_argument("diagram_contributions: expects a lower outer type (a - c >= k)");
    }
    DiagramSpec spec{n, k, {}};
    auto add = [&](int aa, int cc, CellStyle style, const char* ann) {
        if (aa < 0 || cc < 0 || aa + cc > n) return;
        spec.cells.push_back({aa, cc, style, ann});
    };
    add(a, c, CellStyle::HighlightSize, "+");
    add(a + 1, c - 1, CellStyle::HighlightSize, "-");
    add(a + 1, c, CellStyle::HighlightWeight, "-");
    add(a + 1 + k, c - 1 - k, CellStyle::HighlightWeight, "+");
    add(a + 1 + k, c - k, CellStyle::HighlightWeight, "+");
    return spec;
}

}  // namespace chainforge
