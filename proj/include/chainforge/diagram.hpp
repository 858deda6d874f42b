#pragma once

#include <string>
#include <vector>

namespace chainforge {

enum class CellStyle { Plain, HighlightSize, HighlightWeight };

struct DiagramCell {
    int a = 0;
    int c = 0;
    CellStyle style = CellStyle::Plain;
    std::string annotation;  // a sign or multiplicity, rendered inside the cell
};

// Staircase plot of the types of {0,1,2}^n: rows are the zero count a (top
// row a = n), columns the two count c, one unit cell per type with a+c <= n.
// The middle diagonal a = c is shaded in every rendering.
struct DiagramSpec {
    int n = 0;
    int k = 0;  // informational, shown in the header
    std::vector<DiagramCell> cells;
};

// Byte-deterministic SVG 1.1 (integer coordinates only).
std::string render_staircase_svg(const DiagramSpec& spec);
// One two-character cell per type; same information, plain text.
std::string render_staircase_ascii(const DiagramSpec& spec);

DiagramSpec diagram_plain(int n);
// The types the chain group starting at (a, c) passes through.
DiagramSpec diagram_footprint(int n, int k, int a, int c);
// Cells contributing to the weight recursion at a lower outer type (a, c):
// type sizes in blue with their signs, referenced weights in grey.
DiagramSpec diagram_contributions(int n, int k, int a, int c);

}  // namespace chainforge
