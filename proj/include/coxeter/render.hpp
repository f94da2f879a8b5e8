#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxeter/label.hpp"

namespace coxeter {

enum class RenderFormat { ascii, svg };

// Throws InvalidArgument on anything but "ascii" / "svg".
RenderFormat parse_render_format(std::string_view text);

struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Unit cell [x, x+1] x [y, y+1] holding the index written there.
struct TowerCell {
  int x = 0;
  int y = 0;
  int index = 0;
};

// A Dyck path on the (mn+1) x n grid. For a weakly increasing a the path
// runs (0,0) -> (a_1,0) -> (a_1,1) -> (a_2,1) -> ... -> (a_n,n) -> (mn+1,n).
struct DyckDiagram {
  int m = 0;
  int n = 0;
  Label steps;                   // x-position of the vertical step at each height
  std::vector<GridPoint> path;   // vertices, consecutive duplicates removed
  std::vector<TowerCell> cells;  // empty for unlabeled diagrams

  int width() const { return m * n + 1; }
};

// Path vertices of a weakly increasing vector; no further checks.
std::vector<GridPoint> dyck_path_vertices(const Label& a, int m);

// Every vertical step starts weakly left of the diagonal from (1,0) to
// (mn+1,n), i.e. x <= 1 + m*y.
bool path_within_diagonal(const std::vector<GridPoint>& path, int m);

// Vertical steps above height 0 start at x <= m*y (the diagonal shifted one
// unit left).
bool path_within_prime_bound(const std::vector<GridPoint>& path, int m);

// Throws InvalidArgument when a is not weakly increasing (use the labeled
// variant) and NotALabel when it is not m-Catalan.
DyckDiagram dyck_diagram(const Label& a, int m);

// Path of the increasing representative of b's orbit; at height y the cell
// right of the vertical step holds pi_{y+1}, where pi is b's chamber, so the
// cells read bottom to top spell pi. Throws NotALabel.
DyckDiagram labeled_dyck_diagram(const Label& b, int m);

// Indices written in the tower cells, bottom to top.
std::vector<int> read_towers(const DyckDiagram& diagram);

// ASCII: one text row per unit of height, top row first. '#' marks cells
// between the left edge and the path, '.' the rest of the grid, tower cells
// show their index. Cells are one character wide when every index is a
// single digit, otherwise digits(n)+2 wide with indices written "[12]".
std::string to_ascii(const DyckDiagram& diagram);

// SVG 1.1 using lines, rects and text only. Geometry lives in a group
// flipped to path coordinates, so path vertices appear verbatim.
std::string to_svg(const DyckDiagram& diagram);

std::string render_dyck(const Label& a, int m, RenderFormat format);
std::string render_labeled_dyck(const Label& b, int m, RenderFormat format);

}  // namespace coxeter
