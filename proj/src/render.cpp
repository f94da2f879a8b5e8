#include "coxeter/render.hpp"

#include <algorithm>
#include <sstream>

#include "coxeter/center.hpp"
#include "coxeter/error.hpp"
#include "coxeter/inverse.hpp"

namespace coxeter {

namespace {

constexpr int kPixelsPerUnit = 40;

int digits(int v) { return static_cast<int>(std::to_string(v).size()); }

// True when path[k] -> path[k+1] is a unit step up.
bool rises(const std::vector<GridPoint>& path, std::size_t k) {
  return k + 1 < path.size() && path[k + 1].x == path[k].x && path[k + 1].y == path[k].y + 1;
}

void line(std::ostringstream& out, int x1, int y1, int x2, int y2, std::string_view style) {
  out << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
      << "\" " << style << "/>\n";
}

void staircase(std::ostringstream& out, const std::vector<int>& steps, int width,
               std::string_view style) {
  for (std::size_t y = 0; y < steps.size(); ++y) {
    const int top = static_cast<int>(y) + 1;
    const int next = y + 1 < steps.size() ? steps[y + 1] : width;
    line(out, steps[y], top - 1, steps[y], top, style);
    line(out, steps[y], top, next, top, style);
  }
}

}  // namespace

RenderFormat parse_render_format(std::string_view text) {
  if (text == "ascii") return RenderFormat::ascii;
  if (text == "svg") return RenderFormat::svg;
  throw InvalidArgument("unknown render format '" + std::string(text) + "' (ascii|svg)");
}

std::vector<GridPoint> dyck_path_vertices(const Label& a, int m) {
  const int n = a.size();
  std::vector<GridPoint> path{{0, 0}};
  auto push = [&path](GridPoint p) {
    if (!(path.back() == p)) path.push_back(p);
  };
  for (int i = 1; i <= n; ++i) {
    push({a.at(i), i - 1});
    push({a.at(i), i});
  }
  push({m * n + 1, n});
  return path;
}

bool path_within_diagonal(const std::vector<GridPoint>& path, int m) {
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (rises(path, k) && path[k].x > 1 + m * path[k].y) return false;
  }
  return true;
}

bool path_within_prime_bound(const std::vector<GridPoint>& path, int m) {
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (rises(path, k) && path[k].y >= 1 && path[k].x > m * path[k].y) return false;
  }
  return true;
}

DyckDiagram dyck_diagram(const Label& a, int m) {
  if (!a.is_weakly_increasing()) {
    throw InvalidArgument(a.str() +
                          " is not weakly increasing; render it as a labeled Dyck path instead");
  }
  if (!is_m_catalan(a, m)) {
    throw NotALabel(a.str() + " is not an m-Catalan function for m = " + std::to_string(m));
  }
  return {m, a.size(), a, dyck_path_vertices(a, m), {}};
}

DyckDiagram labeled_dyck_diagram(const Label& b, int m) {
  const auto inverse = invert_label(b, m);
  DyckDiagram diagram{m, b.size(), inverse.a, dyck_path_vertices(inverse.a, m), {}};
  for (int y = 0; y < diagram.n; ++y) {
    diagram.cells.push_back({inverse.a.at(y + 1), y, inverse.pi.at(y + 1)});
  }
  return diagram;
}

std::vector<int> read_towers(const DyckDiagram& diagram) {
  auto cells = diagram.cells;
  std::stable_sort(cells.begin(), cells.end(),
                   [](const TowerCell& l, const TowerCell& r) { return l.y < r.y; });
  std::vector<int> out;
  for (const auto& cell : cells) out.push_back(cell.index);
  return out;
}

std::string to_ascii(const DyckDiagram& diagram) {
  const bool wide = diagram.n > 9;
  const int cell_width = wide ? digits(diagram.n) + 2 : 1;
  std::ostringstream out;
  for (int y = diagram.n - 1; y >= 0; --y) {
    const int step = diagram.steps.at(y + 1);
    for (int x = 0; x < diagram.width(); ++x) {
      const auto tower = std::find_if(diagram.cells.begin(), diagram.cells.end(),
                                      [x, y](const TowerCell& c) { return c.x == x && c.y == y; });
      std::string cell;
      if (tower != diagram.cells.end()) {
        cell = wide ? "[" + std::to_string(tower->index) + "]" : std::to_string(tower->index);
        cell.resize(static_cast<std::size_t>(cell_width), ' ');
      } else {
        cell.assign(static_cast<std::size_t>(cell_width), x < step ? '#' : '.');
      }
      out << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_svg(const DyckDiagram& diagram) {
  const int w = diagram.width();
  const int h = diagram.n;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << (w + 2) * kPixelsPerUnit << "\" height=\"" << (h + 2) * kPixelsPerUnit
      << "\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2 << "\">\n"
      << "  <g transform=\"matrix(1 0 0 -1 0 " << h << ")\">\n";
  for (int x = 0; x <= w; ++x) line(out, x, 0, x, h, R"(stroke="#c0c0c0" stroke-width="0.02")");
  for (int y = 0; y <= h; ++y) line(out, 0, y, w, y, R"(stroke="#c0c0c0" stroke-width="0.02")");
  out << "    <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << R"(" fill="none" stroke="black" stroke-width="0.04"/>)" << '\n';
  line(out, 1, 0, w, h, R"(stroke="red" stroke-width="0.05" stroke-dasharray="0.2 0.1")");
  if (!diagram.cells.empty()) {
    std::vector<int> catalan_bound;
    std::vector<int> prime_bound;
    for (int i = 1; i <= h; ++i) {
      catalan_bound.push_back(1 + diagram.m * (i - 1));
      prime_bound.push_back(i == 1 ? 1 : diagram.m * (i - 1));
    }
    staircase(out, catalan_bound, w,
              R"(stroke="red" stroke-width="0.06" stroke-dasharray="0.15 0.1" fill="none")");
    staircase(out, prime_bound, w,
              R"(stroke="blue" stroke-width="0.06" stroke-dasharray="0.15 0.1" fill="none")");
  }
  for (std::size_t k = 0; k + 1 < diagram.path.size(); ++k) {
    const auto& p = diagram.path[k];
    const auto& q = diagram.path[k + 1];
    line(out, p.x, p.y, q.x, q.y, R"(stroke="black" stroke-width="0.12" stroke-linecap="round")");
  }
  out << "  </g>\n";
  for (const auto& cell : diagram.cells) {
    out << "  <text x=\"" << cell.x << ".5\" y=\"" << h - cell.y - 1
        << R"(.5" font-size="0.6" font-family="sans-serif" text-anchor="middle" dominant-baseline="central">)"
        << cell.index << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dyck(const Label& a, int m, RenderFormat format) {
  const auto diagram = dyck_diagram(a, m);
  return format == RenderFormat::svg ? to_svg(diagram) : to_ascii(diagram);
}

std::string render_labeled_dyck(const Label& b, int m, RenderFormat format) {
  const auto diagram = labeled_dyck_diagram(b, m);
  return format == RenderFormat::svg ? to_svg(diagram) : to_ascii(diagram);
}

}  // namespace coxeter
