#include <sstream>

#include "gridknot/grid.hpp"
#include "gridknot/io.hpp"

namespace gridknot {

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  throw Error(ErrorCode::UnknownFormat, "unknown render format '" + name + "'");
}

namespace {

// Column x sits at character 3(x-1); row y at line 3(n-y).
std::string render_ascii(const GridDiagram& d) {
  const int n = d.size();
  const int width = 3 * n - 2;
  const int height = 3 * n - 2;
  std::vector<std::string> canvas(height, std::string(width, ' '));
  auto line_of = [&](int y) { return 3 * (n - y); };
  for (int y = 1; y <= n; ++y) {
    const Span r = d.row(y);
    for (int c = 3 * (r.lo - 1); c <= 3 * (r.hi - 1); ++c) canvas[line_of(y)][c] = '-';
  }
  for (int x = 1; x <= n; ++x) {
    const Span s = d.column(x);
    for (int l = line_of(s.hi); l <= line_of(s.lo); ++l) canvas[l][3 * (x - 1)] = '|';
  }
  for (auto [x, y] : corners(d)) canvas[line_of(y)][3 * (x - 1)] = '+';
  std::string out;
  for (std::string& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const GridDiagram& d) {
  const int n = d.size();
  constexpr int kCell = 40;
  constexpr int kGap = 6;
  const int size = kCell * (n + 1);
  auto px = [&](int x) { return kCell * x; };
  auto py = [&](int y) { return kCell * (n + 1 - y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<metadata>" << to_json(d).dump() << "</metadata>\n";
  os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  for (int y = 1; y <= n; ++y) {
    const Span r = d.row(y);
    os << "<path class=\"h\" d=\"M" << px(r.lo) << ' ' << py(y);
    for (int x = r.lo + 1; x < r.hi; ++x) {
      if (d.column(x).strictly_contains(y)) {
        os << " L" << px(x) - kGap << ' ' << py(y) << " M" << px(x) + kGap << ' ' << py(y);
      }
    }
    os << " L" << px(r.hi) << ' ' << py(y) << "\"/>\n";
  }
  for (int x = 1; x <= n; ++x) {
    const Span c = d.column(x);
    os << "<line class=\"v\" x1=\"" << px(x) << "\" y1=\"" << py(c.lo) << "\" x2=\"" << px(x)
       << "\" y2=\"" << py(c.hi) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const GridDiagram& d, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace gridknot
