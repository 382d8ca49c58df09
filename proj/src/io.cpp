#include "gridknot/io.hpp"

#include <fstream>
#include <sstream>

namespace gridknot {

std::string to_text(const GridDiagram& d) {
  std::string out = std::to_string(d.size()) + "\n";
  for (int x = 1; x <= d.size(); ++x) {
    if (x > 1) out += ' ';
    out += std::to_string(d.column(x).lo) + "-" + std::to_string(d.column(x).hi);
  }
  return out + "\n";
}

GridDiagram parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  if (!std::getline(in, first)) throw Error(ErrorCode::ParseError, "empty grid text");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(first, &used);
    if (first.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "first line must be the grid size");
  }
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  for (char& c : rest) {
    if (c == ',' || c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  std::istringstream pairs(rest);
  std::vector<Span> cols;
  std::string token;
  while (pairs >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
      throw Error(ErrorCode::ParseError, "bad column span '" + token + "'");
    }
    try {
      size_t a = 0, b = 0;
      const int lo = std::stoi(token.substr(0, dash), &a);
      const int hi = std::stoi(token.substr(dash + 1), &b);
      if (a != dash || b != token.size() - dash - 1) throw std::invalid_argument("");
      cols.push_back({lo, hi});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad column span '" + token + "'");
    }
  }
  return GridDiagram::validate(n, std::move(cols));
}

Json to_json(const GridDiagram& d) {
  Json cols = Json::array();
  for (const Span& c : d.columns()) cols.push_back({c.lo, c.hi});
  return Json{{"n", d.size()}, {"columns", cols}};
}

GridDiagram grid_from_json(const Json& j) {
  try {
    std::vector<Span> cols;
    for (const auto& c : j.at("columns")) cols.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return GridDiagram::validate(j.at("n").get<int>(), std::move(cols));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad grid JSON: ") + e.what());
  }
}

GridDiagram parse_grid(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    try {
      return grid_from_json(Json::parse(content));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return parse_text(content.substr(first == std::string::npos ? 0 : first));
}

GridDiagram read_grid_file(const std::string& path) { return parse_grid(read_file(path)); }

namespace {

MoveKind kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::InteriorMerge, MoveKind::ExteriorMerge, MoveKind::Divide,
                     MoveKind::InteriorExchange, MoveKind::ExteriorExchange, MoveKind::Rotation}) {
    if (s == to_string(k)) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown move kind '" + s + "'");
}

Direction direction_from_string(const std::string& s) {
  for (Direction d : {Direction::TopToBottom, Direction::BottomToTop, Direction::LeftToRight,
                      Direction::RightToLeft}) {
    if (s == to_string(d)) return d;
  }
  throw Error(ErrorCode::ParseError, "unknown rotation direction '" + s + "'");
}

const char* placement_name(const CromwellMove& m) {
  if (m.axis == Axis::Horizontal) return m.flag ? "top" : "bottom";
  return m.flag ? "right" : "left";
}

}  // namespace

Json to_json(const CromwellMove& m) {
  Json site = Json::object();
  switch (m.kind) {
    case MoveKind::InteriorExchange: site["level"] = m.level; break;
    case MoveKind::ExteriorExchange: break;
    case MoveKind::InteriorMerge: site["edge"] = m.level; break;
    case MoveKind::ExteriorMerge:
      site["edge"] = m.level;
      site["placement"] = placement_name(m);
      break;
    case MoveKind::Divide:
      site["level"] = m.level;
      site["insert_at"] = m.insert_at;
      site["low_end_high"] = m.flag;
      site["exterior"] = m.exterior;
      break;
    case MoveKind::Rotation: site["direction"] = to_string(m.direction); break;
  }
  return Json{{"kind", to_string(m.kind)}, {"axis", to_string(m.axis)}, {"site", site}};
}

CromwellMove move_from_json(const Json& j) {
  try {
    const MoveKind kind = kind_from_string(j.at("kind").get<std::string>());
    const Json site = j.value("site", Json::object());
    if (kind == MoveKind::Rotation) {
      return rotation(direction_from_string(site.at("direction").get<std::string>()));
    }
    const std::string axis_name = j.at("axis").get<std::string>();
    if (axis_name != "Horizontal" && axis_name != "Vertical") {
      throw Error(ErrorCode::ParseError, "unknown axis '" + axis_name + "'");
    }
    const Axis axis = axis_name == "Horizontal" ? Axis::Horizontal : Axis::Vertical;
    switch (kind) {
      case MoveKind::InteriorExchange: return interior_exchange(axis, site.at("level").get<int>());
      case MoveKind::ExteriorExchange: return exterior_exchange(axis);
      case MoveKind::InteriorMerge: return interior_merge(axis, site.at("edge").get<int>());
      case MoveKind::ExteriorMerge: {
        const std::string p = site.at("placement").get<std::string>();
        if (p != "top" && p != "bottom" && p != "left" && p != "right") {
          throw Error(ErrorCode::ParseError, "unknown placement '" + p + "'");
        }
        return exterior_merge(axis, site.at("edge").get<int>(), p == "top" || p == "right");
      }
      case MoveKind::Divide:
        return divide(axis, site.at("level").get<int>(), site.at("insert_at").get<int>(),
                      site.value("low_end_high", false), site.value("exterior", false));
      default: break;
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad move JSON: ") + e.what());
  }
  throw Error(ErrorCode::ParseError, "bad move JSON");
}

Json to_json(const std::vector<CromwellMove>& moves) {
  Json arr = Json::array();
  for (const auto& m : moves) arr.push_back(to_json(m));
  return arr;
}

std::vector<CromwellMove> moves_from_json(const Json& j) {
  std::vector<CromwellMove> out;
  for (const auto& m : j) out.push_back(move_from_json(m));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace gridknot
