#include "homcfg/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace homcfg::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " out of range: '" + std::string(s) + "'");
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return v;
}

bool skip_line(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Arc arc_from_line(std::string_view line, int lineno) {
  const auto fields = split_ws(line);
  if (fields.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 't u'");
  return Arc{parse_int(fields[0], "t"), parse_int(fields[1], "u")};
}

}  // namespace

std::vector<Arc> read_arc_list(std::istream& in) {
  std::vector<Arc> arcs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    arcs.push_back(arc_from_line(line, lineno));
  }
  return arcs;
}

void write_arc_list(std::ostream& out, const std::vector<Arc>& arcs) {
  for (const Arc& a : arcs) out << a.t << ' ' << a.u << '\n';
}

ArcConfig read_config(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int w = -1;
  Window win;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    if (!have_header) {
      const auto f = split_ws(line);
      if (f.size() != 5 || f[0] != "w" || f[2] != "window") {
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'w <w> window <lo> <hi>'");
      }
      w = static_cast<int>(parse_int(f[1], "w"));
      const Vertex lo = parse_int(f[3], "window lower bound");
      const Vertex hi = parse_int(f[4], "window upper bound");
      if (lo > hi) throw ParseError("window lower bound exceeds upper bound");
      win = Window(lo, hi);
      have_header = true;
      continue;
    }
    arcs.push_back(arc_from_line(line, lineno));
  }
  if (!have_header) throw ParseError("configuration file has no header line");
  try {
    return ArcConfig(CyContext(w), win, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void write_config(std::ostream& out, const ArcConfig& cfg) {
  out << "w " << cfg.ctx().w() << " window " << cfg.window().lo << ' ' << cfg.window().hi << '\n';
  for (const Arc& a : cfg.arcs()) out << a.t << ' ' << a.u << '\n';
}

Arc parse_arc(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected an arc 't,u', got '" + std::string(text) + "'");
  return Arc{parse_int(text.substr(0, comma), "t"), parse_int(text.substr(comma + 1), "u")};
}

Window parse_window(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..", 1);
  if (dots == std::string_view::npos) throw ParseError("expected a window 'lo..hi', got '" + std::string(text) + "'");
  const Vertex lo = parse_int(text.substr(0, dots), "window lower bound");
  const Vertex hi = parse_int(text.substr(dots + 2), "window upper bound");
  if (lo > hi) throw ParseError("window lower bound exceeds upper bound");
  return Window(lo, hi);
}

std::string config_line(const ArcConfig& cfg) { return to_string(cfg); }

std::string diagonal_line(const std::vector<Diagonal>& diagonals) {
  std::string out;
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    if (i) out += ' ';
    out += to_string(diagonals[i]);
  }
  return out;
}

NCPartition parse_partition(std::string_view text) {
  text = trim(text);
  std::vector<std::vector<Label>> blocks;
  std::vector<Label> ground;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '{') throw ParseError("expected '{' in partition '" + std::string(text) + "'");
    const auto close = text.find('}', i);
    if (close == std::string_view::npos) throw ParseError("unterminated block in '" + std::string(text) + "'");
    std::vector<Label> block;
    std::string_view body = text.substr(i + 1, close - i - 1);
    while (!trim(body).empty()) {
      const auto comma = body.find(',');
      block.push_back(parse_int(body.substr(0, comma), "partition element"));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    ground.insert(ground.end(), block.begin(), block.end());
    blocks.push_back(std::move(block));
    i = close + 1;
  }
  try {
    return make_partition(std::move(ground), std::move(blocks));
  } catch (const MalformedPartition& e) {
    throw ParseError(e.what());
  }
}

NakayamaObject parse_nakayama(std::string_view text, int n, int m, int degree_for_sequence) {
  text = trim(text);
  NakayamaObject obj{n, m, 0, 1, 1};
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unterminated module sequence '" + std::string(text) + "'");
    std::vector<long long> seq;
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
      const auto comma = body.find(',');
      seq.push_back(parse_int(body.substr(0, comma), "module sequence entry"));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    // (a_l, ..., a_1) must descend by one.
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (seq[k] != seq[k - 1] - 1) throw ParseError("module sequence must descend by one");
    }
    obj.degree = degree_for_sequence;
    obj.socle = static_cast<int>(seq.back());
    obj.length = static_cast<int>(seq.size());
  } else {
    bool deg = false, soc = false, len = false;
    for (auto field : split_ws(text)) {
      const auto colon = field.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected key:value in '" + std::string(field) + "'");
      const auto key = field.substr(0, colon);
      const int value = static_cast<int>(parse_int(field.substr(colon + 1), key));
      if (key == "deg") {
        obj.degree = value;
        deg = true;
      } else if (key == "socle") {
        obj.socle = value;
        soc = true;
      } else if (key == "len") {
        obj.length = value;
        len = true;
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'");
      }
    }
    if (!deg || !soc || !len) throw ParseError("object needs deg, socle and len");
  }
  try {
    require_valid(obj);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return obj;
}

}  // namespace homcfg::io
