#include "ndfas/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ndfas {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T parse_int(std::string_view tok, int line_no) {
  T value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedDigraph parse_ndfas(std::string_view text) {
  std::optional<WeightedDigraph> g;
  int declared_arcs = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (g) throw InputError("line " + std::to_string(line_no) + ": duplicate problem line");
      if (tok.size() != 4 || tok[1] != "ndfas")
        throw InputError("line " + std::to_string(line_no) + ": expected 'p ndfas <n> <m>'");
      const int n = parse_int<int>(tok[2], line_no);
      declared_arcs = parse_int<int>(tok[3], line_no);
      if (n < 0 || declared_arcs < 0) throw InputError("line " + std::to_string(line_no) + ": negative size");
      g.emplace(n);
      continue;
    }
    if (tok[0] == "a") {
      if (!g) throw InputError("line " + std::to_string(line_no) + ": arc before problem line");
      if (tok.size() != 4) throw InputError("line " + std::to_string(line_no) + ": expected 'a <tail> <head> <weight>'");
      const int tail = parse_int<int>(tok[1], line_no);
      const int head = parse_int<int>(tok[2], line_no);
      const Weight w = parse_int<Weight>(tok[3], line_no);
      if (tail < 1 || tail > g->vertex_count() || head < 1 || head > g->vertex_count())
        throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
      if (tail == head) throw InputError("line " + std::to_string(line_no) + ": loops are not allowed");
      g->add_arc(tail - 1, head - 1, w);
      continue;
    }
    throw InputError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!g) throw InputError("missing 'p ndfas' problem line");
  if (g->arc_count() != declared_arcs) {
    throw InputError("declared " + std::to_string(declared_arcs) + " arcs but found " + std::to_string(g->arc_count()));
  }
  return std::move(*g);
}

std::string write_ndfas(const WeightedDigraph& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "c " << c << '\n';
  os << "p ndfas " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) os << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

WeightedDigraph read_ndfas_file(const std::string& path) { return parse_ndfas(read_text_file(path)); }

}  // namespace ndfas
