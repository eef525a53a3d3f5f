#include "satnum/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "satnum/errors.hpp"

namespace satnum {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;  // 0-based offset of the line start
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits on whitespace, parsing each token as a non-negative integer.
std::vector<std::uint64_t> parse_numbers(const Line& line) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  const auto& t = line.text;
  while (i < t.size()) {
    while (i < t.size() && is_space(t[i])) ++i;
    if (i == t.size()) break;
    std::size_t j = i;
    while (j < t.size() && !is_space(t[j])) ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data() + i, t.data() + j, value);
    if (ec != std::errc{} || ptr != t.data() + j) {
      throw ParseError("expected a non-negative integer", line.offset + i + 1);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::size_t max_vertices) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    Line line{text.substr(start, end - start), start};
    std::size_t first = 0;
    while (first < line.text.size() && is_space(line.text[first])) ++first;
    if (first < line.text.size() && line.text[first] != '#') {
      lines.push_back(line);
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing 'n m' header", text.size() + 1);

  const auto header = parse_numbers(lines.front());
  if (header.size() != 2) {
    throw ParseError("header must be 'n m'", lines.front().offset + 1);
  }
  const auto n = header[0];
  const auto m = header[1];
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) +
                         " edges but the file lists " +
                         std::to_string(lines.size() - 1),
                     lines.size() > m + 1 ? lines[m + 1].offset + 1
                                          : text.size() + 1);
  }
  if (n > max_vertices) throw ResourceError("max-vertices", max_vertices, n);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto pair = parse_numbers(lines[i]);
    if (pair.size() != 2) {
      throw ParseError("edge line must be 'u v'", lines[i].offset + 1);
    }
    if (pair[0] >= n || pair[1] >= n) {
      throw ParseError("vertex id out of range", lines[i].offset + 1);
    }
    if (pair[0] == pair[1]) {
      throw ParseError("self-loop", lines[i].offset + 1);
    }
    edges.emplace_back(static_cast<Vertex>(pair[0]),
                       static_cast<Vertex>(pair[1]));
  }
  return Graph(n, edges, max_vertices);
}

Graph read_edge_list(const std::filesystem::path& path,
                     std::size_t max_vertices) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str(), max_vertices);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace satnum
