#include "covernum/io.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "covernum/error.hpp"

namespace covernum {

namespace {

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(trim(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::optional<std::size_t> to_count(std::string_view word) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

std::size_t expect_count(std::string_view word, std::string_view what, std::size_t line_no) {
  if (auto v = to_count(word)) return *v;
  throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer for " +
                   std::string(what) + ", got '" + std::string(word) + "'");
}

// Rejects duplicates in either orientation.
Graph build_checked(std::size_t n, const std::vector<Edge>& edges, std::string_view format) {
  if (n > kMaxVertices) {
    throw CapacityError(std::string(format) + " header declares " + std::to_string(n) +
                        " vertices; at most 64 supported");
  }
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParseError(std::string(format) + ": vertex index out of range in edge (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ") for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw ParseError(std::string(format) + ": self-loop at vertex " + std::to_string(e.u));
    const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      throw ParseError(std::string(format) + ": repeated edge (" + std::to_string(key.u) + "," +
                       std::to_string(key.v) + ")");
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < kGraph6Bias || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                       " outside the printable range 63..126");
    }
  }
  auto sextet = [&](std::size_t i) { return static_cast<unsigned>(text[i] - kGraph6Bias); };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (sextet(0) < 63) {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && sextet(1) == 63) throw CapacityError("graph6: 8-byte size header; at most 64 supported");
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n < 63) throw ParseError("graph6: long size header used for n < 63");
    pos = 4;
  }
  if (n > kMaxVertices) throw CapacityError("graph6: " + std::to_string(n) + " vertices; at most 64 supported");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated bit field");
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing characters after the bit field");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(pos + k / 6) >> (5 - k % 6)) & 1U) throw ParseError("graph6: non-zero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
  }
  unsigned current = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kGraph6Bias));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t line_no = 0;
  std::optional<std::size_t> n, m;
  std::vector<Edge> edges;
  for (auto line : lines) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    if (words.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two integers");
    }
    const std::size_t a = expect_count(words[0], n ? "u" : "n", line_no);
    const std::size_t b = expect_count(words[1], n ? "v" : "m", line_no);
    if (!n) {
      n = a;
      m = b;
      continue;
    }
    if (a >= kMaxVertices || b >= kMaxVertices || a >= *n || b >= *n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": index out of range for n=" +
                       std::to_string(*n));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!n) throw ParseError("edge list: missing 'n m' header");
  if (edges.size() != *m) {
    throw ParseError("edge list: header declares " + std::to_string(*m) + " edges but body has " +
                     std::to_string(edges.size()));
  }
  return build_checked(*n, edges, "edge list");
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_dimacs(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t line_no = 0;
  std::optional<std::size_t> n, m;
  std::vector<Edge> edges;
  for (auto line : lines) {
    ++line_no;
    if (line.empty() || line.front() == 'c') continue;
    const auto words = split_words(line);
    if (words.front() == "p") {
      if (n) throw ParseError("DIMACS line " + std::to_string(line_no) + ": second problem line");
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
        throw ParseError("DIMACS line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      }
      n = expect_count(words[2], "n", line_no);
      m = expect_count(words[3], "m", line_no);
      if (*n > kMaxVertices) {
        throw CapacityError("DIMACS header declares " + std::to_string(*n) + " vertices; at most 64 supported");
      }
    } else if (words.front() == "e") {
      if (!n) throw ParseError("DIMACS line " + std::to_string(line_no) + ": edge before the problem line");
      if (words.size() != 3) throw ParseError("DIMACS line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      const std::size_t a = expect_count(words[1], "u", line_no);
      const std::size_t b = expect_count(words[2], "v", line_no);
      if (a == 0 || b == 0 || a > *n || b > *n) {
        throw ParseError("DIMACS line " + std::to_string(line_no) + ": vertex index out of range 1.." +
                         std::to_string(*n));
      }
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    } else {
      throw ParseError("DIMACS line " + std::to_string(line_no) + ": unknown line type '" +
                       std::string(words.front()) + "'");
    }
  }
  if (!n) throw ParseError("DIMACS: missing 'p edge' problem line");
  if (edges.size() != *m) {
    throw ParseError("DIMACS: header declares " + std::to_string(*m) + " edges but body has " +
                     std::to_string(edges.size()));
  }
  return build_checked(*n, edges, "DIMACS");
}

GraphFormat detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    if (line.empty()) continue;
    if (line.front() == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) continue;
    if (line.starts_with("p ")) return GraphFormat::dimacs;
    const auto words = split_words(line);
    if (words.size() == 2 && to_count(words[0]) && to_count(words[1])) return GraphFormat::edge_list;
    return GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

Graph read_graph(std::string_view text, std::optional<GraphFormat> format) {
  switch (format.value_or(detect_format(text))) {
    case GraphFormat::dimacs:
      return parse_dimacs(text);
    case GraphFormat::edge_list:
      return parse_edge_list(text);
    case GraphFormat::graph6:
      break;
  }
  return parse_graph6(trim(text));
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  return std::nullopt;
}

}  // namespace covernum
