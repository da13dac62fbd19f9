#include "twosc/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace twosc {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view record) {
  long base = 0;
  if (record.substr(0, kHeader.size()) == kHeader) {
    record.remove_prefix(kHeader.size());
    base = static_cast<long>(kHeader.size());
  }
  auto value_at = [&](std::size_t pos) {
    if (pos >= record.size()) {
      throw ParseError("graph6 record truncated", 1, base + static_cast<long>(pos));
    }
    const int c = static_cast<unsigned char>(record[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126", 1,
                       base + static_cast<long>(pos));
    }
    return c - kBias;
  };
  if (record.empty()) throw ParseError("empty graph6 record", 1, base);

  std::size_t pos = 0;
  long n = value_at(pos++);
  if (n == 63) {
    if (record.size() > 1 && record[1] == 126) {
      throw ParseError("graph6 order exceeds " + std::to_string(kMaxVertices), 1, base + 1);
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(pos++);
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices), 1,
                     base);
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() > expected) {
    throw ParseError("graph6 record has trailing bytes", 1, base + static_cast<long>(expected));
  }

  std::vector<VertexSet> rows(n, 0);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = value_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view record = trim(line);
    if (record.empty()) continue;
    try {
      out.push_back(from_graph6(record));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(number) + ")", number, e.offset());
    }
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  long number = 0;
  std::optional<int> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    if (!n) {
      int value = -1;
      std::string extra;
      if (!(fields >> value) || (fields >> extra) || value < 0) {
        throw ParseError("expected vertex count", number, 0);
      }
      if (value > kMaxVertices) {
        throw ParseError("vertex count " + std::to_string(value) + " exceeds " + std::to_string(kMaxVertices),
                         number, 0);
      }
      n = value;
      continue;
    }
    int u = -1;
    int v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("expected `u v`", number, 0);
    if (u < 0 || v < 0 || u >= *n || v >= *n) throw ParseError("edge endpoint out of range", number, 0);
    if (u == v) throw ParseError("self-loop", number, 0);
    edges.emplace_back(u, v);
  }
  if (!n) throw ParseError("missing vertex count", number + 1, 0);
  std::vector<VertexSet> rows(*n, 0);
  for (const Edge& e : edges) {
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::map<int, std::string>& labels, std::string_view name) {
  auto id = [&](int v) {
    auto it = labels.find(v);
    return it == labels.end() ? std::to_string(v) : "\"" + it->second + "\"";
  };
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << id(v) << ";\n";
  for (const Edge& e : g.edges()) out << "  " << id(e.u) << " -- " << id(e.v) << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::string_view body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream probe(text);
    if (std::isdigit(static_cast<unsigned char>(body.front()))) return {read_edge_list(probe)};
    return read_graph6_stream(probe);
  }
  return {};
}

}  // namespace twosc
