#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pnspan/errors.hpp"
#include "pnspan/graph.hpp"

namespace pnspan {
namespace {

struct RawEdge {
  std::size_t line;
  PointId u;
  PointId v;
  std::string weight;
};

PointId parse_id(const std::string& tok, std::size_t line, std::size_t n) {
  unsigned long long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "invalid vertex id '" + tok + "'");
  if (v >= n) throw ParseError(line, "vertex id " + tok + " out of range for n=" + std::to_string(n));
  return static_cast<PointId>(v);
}

double parse_double_weight(const RawEdge& e) {
  double w = 0.0;
  const auto* end = e.weight.data() + e.weight.size();
  auto [ptr, ec] = std::from_chars(e.weight.data(), end, w);
  if (ec != std::errc() || ptr != end || !std::isfinite(w) || w < 0) {
    throw ParseError(e.line, "invalid weight '" + e.weight + "'");
  }
  return w;
}

template <class T, class Parse>
MetricGraph<T> assemble(std::size_t n, Directedness d, const std::vector<RawEdge>& raw, Parse parse) {
  MetricGraph<T> g(n, d);
  for (const auto& e : raw) {
    if (e.u == e.v) throw ParseError(e.line, "self-loop");
    g.add_edge(e.u, e.v, parse(e));
  }
  return g;
}

}  // namespace

template <class T>
void write_graph(std::ostream& out, const MetricGraph<T>& g) {
  out << (g.directed() ? "directed " : "undirected ") << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) {
    const auto& list = g.neighbors(u);
    const auto it = std::find_if(list.begin(), list.end(), [v = v](const Edge<T>& e) { return e.to == v; });
    out << u << ' ' << v << ' ' << to_text(it->weight) << '\n';
  }
}

template void write_graph(std::ostream&, const FloatGraph&);
template void write_graph(std::ostream&, const ExactGraph&);

AnyGraph read_graph(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  std::optional<std::pair<Directedness, std::size_t>> header;
  std::vector<RawEdge> raw;
  bool exact = false;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream tokens(text);
    if (!header) {
      std::string kind, count, extra;
      tokens >> kind >> count;
      if ((kind != "directed" && kind != "undirected") || count.empty() || (tokens >> extra)) {
        throw ParseError(line, "expected header 'directed|undirected <n>'");
      }
      unsigned long long n = 0;
      auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
      if (ec != std::errc() || ptr != count.data() + count.size()) throw ParseError(line, "invalid vertex count");
      header.emplace(kind == "directed" ? Directedness::Directed : Directedness::Undirected, n);
      continue;
    }
    std::string su, sv, sw, extra;
    tokens >> su >> sv >> sw;
    if (sw.empty() || (tokens >> extra)) throw ParseError(line, "expected 'u v weight'");
    raw.push_back({line, parse_id(su, line, header->second), parse_id(sv, line, header->second), sw});
    if (sw.find('/') != std::string::npos) exact = true;
  }
  if (!header) throw ParseError(line, "missing graph header");
  const auto [dir, n] = *header;
  if (exact) {
    return assemble<Rational>(n, dir, raw, [](const RawEdge& e) {
      Rational w;
      try {
        w = parse_rational(e.weight);
      } catch (const std::invalid_argument& err) {
        throw ParseError(e.line, err.what());
      }
      if (w < 0) throw ParseError(e.line, "negative weight");
      return w;
    });
  }
  return assemble<double>(n, dir, raw, parse_double_weight);
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const AnyGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  std::visit([&out](const auto& graph) { write_graph(out, graph); }, g);
}

}  // namespace pnspan
