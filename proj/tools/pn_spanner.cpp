// pn_spanner: command-line workbench for proximal-navigation graphs.
//
// Exit codes: 0 = success / property holds, 1 = property fails (witness in
// the JSON report), 2 = usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "pnspan/any_space.hpp"
#include "pnspan/construct.hpp"
#include "pnspan/counterexample.hpp"
#include "pnspan/errors.hpp"
#include "pnspan/graph.hpp"
#include "pnspan/navigate.hpp"
#include "pnspan/report.hpp"
#include "pnspan/spanner.hpp"

namespace {

using namespace pnspan;

constexpr int kPass = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct SpaceOptions {
  std::string points;
  std::string kind = "euclidean";
  std::optional<std::size_t> dim;
  std::optional<std::uint32_t> index;
  std::string eps;

  void add_to(CLI::App* cmd, bool with_dim = true) {
    cmd->add_option("--points", points, "Point-set file");
    cmd->add_option("--space", kind, "Space kind: euclidean|hamming|table|counterexample")
        ->check(CLI::IsMember({"euclidean", "hamming", "table", "counterexample"}));
    if (with_dim) cmd->add_option("--dim", dim, "Expected Euclidean dimension");
    cmd->add_option("--i", index, "Counterexample index i");
    cmd->add_option("--eps", eps, "Counterexample epsilon as p/q (default 1/(10(i+1)(i+2)))");
  }

  bool counterexample() const { return kind == "counterexample" || (points.empty() && index); }

  Rational epsilon() const {
    if (eps.empty()) return default_epsilon(index.value_or(0));
    try {
      return parse_rational(eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--eps: ") + e.what());
    }
  }

  AnySpace load() const {
    if (counterexample()) {
      if (!index) throw UsageError("counterexample spaces need --i");
      return CounterexampleSpace(*index, epsilon());
    }
    if (points.empty()) throw UsageError("--points is required");
    return load_points(points, parse_space_kind(kind), dim);
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Rational parse_threshold(const std::string& text) {
  try {
    if (text.find('/') != std::string::npos) return parse_rational(text);
    const auto dot = text.find('.');
    if (dot != std::string::npos && text.find_first_of("eE") == std::string::npos) {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      Rational r = parse_rational(digits.empty() ? "0" : digits);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
      r /= scale;
      return r;
    }
    if (dot == std::string::npos && text.find_first_of("eE") == std::string::npos) return parse_rational(text);
    return Rational(std::stod(text));
  } catch (const std::exception&) {
    throw UsageError("invalid threshold '" + text + "'");
  }
}

// Runs `f(graph, space)` when the graph scalar matches the space scalar and
// every stored weight equals the metric distance.
template <class F>
int with_graph_and_space(const AnyGraph& graph, const AnySpace& space, F&& f) {
  return std::visit(
      [&](const auto& g, const auto& s) -> int {
        using G = std::decay_t<decltype(g)>;
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<typename G::value_type, distance_t<S>>) {
          if (g.size() != s.size()) {
            throw UsageError("graph has " + std::to_string(g.size()) + " vertices but the space has " +
                             std::to_string(s.size()) + " points");
          }
          if (const auto bad = find_weight_mismatch(g, s)) {
            throw UsageError("edge " + std::to_string(bad->first) + " " + std::to_string(bad->second) +
                             " does not carry the metric distance");
          }
          return f(g, s);
        } else {
          throw UsageError("graph weights are " +
                           std::string(ScalarTraits<typename G::value_type>::exact ? "exact" : "floating") +
                           " but the space is not");
        }
      },
      graph, space);
}

// Uniform double in [0,1) from the top 53 bits; fixed formula so outputs are
// identical across standard libraries.
double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void generate(std::ostream& out, const std::string& kind, std::size_t n, std::size_t dim, std::size_t bits,
              std::uint64_t seed) {
  if (n == 0) throw UsageError("--n must be positive (empty point set)");
  std::mt19937_64 rng(seed);
  if (kind == "euclidean") {
    if (dim == 0) throw UsageError("--dim must be positive");
    std::set<std::vector<double>> seen;
    while (seen.size() < n) {
      std::vector<double> p(dim);
      for (auto& c : p) c = unit_double(rng);
      if (!seen.insert(p).second) continue;
      for (std::size_t k = 0; k < dim; ++k) out << (k ? " " : "") << ScalarTraits<double>::to_text(p[k]);
      out << '\n';
    }
    return;
  }
  if (bits == 0) throw UsageError("--bits must be positive");
  if (bits < 64 && n > (std::uint64_t{1} << bits)) throw UsageError("more points than distinct bit strings");
  std::set<std::string> seen;
  while (seen.size() < n) {
    std::string s(bits, '0');
    for (auto& c : s) c = (rng() >> 63) ? '1' : '0';
    if (seen.insert(s).second) out << s << '\n';
  }
}

template <class Report>
void emit_json(Output& out, const Report& report) {
  out.stream() << report.dump(2) << '\n';
}

template <class T>
json pair_list_json(const std::vector<PairRatio<T>>& pairs) {
  json list = json::array();
  for (const auto& p : pairs) {
    list.push_back({{"u", p.u},
                    {"v", p.v},
                    {"metric", value_json(p.metric)},
                    {"path_length", value_json(p.path)},
                    {"ratio", value_json(p.ratio)}});
  }
  return list;
}

int run(int argc, char** argv) {
  CLI::App app{"Proximal-navigation graph and spanner workbench"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind = "euclidean", gen_out;
  std::size_t gen_n = 0, gen_dim = 2, gen_bits = 16;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random point set");
  gen->add_option("--kind", gen_kind, "euclidean|hamming")->check(CLI::IsMember({"euclidean", "hamming"}));
  gen->add_option("--n", gen_n, "Number of points")->required();
  gen->add_option("--dim", gen_dim, "Euclidean dimension");
  gen->add_option("--bits", gen_bits, "Hamming string length");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // build
  std::string build_kind, build_out, build_trace;
  SpaceOptions build_space;
  auto* build = app.add_subcommand("build", "Build a graph over a point set");
  build->add_option("kind", build_kind, "hsp|delaunay|complete|counterexample")
      ->required()
      ->check(CLI::IsMember({"hsp", "delaunay", "complete", "counterexample"}));
  build_space.add_to(build);
  build->add_option("--out", build_out, "Graph output path (default stdout)");
  build->add_option("--trace", build_trace, "Write HSP round traces as JSON");

  // check
  std::string check_what, check_graph, check_out;
  SpaceOptions check_space;
  auto* check = app.add_subcommand("check", "Check metric axioms, the PN property or the HSP lune property");
  check->add_option("what", check_what, "metric|pn|lune")->required()->check(CLI::IsMember({"metric", "pn", "lune"}));
  check_space.add_to(check);
  check->add_option("--graph", check_graph, "Graph file (pn, lune)");
  check->add_option("--out", check_out, "Report path (default stdout)");

  // route
  std::string route_graph, route_out;
  SpaceOptions route_space;
  PointId route_from = 0, route_to = 0;
  auto* route = app.add_subcommand("route", "Greedy proximity path between two vertices");
  route_space.add_to(route);
  route->add_option("--graph", route_graph, "Graph file")->required();
  route->add_option("--from", route_from, "Source vertex")->required();
  route->add_option("--to", route_to, "Target vertex")->required();
  route->add_option("--out", route_out, "Report path (default stdout)");

  // stretch
  std::string stretch_graph, stretch_out, stretch_t, stretch_format = "json";
  bool stretch_greedy = false, stretch_full = false;
  SpaceOptions stretch_space;
  auto* stretch_cmd = app.add_subcommand("stretch", "Stretch factor of a graph");
  stretch_space.add_to(stretch_cmd);
  stretch_cmd->add_option("--graph", stretch_graph, "Graph file")->required();
  stretch_cmd->add_option("--t", stretch_t, "Report whether the graph is a t-spanner (exit 1 if not)");
  stretch_cmd->add_flag("--greedy", stretch_greedy, "Use greedy proximity paths instead of shortest paths");
  stretch_cmd->add_flag("--full", stretch_full, "Include every ordered pair");
  stretch_cmd->add_option("--format", stretch_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  stretch_cmd->add_option("--out", stretch_out, "Report path (default stdout)");

  // sweep
  std::string sweep_what, sweep_out;
  std::uint32_t sweep_i_min = 1, sweep_i_max = 30;
  std::size_t sweep_n_min = 50, sweep_n_max = 500, sweep_step = 50, sweep_trials = 10, sweep_dim = 2;
  std::uint64_t sweep_seed = 1;
  auto* sweep = app.add_subcommand("sweep", "Emit plot-ready CSV curves");
  sweep->add_option("what", sweep_what, "counterexample|hsp|delaunay")
      ->required()
      ->check(CLI::IsMember({"counterexample", "hsp", "delaunay"}));
  sweep->add_option("--i-min", sweep_i_min, "First counterexample index");
  sweep->add_option("--i-max", sweep_i_max, "Last counterexample index");
  sweep->add_option("--n-min", sweep_n_min, "Smallest point count");
  sweep->add_option("--n-max", sweep_n_max, "Largest point count");
  sweep->add_option("--step", sweep_step, "Point count step");
  sweep->add_option("--trials", sweep_trials, "Seeds per point count");
  sweep->add_option("--dim", sweep_dim, "Euclidean dimension");
  sweep->add_option("--seed", sweep_seed, "Base seed");
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");

  // counterexample verify | table
  auto* ce = app.add_subcommand("counterexample", "Counterexample family tools");
  ce->require_subcommand(1);
  std::uint32_t verify_i_max = 10;
  std::string verify_eps, verify_out;
  auto* verify = ce->add_subcommand("verify", "Verify the family claims for i = 0..i_max");
  verify->add_option("--i-max", verify_i_max, "Largest index");
  verify->add_option("--eps", verify_eps, "Epsilon as p/q (default 1/(10(i_max+1)(i_max+2)))");
  verify->add_option("--out", verify_out, "Report path (default stdout)");
  std::uint32_t table_i = 3;
  std::string table_eps, table_out, table_format = "csv";
  auto* table = ce->add_subcommand("table", "Distance table of f_0..f_i, f_inf");
  table->add_option("--i", table_i, "Index i");
  table->add_option("--eps", table_eps, "Epsilon as p/q");
  table->add_option("--format", table_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (gen->parsed()) {
    Output out(gen_out);
    generate(out.stream(), gen_kind, gen_n, gen_dim, gen_bits, gen_seed);
    return kPass;
  }

  if (build->parsed()) {
    Output out(build_out);
    if (build_kind == "counterexample") {
      if (!build_space.index) throw UsageError("build counterexample needs --i");
      const auto inst = build_counterexample_graph(*build_space.index, build_space.epsilon());
      write_graph(out.stream(), inst.graph);
      return kPass;
    }
    const AnySpace space = build_space.load();
    return std::visit(
        [&](const auto& s) -> int {
          if (build_kind == "complete") {
            write_graph(out.stream(), build_complete(s));
          } else if (build_kind == "hsp") {
            const auto result = build_hsp(s);
            write_graph(out.stream(), result.graph);
            if (!build_trace.empty()) {
              Output trace(build_trace);
              trace.stream() << to_json(result.traces).dump(2) << '\n';
            }
          } else if constexpr (std::is_same_v<std::decay_t<decltype(s)>, EuclideanSpace>) {
            write_graph(out.stream(), build_delaunay(s));
          } else {
            throw UsageError("delaunay needs a 2-D euclidean point set");
          }
          return kPass;
        },
        space);
  }

  if (check->parsed()) {
    Output out(check_out);
    const AnySpace space = check_space.load();
    if (check_what == "metric") {
      return std::visit(
          [&](const auto& s) {
            const auto violations = check_metric_axioms(s);
            emit_json(out, to_json(violations));
            return violations.empty() ? kPass : kPropertyFails;
          },
          space);
    }
    if (check_graph.empty()) throw UsageError("check " + check_what + " needs --graph");
    return with_graph_and_space(read_graph_file(check_graph), space, [&](const auto& g, const auto& s) {
      const auto verdict = check_what == "pn" ? is_pn_graph(g, s) : check_lune(g, s);
      emit_json(out, to_json(verdict, check_what));
      return verdict.holds ? kPass : kPropertyFails;
    });
  }

  if (route->parsed()) {
    Output out(route_out);
    return with_graph_and_space(read_graph_file(route_graph), route_space.load(), [&](const auto& g, const auto& s) {
      if (route_from >= g.size() || route_to >= g.size()) throw UsageError("--from/--to out of range");
      if (route_from == route_to) throw UsageError("--from and --to must differ");
      const auto result = proximity_path(g, s, route_from, route_to);
      emit_json(out, to_json(result));
      return result.reached() ? kPass : kPropertyFails;
    });
  }

  if (stretch_cmd->parsed()) {
    Output out(stretch_out);
    if (stretch_format == "csv" && !stretch_full) throw UsageError("--format csv needs --full");
    return with_graph_and_space(
        read_graph_file(stretch_graph), stretch_space.load(), [&](const auto& g, const auto& s) -> int {
          using T = typename std::decay_t<decltype(g)>::value_type;
          StretchReport<T> report;
          try {
            report = stretch_greedy ? greedy_stretch(g, s, stretch_full) : stretch(g, s, stretch_full);
          } catch (const NotNavigableError& e) {
            emit_json(out, json{{"property", "pn"}, {"holds", false}, {"witness", {e.source(), e.target()}}});
            return kPropertyFails;
          } catch (const DisconnectedGraphError& e) {
            emit_json(out, json{{"property", "connected"}, {"holds", false}, {"witness", {e.from(), e.to()}}});
            return kPropertyFails;
          }
          if (stretch_format == "csv") {
            out.stream() << pairs_csv(report);
            return kPass;
          }
          json j = to_json(report);
          j["mode"] = stretch_greedy ? "greedy" : "shortest_path";
          int code = kPass;
          if (!stretch_t.empty()) {
            const Rational t = parse_threshold(stretch_t);
            bool holds = false;
            if constexpr (ScalarTraits<T>::exact) {
              holds = report.stretch <= t;
            } else {
              holds = report.stretch <= t.get_d();
            }
            j["t"] = stretch_t;
            j["is_t_spanner"] = holds;
            code = holds ? kPass : kPropertyFails;
          }
          if (stretch_full) j["pairs"] = pair_list_json(*report.pairs);
          emit_json(out, j);
          return code;
        });
  }

  if (sweep->parsed()) {
    Output out(sweep_out);
    auto& os = out.stream();
    if (sweep_what == "counterexample") {
      if (sweep_i_min > sweep_i_max) throw UsageError("--i-min exceeds --i-max");
      os << "i,harmonic,harmonic_decimal,stretch,stretch_decimal\n";
      for (std::uint32_t i = sweep_i_min; i <= sweep_i_max; ++i) {
        const auto inst = build_counterexample_graph(i);
        const auto h = harmonic(i + 1);
        const auto st = stretch(inst.graph, inst.space).stretch;
        os << i << ',' << to_fraction_string(h) << ',' << to_text(h.get_d()) << ',' << to_fraction_string(st) << ','
           << to_text(st.get_d()) << '\n';
      }
      return kPass;
    }
    if (sweep_trials == 0) throw UsageError("--trials must be positive");
    if (sweep_step == 0 || sweep_n_min == 0 || sweep_n_min > sweep_n_max) throw UsageError("invalid n range");
    if (sweep_what == "delaunay" && sweep_dim != 2) throw UsageError("delaunay sweeps need --dim 2");
    os << "n,trial,seed,edges,stretch\n";
    for (std::size_t n = sweep_n_min; n <= sweep_n_max; n += sweep_step) {
      for (std::size_t trial = 0; trial < sweep_trials; ++trial) {
        const std::uint64_t seed = sweep_seed + trial;
        std::stringstream points;
        generate(points, "euclidean", n, sweep_dim, 0, seed);
        const auto space = parse_euclidean(points, sweep_dim);
        const FloatGraph g = sweep_what == "hsp" ? build_hsp(space).graph : build_delaunay(space);
        os << n << ',' << trial << ',' << seed << ',' << g.edge_count() << ','
           << to_text(stretch(g, space).stretch) << '\n';
      }
    }
    return kPass;
  }

  if (verify->parsed()) {
    Output out(verify_out);
    Rational eps = default_epsilon(verify_i_max);
    if (!verify_eps.empty()) eps = parse_threshold(verify_eps);
    const auto report = verify_family(verify_i_max, eps);
    emit_json(out, to_json(report));
    return report.passed() ? kPass : kPropertyFails;
  }

  if (table->parsed()) {
    Output out(table_out);
    const CounterexampleSpace space(table_i, table_eps.empty() ? default_epsilon(table_i) : parse_threshold(table_eps));
    if (table_format == "csv") {
      out.stream() << distance_table_csv(space);
    } else {
      json rows = json::array();
      for (PointId u = 0; u < space.size(); ++u) {
        json row = json::array();
        for (PointId v = 0; v < space.size(); ++v) row.push_back(to_fraction_string(space.distance(u, v)));
        rows.push_back(std::move(row));
      }
      emit_json(out, json{{"i", table_i}, {"eps", to_fraction_string(space.epsilon())}, {"distances", rows}});
    }
    return kPass;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "pn_spanner: " << e.what() << '\n';
    return kUsage;
  }
}
