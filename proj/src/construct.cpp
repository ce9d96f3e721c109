#include "pnspan/construct.hpp"

namespace pnspan {

CounterexampleGraph build_counterexample_graph(std::uint32_t i, const Rational& eps) {
  if (eps <= 0) throw ParameterError("epsilon must be positive");
  const Rational bound = default_epsilon(i);
  if (eps > bound) {
    throw ParameterError("epsilon " + to_fraction_string(eps) + " exceeds the safe bound 1/(10(i+1)(i+2)) = " +
                         to_fraction_string(bound) + " for i=" + std::to_string(i));
  }
  CounterexampleSpace space(i, eps);
  ExactGraph g(space.size(), Directedness::Undirected);
  for (PointId k = 0; k < i; ++k) g.add_edge(k, k + 1, space.distance(k, k + 1));
  g.add_edge(i, space.infinity_id(), space.distance(i, space.infinity_id()));
  return {std::move(g), std::move(space)};
}

}  // namespace pnspan
