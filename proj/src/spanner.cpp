#include "pnspan/spanner.hpp"

#include "pnspan/counterexample.hpp"

namespace pnspan {

std::uint32_t min_counterexample_index(const Rational& t) {
  Rational h(1);  // H_1
  std::uint32_t i = 0;
  while (!(h > t)) {
    ++i;
    h += Rational(1, i + 1);
  }
  return i;
}

}  // namespace pnspan
