#include "pnspan/counterexample.hpp"

#include <algorithm>

#include "pnspan/errors.hpp"

namespace pnspan {

PiecewiseConstFn::PiecewiseConstFn(Rational value) : breaks_{Rational(0), Rational(1)}, values_{std::move(value)} {}

PiecewiseConstFn::PiecewiseConstFn(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
  if (breaks_.size() < 2 || values_.size() + 1 != breaks_.size()) {
    throw ParameterError("piecewise function needs one value per piece");
  }
  if (breaks_.front() != 0 || breaks_.back() != 1) throw ParameterError("pieces must tile [0,1]");
  for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
    if (!(breaks_[j] < breaks_[j + 1])) throw ParameterError("breakpoints must be strictly increasing");
  }
  canonicalize();
}

Rational PiecewiseConstFn::operator()(const Rational& x) const {
  if (x < 0 || x > 1) throw ParameterError("argument outside [0,1]");
  if (x == 0) return values_.front();
  const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

void PiecewiseConstFn::assign(const Rational& lo, const Rational& hi, const Rational& value) {
  if (lo < 0 || hi > 1 || !(lo < hi)) throw ParameterError("assign interval must satisfy 0 <= lo < hi <= 1");
  auto split_at = [this](const Rational& b) {
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), b);
    if (*it == b) return;
    const auto piece = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    breaks_.insert(it, b);
    values_.insert(values_.begin() + static_cast<std::ptrdiff_t>(piece), values_[piece]);
  };
  split_at(lo);
  split_at(hi);
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (breaks_[j] >= lo && breaks_[j + 1] <= hi) values_[j] = value;
  }
  canonicalize();
}

void PiecewiseConstFn::canonicalize() {
  std::vector<Rational> b{breaks_.front()};
  std::vector<Rational> v;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!v.empty() && v.back() == values_[j]) {
      b.back() = breaks_[j + 1];
    } else {
      v.push_back(values_[j]);
      b.push_back(breaks_[j + 1]);
    }
  }
  breaks_ = std::move(b);
  values_ = std::move(v);
}

Rational default_epsilon(std::uint32_t i) {
  Rational eps(1, mpz_class(10) * (i + 1) * (i + 2));
  eps.canonicalize();
  return eps;
}

void require_structural_epsilon(std::uint32_t i, const Rational& eps) {
  if (eps <= 0) throw ParameterError("epsilon must be positive");
  if (Rational(1, 2) - i * eps <= 0) {
    throw ParameterError("epsilon " + to_fraction_string(eps) + " too large: 1/2 - " + std::to_string(i) +
                         "*eps <= 0 collapses the step pieces of f_" + std::to_string(i));
  }
}

PiecewiseConstFn family_function(FamilyIndex k, std::uint32_t i_context, const Rational& eps) {
  if (k.is_infinite()) {
    if (eps <= 0) throw ParameterError("epsilon must be positive");
    return PiecewiseConstFn(Rational(1));
  }
  if (k.value() > i_context) {
    throw ParameterError("index " + std::to_string(k.value()) + " exceeds context " + std::to_string(i_context));
  }
  require_structural_epsilon(k.value(), eps);
  PiecewiseConstFn f(Rational(0));
  const Rational half(1, 2);
  for (std::uint32_t m = 1; m <= k.value(); ++m) {
    const Rational step_start = half - m * eps;
    f.assign(Rational(0), step_start, Rational(0));
    f.assign(step_start, half, Rational(1));
    Rational tail_start(m, m + 1);
    tail_start.canonicalize();
    Rational tail_value(1, m + 1);
    f.assign(tail_start, Rational(1), tail_value);
  }
  return f;
}

Rational dx_closed_form(FamilyIndex a, FamilyIndex b, const Rational& eps) {
  if (a == b) return Rational(0);
  if (b < a) std::swap(a, b);
  if (b.is_infinite()) return Rational(1) - a.value() * eps;
  Rational r(1, a.value() + 2);
  r += (b.value() - a.value()) * eps;
  return r;
}

Rational dx_measure_oracle(const PiecewiseConstFn& f, const PiecewiseConstFn& g) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::size_t a = 0;
  std::size_t b = 0;
  Rational cursor(0);
  Rational measure(0);
  while (a < f.piece_count() && b < g.piece_count()) {
    const Rational& next = std::min(fb[a + 1], gb[b + 1]);
    if (f.values()[a] != g.values()[b]) measure += next - cursor;
    cursor = next;
    if (fb[a + 1] == cursor) ++a;
    if (gb[b + 1] == cursor) ++b;
  }
  return measure;
}

Rational harmonic(std::uint32_t k) {
  Rational h(0);
  for (std::uint32_t j = 1; j <= k; ++j) h += Rational(1, j);
  return h;
}

CounterexampleSpace::CounterexampleSpace(std::uint32_t i, Rational eps)
    : i_(i), eps_(std::move(eps)), n_(static_cast<std::size_t>(i) + 2) {
  require_structural_epsilon(i_, eps_);
  table_.resize(n_ * n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      table_[u * n_ + v] =
          dx_closed_form(member(static_cast<PointId>(u)), member(static_cast<PointId>(v)), eps_);
    }
  }
}

FamilyIndex CounterexampleSpace::member(PointId id) const {
  if (id > i_ + 1) throw std::out_of_range("counterexample point id out of range");
  return id == i_ + 1 ? FamilyIndex::infinity() : FamilyIndex::finite(id);
}

bool FamilyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.passed(); });
}

}  // namespace pnspan
