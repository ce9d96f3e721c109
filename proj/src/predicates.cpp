#include "pnspan/predicates.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace pnspan::predicates {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;

int sign(const mpq_class& v) { return sgn(v); }

int orient_exact(const Point2& a, const Point2& b, const Point2& c) {
  const mpq_class acx = mpq_class(a[0]) - c[0];
  const mpq_class acy = mpq_class(a[1]) - c[1];
  const mpq_class bcx = mpq_class(b[0]) - c[0];
  const mpq_class bcy = mpq_class(b[1]) - c[1];
  return sign(acx * bcy - acy * bcx);
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const mpq_class adx = mpq_class(a[0]) - d[0], ady = mpq_class(a[1]) - d[1];
  const mpq_class bdx = mpq_class(b[0]) - d[0], bdy = mpq_class(b[1]) - d[1];
  const mpq_class cdx = mpq_class(c[0]) - d[0], cdy = mpq_class(c[1]) - d[1];
  const mpq_class alift = adx * adx + ady * ady;
  const mpq_class blift = bdx * bdx + bdy * bdy;
  const mpq_class clift = cdx * cdx + cdy * cdy;
  const mpq_class det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                        clift * (adx * bdy - bdx * ady);
  return sign(det);
}

}  // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  const double left = (a[0] - c[0]) * (b[1] - c[1]);
  const double right = (a[1] - c[1]) * (b[0] - c[0]);
  const double det = left - right;
  const double bound = kOrientBound * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(a, b, c);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double adx = a[0] - d[0], ady = a[1] - d[1];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1];
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double bound = kInCircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

int incircle_perturbed(const Point2& a, unsigned ia, const Point2& b, unsigned ib, const Point2& c, unsigned ic,
                       const Point2& d, unsigned id) {
  if (const int s = incircle(a, b, c, d); s != 0) return s;
  // The determinant is linear in each lifted coordinate; its partial
  // derivatives are signed orientations of the remaining three points.
  struct Term {
    unsigned id;
    int sign;
  };
  std::array<Term, 4> terms{{{ia, orient2d(b, c, d)},
                             {ib, -orient2d(a, c, d)},
                             {ic, orient2d(a, b, d)},
                             {id, -orient2d(a, b, c)}}};
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.id < y.id; });
  for (const auto& t : terms) {
    if (t.sign != 0) return t.sign;
  }
  return 0;
}

}  // namespace pnspan::predicates
