#pragma once

#include <array>

namespace pnspan::predicates {

using Point2 = std::array<double, 2>;

/// Sign of the orientation determinant: +1 if a, b, c turn counter-clockwise,
/// -1 if clockwise, 0 if collinear. Exact for all finite inputs.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Sign of the in-circle determinant: for counter-clockwise a, b, c returns +1
/// when d lies strictly inside their circumcircle, -1 outside, 0 on it. Exact.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// In-circle sign after lifting every point by an infinitesimal amount that
/// decreases with its id (the smallest id dominates). Never returns 0 unless
/// all four points are collinear; ids must be distinct.
int incircle_perturbed(const Point2& a, unsigned ia, const Point2& b, unsigned ib, const Point2& c, unsigned ic,
                       const Point2& d, unsigned id);

}  // namespace pnspan::predicates
