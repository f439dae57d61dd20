#pragma once

#include <array>

namespace tukey::geom {

using Point2 = std::array<double, 2>;

/// Sign of cross(p - origin, q - origin): +1 when q is counterclockwise of p
/// as seen from origin, -1 clockwise, 0 collinear. Exact for all finite inputs
/// whose products neither overflow nor underflow: a floating-point filter
/// decides most cases and an exact expansion sum settles the rest.
int orientation(const Point2& origin, const Point2& p, const Point2& q);

/// Same sign computed only by the exact expansion path (no filter).
int orientation_exact(const Point2& origin, const Point2& p, const Point2& q);

}  // namespace tukey::geom
