#pragma once

#include <kgon/types.hpp>

namespace kgon {

enum class Turn : int { Right = -1, Collinear = 0, Left = 1 };

// Exact orientation of c relative to the directed line a->b.
// sign of (b-a) x (c-a), computed with a floating-point filter and an exact
// expansion fallback. May return Collinear.
Turn orient(const Point& a, const Point& b, const Point& c);

// Orientation under symbolic perturbation (Simulation of Simplicity): point
// with id t is displaced by infinitesimals (eps_t, eta_t), eta_t dominating
// eps_t and higher ids dominating lower ones. Never returns Collinear for
// three distinct points; requires distinct ids.
Turn orient_sos(const Point& a, const Point& b, const Point& c);

// Exact sign of (b-a) x (d-c). Generalizes orient (c=a, d=c).
int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d);

// cross_sign under the same symbolic perturbation. Requires four points with
// distinct ids and a != b, c != d; never returns 0.
int cross_sign_sos(const Point& a, const Point& b, const Point& c, const Point& d);

// Exact sign of |ab|^2 - |cd|^2. Distance constraints are closed, so no
// perturbation is applied; 0 means exactly equal.
int compare_squared_distance(const Point& a, const Point& b, const Point& c, const Point& d);

// Coordinate orders induced by the perturbation: lexicographic (y, id) and
// (x, id). Used for "bottommost", "above", and the counting oracle's strips.
inline bool y_less(const Point& a, const Point& b) {
  if (a.y() != b.y()) return a.y() < b.y();
  return a.id < b.id;
}
inline bool x_less(const Point& a, const Point& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.id < b.id;
}

}  // namespace kgon
