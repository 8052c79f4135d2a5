#include <kgon/predicates.hpp>

#include <array>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kgon {
namespace {

// ---------------------------------------------------------------------------
// Floating-point expansion arithmetic (Shewchuk). An expansion is a sum of
// nonoverlapping doubles stored in increasing magnitude; the sign of the sum
// is the sign of its largest (last nonzero) component.
// ---------------------------------------------------------------------------

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bvirt = x - a;
  const double avirt = x - bvirt;
  const double bround = b - bvirt;
  const double around = a - avirt;
  y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  const double bround = bvirt - b;
  const double around = a - avirt;
  y = around + bround;
}

inline void two_prod(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// Expansion with fixed capacity; grow_expansion keeps the invariant.
template <int Cap>
struct Expansion {
  std::array<double, Cap> e{};
  int n = 0;

  void add(double b) {
    // grow_expansion_zeroelim
    double q = b;
    int nn = 0;
    for (int i = 0; i < n; ++i) {
      double h, qq;
      two_sum(q, e[static_cast<std::size_t>(i)], qq, h);
      q = qq;
      if (h != 0.0) e[static_cast<std::size_t>(nn++)] = h;
    }
    if (q != 0.0 || nn == 0) e[static_cast<std::size_t>(nn++)] = q;
    n = nn;
    assert(n <= Cap);
  }

  // Add the exact product of two length-2 expansions (ahi+alo)*(bhi+blo),
  // optionally negated.
  void add_product22(double ahi, double alo, double bhi, double blo, bool negate) {
    const double s = negate ? -1.0 : 1.0;
    double p, r;
    two_prod(ahi, bhi, p, r);
    add(s * r);
    add(s * p);
    two_prod(ahi, blo, p, r);
    add(s * r);
    add(s * p);
    two_prod(alo, bhi, p, r);
    add(s * r);
    add(s * p);
    two_prod(alo, blo, p, r);
    add(s * r);
    add(s * p);
  }

  int sign() const {
    for (int i = n - 1; i >= 0; --i) {
      const double v = e[static_cast<std::size_t>(i)];
      if (v > 0.0) return 1;
      if (v < 0.0) return -1;
    }
    return 0;
  }
};

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
const double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
const double kGenericBound = 32.0 * kEps;  // conservative, degree-2 polynomials

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient_exact(const Point& a, const Point& b, const Point& c) {
  Expansion<24> e;
  double hi, lo, hi2, lo2;
  two_diff(a.x(), c.x(), hi, lo);
  two_diff(b.y(), c.y(), hi2, lo2);
  e.add_product22(hi, lo, hi2, lo2, false);
  two_diff(a.y(), c.y(), hi, lo);
  two_diff(b.x(), c.x(), hi2, lo2);
  e.add_product22(hi, lo, hi2, lo2, true);
  return e.sign();
}

int cross_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  Expansion<24> e;
  double hi, lo, hi2, lo2;
  two_diff(b.x(), a.x(), hi, lo);
  two_diff(d.y(), c.y(), hi2, lo2);
  e.add_product22(hi, lo, hi2, lo2, false);
  two_diff(b.y(), a.y(), hi, lo);
  two_diff(d.x(), c.x(), hi2, lo2);
  e.add_product22(hi, lo, hi2, lo2, true);
  return e.sign();
}

int dist2_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  Expansion<40> e;
  double hi, lo;
  two_diff(b.x(), a.x(), hi, lo);
  e.add_product22(hi, lo, hi, lo, false);
  two_diff(b.y(), a.y(), hi, lo);
  e.add_product22(hi, lo, hi, lo, false);
  two_diff(d.x(), c.x(), hi, lo);
  e.add_product22(hi, lo, hi, lo, true);
  two_diff(d.y(), c.y(), hi, lo);
  e.add_product22(hi, lo, hi, lo, true);
  return e.sign();
}

// Symbolic tie-break: with three (resp. four) distinct points the dominant
// surviving term is always a partial derivative of the highest-id point, and
// the y-derivative dominates the x-derivative.
int orient_sos_tiebreak(const Point& a, const Point& b, const Point& c) {
  const Point* pts[3] = {&a, &b, &c};
  int t = 0;
  for (int i = 1; i < 3; ++i)
    if (pts[i]->id > pts[t]->id) t = i;
  double dy, dx;  // d(det)/dy_t, d(det)/dx_t
  switch (t) {
    case 0:
      dy = c.x() - b.x();
      dx = b.y() - c.y();
      break;
    case 1:
      dy = a.x() - c.x();
      dx = c.y() - a.y();
      break;
    default:
      dy = b.x() - a.x();
      dx = a.y() - b.y();
      break;
  }
  if (dy != 0.0) return sign_of(dy);
  if (dx != 0.0) return sign_of(dx);
  throw std::invalid_argument("orient_sos: coincident points");
}

int cross_sos_tiebreak(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point* pts[4] = {&a, &b, &c, &d};
  int t = 0;
  for (int i = 1; i < 4; ++i)
    if (pts[i]->id > pts[t]->id) t = i;
  double dy, dx;  // partial derivatives of (b-a) x (d-c)
  switch (t) {
    case 0:
      dy = d.x() - c.x();
      dx = -(d.y() - c.y());
      break;
    case 1:
      dy = -(d.x() - c.x());
      dx = d.y() - c.y();
      break;
    case 2:
      dy = -(b.x() - a.x());
      dx = b.y() - a.y();
      break;
    default:
      dy = b.x() - a.x();
      dx = -(b.y() - a.y());
      break;
  }
  if (dy != 0.0) return sign_of(dy);
  if (dx != 0.0) return sign_of(dx);
  throw std::invalid_argument("cross_sign_sos: degenerate input");
}

}  // namespace

Turn orient(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a.x() - c.x()) * (b.y() - c.y());
  const double detright = (a.y() - c.y()) * (b.x() - c.x());
  const double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return static_cast<Turn>(sign_of(det));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return static_cast<Turn>(sign_of(det));
    detsum = -detleft - detright;
  } else {
    return static_cast<Turn>(sign_of(det));
  }
  if (det > kOrientBound * detsum || -det > kOrientBound * detsum)
    return static_cast<Turn>(sign_of(det));
  return static_cast<Turn>(orient_exact(a, b, c));
}

Turn orient_sos(const Point& a, const Point& b, const Point& c) {
  assert(a.id != b.id && a.id != c.id && b.id != c.id);
  const Turn t = orient(a, b, c);
  if (t != Turn::Collinear) return t;
  return static_cast<Turn>(orient_sos_tiebreak(a, b, c));
}

int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double t1 = (b.x() - a.x()) * (d.y() - c.y());
  const double t2 = (b.y() - a.y()) * (d.x() - c.x());
  const double det = t1 - t2;
  const double mag = std::fabs(t1) + std::fabs(t2);
  if (std::fabs(det) > kGenericBound * mag) return sign_of(det);
  return cross_exact(a, b, c, d);
}

int cross_sign_sos(const Point& a, const Point& b, const Point& c, const Point& d) {
  // The tie-break below assumes the four perturbations are independent.
  assert(a.id != b.id && a.id != c.id && a.id != d.id && b.id != c.id && b.id != d.id &&
         c.id != d.id);
  const int s = cross_sign(a, b, c, d);
  if (s != 0) return s;
  return cross_sos_tiebreak(a, b, c, d);
}

int compare_squared_distance(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double d1 = squared_distance(a, b);
  const double d2 = squared_distance(c, d);
  const double det = d1 - d2;
  const double mag = d1 + d2;
  if (std::fabs(det) > kGenericBound * mag) return sign_of(det);
  return dist2_exact(a, b, c, d);
}

}  // namespace kgon
