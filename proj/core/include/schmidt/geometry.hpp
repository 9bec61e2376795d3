#pragma once

#include <cstddef>

#include "schmidt/rational.hpp"

namespace schmidt {

// Closed Euclidean ball with rational center and radius.
struct Ball {
  Point center;
  Rational radius;

  std::size_t dimension() const { return center.size(); }
  friend bool operator==(const Ball&, const Ball&) = default;
};

// {y : normal . y = offset}. The normal is used as given (no gcd reduction).
struct Hyperplane {
  IntVector normal;
  Integer offset;

  Integer norm_sq() const { return schmidt::norm_sq(normal); }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// {y : direction . (y - anchor) >= threshold}, with |direction|^2 == 1 exactly.
struct Halfspace {
  Point direction;
  Rational threshold;
  Point anchor;
};

// Default angular tolerance for rationalized directions, 2^-30.
Rational default_direction_tolerance();

// min over integers a of |q - a|.
Rational nearest_int_dist(const Rational& q);

// Closed-ball containment, decided on squares.
bool ball_contains(const Ball& outer, const Ball& inner);

// |u . p - a|. The Euclidean distance is this divided by |u|, so callers compare
// residuals instead of distances.
Rational resonance_residual(const Point& p, const Hyperplane& h);

bool halfspace_contains_ball(const Halfspace& h, const Ball& b);

// Normalized surface measure of the set of directions y whose closed
// half-space {z : z.y >= 0} swallows the cap {z : z.x >= gamma/2} of the unit
// sphere in R^n, i.e. a cap of angular radius arcsin(gamma/2).
long double cap_fraction(const Rational& gamma, int n);

// cap_fraction rounded down to a dyadic rational; exactly 1/2 for n == 1.
Rational cap_fraction_lower_bound(const Rational& gamma, int n);

// Exact rational unit vector d (sum d_i^2 == 1) with |d - v/|v||^2 < tol^2,
// built by inverse stereographic projection from the pole opposite the
// dominant axis of v.
Point rational_unit_direction(const Point& v, const Rational& tol);
Point rational_unit_direction(const IntVector& v, const Rational& tol);

// True iff every point p of `ball` has |u.p - a| > margin.
bool min_residual_exceeds(const Ball& ball, const Hyperplane& h, const Rational& margin);

// True iff every point of `ball` is at Euclidean distance > `distance` from h.
bool distance_exceeds(const Ball& ball, const Hyperplane& h, const Rational& distance);

// The cap segment of a ball: {z in ball : direction.(z - center) >= gamma*radius/2}.
// True iff |u.z - a| > margin for every z of that segment. `direction` must be
// an exact unit vector.
bool segment_residual_exceeds(const Ball& ball, const Point& direction, const Rational& gamma,
                              const Hyperplane& h, const Rational& margin);

// Orthogonal projection of p onto h (exact).
Point project_onto(const Point& p, const Hyperplane& h);

}  // namespace schmidt
