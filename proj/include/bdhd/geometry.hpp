#pragma once

#include <array>
#include <string>

#include "bdhd/rng.hpp"

namespace bdhd {

// Additive slack for every kinematic feasibility comparison. Solvers,
// checker and simulator all share this value so they never disagree on
// boundary-tight hops.
inline constexpr double kEps = 1e-9;

enum class Topology { Interval, Circle, Square, Sphere };

std::string topology_name(Topology t);
Topology topology_from_name(const std::string& name);

// One of four boundary topologies with a geodesic metric. `size` holds the
// circumference (Circle), side (Square) or radius (Sphere); the Interval is
// fixed to [0, 1].
struct BoundarySpace {
  Topology kind = Topology::Interval;
  double size = 1.0;

  static BoundarySpace interval() { return {Topology::Interval, 1.0}; }
  static BoundarySpace circle(double circumference);
  static BoundarySpace square(double side);
  static BoundarySpace sphere(double radius);

  int dim() const;
  // Largest geodesic distance between any two points of the space.
  double diameter() const;

  bool operator==(const BoundarySpace&) const = default;
};

// Location on a boundary. Interval/Circle use one coordinate, Square two,
// Sphere a 3D vector of norm equal to the radius (no pole singularities).
struct Point {
  std::array<double, 3> c{0.0, 0.0, 0.0};
  int dim = 1;

  static Point d1(double x) { return {{x, 0.0, 0.0}, 1}; }
  static Point d2(double x, double y) { return {{x, y, 0.0}, 2}; }
  static Point d3(double x, double y, double z) { return {{x, y, z}, 3}; }

  bool operator==(const Point&) const = default;
};

// Throws InvalidPointError if `p` does not lie on `space` (wrong dimension,
// out of range, or off the sphere shell by more than 1e-9).
void validate_point(const BoundarySpace& space, const Point& p);

double geodesic_distance(const BoundarySpace& space, const Point& p, const Point& q);

Point sample_uniform(const BoundarySpace& space, RandomSource& rng);

// Point on a geodesic from `from` to `to` at arc length min(max_dist, d)
// from `from`. Reaching the target returns `to` exactly. Circle follows the
// shorter arc, ties broken toward increasing coordinate; Sphere follows the
// great circle, antipodal start resolved deterministically.
Point move_toward(const BoundarySpace& space, const Point& from, const Point& to,
                  double max_dist);

}  // namespace bdhd
