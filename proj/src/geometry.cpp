#include "bdhd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bdhd/errors.hpp"

namespace bdhd {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

double dot3(const Point& p, const Point& q) {
  return p.c[0] * q.c[0] + p.c[1] * q.c[1] + p.c[2] * q.c[2];
}

double norm3(const Point& p) { return std::sqrt(dot3(p, p)); }
}  // namespace

std::string topology_name(Topology t) {
  switch (t) {
    case Topology::Interval: return "interval";
    case Topology::Circle: return "circle";
    case Topology::Square: return "square";
    case Topology::Sphere: return "sphere";
  }
  return "?";
}

Topology topology_from_name(const std::string& name) {
  if (name == "interval") return Topology::Interval;
  if (name == "circle") return Topology::Circle;
  if (name == "square") return Topology::Square;
  if (name == "sphere") return Topology::Sphere;
  throw InvalidPointError("unknown topology '" + name + "'");
}

BoundarySpace BoundarySpace::circle(double circumference) {
  if (!(circumference > 0)) throw InvalidPointError("circle circumference must be > 0");
  return {Topology::Circle, circumference};
}

BoundarySpace BoundarySpace::square(double side) {
  if (!(side > 0)) throw InvalidPointError("square side must be > 0");
  return {Topology::Square, side};
}

BoundarySpace BoundarySpace::sphere(double radius) {
  if (!(radius > 0)) throw InvalidPointError("sphere radius must be > 0");
  return {Topology::Sphere, radius};
}

int BoundarySpace::dim() const {
  switch (kind) {
    case Topology::Interval:
    case Topology::Circle: return 1;
    case Topology::Square: return 2;
    case Topology::Sphere: return 3;
  }
  return 1;
}

double BoundarySpace::diameter() const {
  switch (kind) {
    case Topology::Interval: return 1.0;
    case Topology::Circle: return size / 2.0;
    case Topology::Square: return size * std::sqrt(2.0);
    case Topology::Sphere: return kPi * size;
  }
  return 0.0;
}

void validate_point(const BoundarySpace& space, const Point& p) {
  if (p.dim != space.dim())
    throw InvalidPointError("point dimension " + std::to_string(p.dim) +
                            " does not match " + topology_name(space.kind));
  switch (space.kind) {
    case Topology::Interval:
      if (!(p.c[0] >= 0.0 && p.c[0] <= 1.0))
        throw InvalidPointError("interval coordinate out of [0,1]");
      break;
    case Topology::Circle:
      if (!(p.c[0] >= 0.0 && p.c[0] < space.size))
        throw InvalidPointError("circle coordinate out of [0,C)");
      break;
    case Topology::Square:
      for (int i = 0; i < 2; ++i)
        if (!(p.c[i] >= 0.0 && p.c[i] <= space.size))
          throw InvalidPointError("square coordinate out of [0,side]");
      break;
    case Topology::Sphere:
      if (std::abs(norm3(p) - space.size) > 1e-9)
        throw InvalidPointError("sphere point norm differs from radius");
      break;
  }
}

double geodesic_distance(const BoundarySpace& space, const Point& p, const Point& q) {
  if (p.dim != space.dim() || q.dim != space.dim())
    throw InvalidPointError("point dimension does not match space");
  switch (space.kind) {
    case Topology::Interval:
      return std::abs(p.c[0] - q.c[0]);
    case Topology::Circle: {
      const double d = std::abs(p.c[0] - q.c[0]);
      return std::min(d, space.size - d);
    }
    case Topology::Square: {
      const double dx = p.c[0] - q.c[0];
      const double dy = p.c[1] - q.c[1];
      return std::sqrt(dx * dx + dy * dy);
    }
    case Topology::Sphere: {
      if (p == q) return 0.0;
      const double r = space.size;
      return r * std::acos(clamp(dot3(p, q) / (r * r), -1.0, 1.0));
    }
  }
  return 0.0;
}

Point sample_uniform(const BoundarySpace& space, RandomSource& rng) {
  switch (space.kind) {
    case Topology::Interval:
      return Point::d1(rng.uniform01());
    case Topology::Circle: {
      double x = rng.uniform01() * space.size;
      if (x >= space.size) x = 0.0;
      return Point::d1(x);
    }
    case Topology::Square:
      return Point::d2(rng.uniform01() * space.size, rng.uniform01() * space.size);
    case Topology::Sphere: {
      for (;;) {
        const double x = rng.gaussian();
        const double y = rng.gaussian();
        const double z = rng.gaussian();
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-12) {
          const double s = space.size / n;
          return Point::d3(x * s, y * s, z * s);
        }
      }
    }
  }
  return Point::d1(0.0);
}

namespace {

// Any unit vector orthogonal to u; used when from/to are antipodal and the
// great circle is ambiguous.
Point perpendicular_unit(const Point& u) {
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(u.c[i]) < std::abs(u.c[least])) least = i;
  Point e{{0.0, 0.0, 0.0}, 3};
  e.c[least] = 1.0;
  const double proj = dot3(e, u);
  Point v{{e.c[0] - proj * u.c[0], e.c[1] - proj * u.c[1], e.c[2] - proj * u.c[2]}, 3};
  const double n = norm3(v);
  for (auto& x : v.c) x /= n;
  return v;
}

}  // namespace

Point move_toward(const BoundarySpace& space, const Point& from, const Point& to,
                  double max_dist) {
  const double d = geodesic_distance(space, from, to);
  if (max_dist >= d) return to;
  switch (space.kind) {
    case Topology::Interval: {
      const double s = max_dist / d;
      return Point::d1(from.c[0] + s * (to.c[0] - from.c[0]));
    }
    case Topology::Circle: {
      const double fwd = std::fmod(to.c[0] - from.c[0] + space.size, space.size);
      const double dir = (fwd <= space.size - fwd) ? 1.0 : -1.0;
      double x = std::fmod(from.c[0] + dir * max_dist + space.size, space.size);
      if (x >= space.size) x = 0.0;
      return Point::d1(x);
    }
    case Topology::Square: {
      const double s = max_dist / d;
      return Point::d2(from.c[0] + s * (to.c[0] - from.c[0]),
                       from.c[1] + s * (to.c[1] - from.c[1]));
    }
    case Topology::Sphere: {
      const double r = space.size;
      const double theta = d / r;
      const double alpha = max_dist / r;
      const double sin_theta = std::sin(theta);
      Point out{{0, 0, 0}, 3};
      if (sin_theta < 1e-12) {
        // antipodal: rotate along a deterministic perpendicular direction
        Point u{{from.c[0] / r, from.c[1] / r, from.c[2] / r}, 3};
        const Point v = perpendicular_unit(u);
        for (int i = 0; i < 3; ++i)
          out.c[i] = r * (std::cos(alpha) * u.c[i] + std::sin(alpha) * v.c[i]);
      } else {
        const double wa = std::sin(theta - alpha) / sin_theta;
        const double wb = std::sin(alpha) / sin_theta;
        for (int i = 0; i < 3; ++i) out.c[i] = wa * from.c[i] + wb * to.c[i];
        const double n = norm3(out);
        for (auto& x : out.c) x *= r / n;
      }
      return out;
    }
  }
  return to;
}

}  // namespace bdhd
