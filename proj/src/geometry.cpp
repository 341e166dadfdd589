#include "fuzzassess/geometry.hpp"

#include "fuzzassess/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace fuzzassess::geometry {

namespace {

double cross(const Point &o, const Point &a, const Point &b) noexcept {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point &p, const Point &a, const Point &b) noexcept {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) noexcept { return (v > 0.0) - (v < 0.0); }

bool segments_intersect(const Point &p1, const Point &p2, const Point &q1, const Point &q2) noexcept {
  const int d1 = sign(cross(q1, q2, p1));
  const int d2 = sign(cross(q1, q2, p2));
  const int d3 = sign(cross(p1, p2, q1));
  const int d4 = sign(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) {
    return true;
  }
  return (d1 == 0 && on_segment(p1, q1, q2)) || (d2 == 0 && on_segment(p2, q1, q2)) ||
         (d3 == 0 && on_segment(q1, p1, p2)) || (d4 == 0 && on_segment(q2, p1, p2));
}

bool is_simple(const std::vector<Point> &v) noexcept {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        continue;
      }
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

double signed_area(std::span<const Point> vertices) noexcept {
  const std::size_t n = vertices.size();
  if (n < 3) {
    return 0.0;
  }
  const Point &o = vertices[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    twice += cross(o, vertices[i], vertices[i + 1]);
  }
  return 0.5 * twice;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)), area_(0.0) {
  if (vertices_.size() < 3) {
    throw GeometryError(fmt::format("polygon needs at least 3 vertices, got {}", vertices_.size()));
  }
  for (const auto &p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError("polygon vertex is not finite");
    }
  }
  area_ = signed_area(vertices_);
  if (!(area_ > kMinArea)) {
    throw GeometryError(fmt::format("polygon signed area {} is degenerate or clockwise", area_));
  }
  if (!is_simple(vertices_)) {
    throw GeometryError("polygon edges intersect");
  }
}

Polygon Polygon::translated(double dx, double dy) const {
  std::vector<Point> moved = vertices_;
  for (auto &p : moved) {
    p.x += dx;
    p.y += dy;
  }
  return Polygon(std::move(moved));
}

Point polygon_centroid(const Polygon &p) {
  // Moments about the first vertex, then shifted back.
  const auto &v = p.vertices();
  const Point &o = v[0];
  double twice_area = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double ax = v[i].x - o.x;
    const double ay = v[i].y - o.y;
    const double bx = v[i + 1].x - o.x;
    const double by = v[i + 1].y - o.y;
    const double c = ax * by - bx * ay;
    twice_area += c;
    mx += (ax + bx) * c;
    my += (ay + by) * c;
  }
  return {o.x + mx / (3.0 * twice_area), o.y + my / (3.0 * twice_area)};
}

Point particle_system_cog(std::span<const WeightedParticle> particles) {
  if (particles.empty()) {
    throw GeometryError("particle system is empty");
  }
  double total = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (const auto &particle : particles) {
    if (!(particle.weight > 0.0)) {
      throw GeometryError(fmt::format("particle weight must be positive, got {}", particle.weight));
    }
    total += particle.weight;
    mx += particle.weight * particle.position.x;
    my += particle.weight * particle.position.y;
  }
  return {mx / total, my / total};
}

SchemePolygons build_scheme_polygons(const FrequencyVector &y, const TrapezoidGeometry &geom) {
  geom.validate();
  SchemePolygons scheme;
  for (Grade g : kAllGrades) {
    const double h = y[g];
    // Heights too small to form a non-degenerate polygon count as empty.
    if (h * (geom.base + geom.top) / 2.0 <= Polygon::kMinArea) {
      scheme.omitted.push_back(g);
      continue;
    }
    const double left = (ordinal(g) - 1) * geom.stride;
    const double right = left + geom.base;
    const double inset = (geom.base - geom.top) / 2.0;
    std::vector<Point> vertices{{left, 0.0}, {right, 0.0}};
    if (geom.top > 0.0) {
      vertices.push_back({right - inset, h});
      vertices.push_back({left + inset, h});
    } else {
      vertices.push_back({left + inset, h});
    }
    scheme.shapes.push_back({g, Polygon(std::move(vertices))});
  }
  return scheme;
}

Point scheme_particle_cog(const FrequencyVector &y, const TrapezoidGeometry &geom) {
  const auto scheme = build_scheme_polygons(y, geom);
  std::vector<WeightedParticle> particles;
  particles.reserve(scheme.shapes.size());
  for (const auto &shape : scheme.shapes) {
    particles.push_back({polygon_centroid(shape.polygon), shape.polygon.area()});
  }
  return particle_system_cog(particles);
}

Point rectangular_union_centroid(const FrequencyVector &y) {
  // The bars do not overlap, so the union's centroid is the area-weighted
  // aggregate of the bar centroids.
  const auto scheme = build_scheme_polygons(y, TrapezoidGeometry::rectangular());
  if (scheme.shapes.empty()) {
    throw GeometryError("all bars have zero height");
  }
  double total = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (const auto &shape : scheme.shapes) {
    const Point c = polygon_centroid(shape.polygon);
    const double a = shape.polygon.area();
    total += a;
    mx += a * c.x;
    my += a * c.y;
  }
  return {mx / total, my / total};
}

}  // namespace fuzzassess::geometry
