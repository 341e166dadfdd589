#pragma once

#include "fuzzassess/assessors.hpp"
#include "fuzzassess/grading.hpp"

#include <span>
#include <vector>

namespace fuzzassess::geometry {

struct Point {
  double x;
  double y;

  bool operator==(const Point &) const = default;
};

/// Simple polygon with counter-clockwise vertices.
class Polygon {
public:
  static constexpr double kMinArea = 1e-15;

  /// Throws GeometryError for fewer than 3 vertices, self-intersection, or a
  /// signed area <= kMinArea (clockwise or degenerate).
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point> &vertices() const noexcept { return vertices_; }
  double area() const noexcept { return area_; }

  Polygon translated(double dx, double dy) const;

private:
  std::vector<Point> vertices_;
  double area_;
};

/// Shoelace signed area; positive for counter-clockwise order.
double signed_area(std::span<const Point> vertices) noexcept;

/// Exact area-moment centroid.
Point polygon_centroid(const Polygon &p);

struct WeightedParticle {
  Point position;
  double weight;
};

/// Weighted average of positions. Throws GeometryError when empty, when any
/// weight is not positive, or when the total weight is zero.
Point particle_system_cog(std::span<const WeightedParticle> particles);

struct SchemeShape {
  Grade grade;
  Polygon polygon;
};

struct SchemePolygons {
  std::vector<SchemeShape> shapes;  // grades with y_i > 0, in F..A order
  std::vector<Grade> omitted;       // zero-height (or sub-kMinArea) grades
};

/// Shape i sits on [(i-1)s, (i-1)s + b] with a top of length a centred at
/// height y_i. Triangles (a == 0) have three vertices.
SchemePolygons build_scheme_polygons(const FrequencyVector &y, const TrapezoidGeometry &geom);

/// Each shape collapsed to a particle at its centroid, weighted by its area.
/// Overlaps count once per shape they belong to.
Point scheme_particle_cog(const FrequencyVector &y, const TrapezoidGeometry &geom);

/// Centroid of the union of the five abutting unit bars, aggregated from
/// per-bar centroids.
Point rectangular_union_centroid(const FrequencyVector &y);

}  // namespace fuzzassess::geometry
