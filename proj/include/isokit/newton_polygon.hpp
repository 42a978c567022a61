#pragma once

// Newton polygons of isocrystals with GL_n or GSp_2g structure. Polygons are
// lower convex: slopes ascend from the origin. A dominant Newton point
// (nonincreasing coordinates) is read backwards.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

struct Segment {
  Rat slope;
  /// Horizontal length (multiplicity of the slope).
  std::size_t length = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

class NewtonPolygon {
 public:
  /// Maximal segments with strictly ascending slopes and integral rise.
  /// Throws NonIntegralBreakpoint or BadInput.
  explicit NewtonPolygon(std::vector<Segment> segments);

  /// Groups equal slopes of an arbitrary multiset.
  static NewtonPolygon from_slopes(std::vector<Rat> slopes);

  const std::vector<Segment>& segments() const { return segments_; }
  /// Slope multiset in ascending order.
  std::vector<Rat> slopes() const;
  /// Vertices including both endpoints.
  std::vector<std::pair<Int, Int>> breakpoints() const;

  std::size_t width() const;
  Int height() const;
  /// Polygon height at abscissa x, 0 <= x <= width().
  Rat value_at(std::size_t x) const;

  /// Same endpoints and value_at(x) >= other.value_at(x) at every integer x.
  bool lies_on_or_above(const NewtonPolygon& other) const;
  /// Slope multiset invariant under lambda -> 1 - lambda.
  bool is_symmetric() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
  /// Lexicographic on the ascending slope list, then width.
  friend std::strong_ordering operator<=>(const NewtonPolygon& a, const NewtonPolygon& b);

 private:
  std::vector<Segment> segments_;
};

/// Throws NotDominant when nu is not nonincreasing, NonIntegralBreakpoint
/// when some slope run has non-integral rise.
NewtonPolygon from_newton_point(const RatVector& nu);

/// Polygon of a Newton point of a datum carrying standard weights (GL_n,
/// GSp_2g and restrictions of scalars): slopes are the weights applied to nu.
NewtonPolygon polygon_of(const BasedRootDatum& rd, const RatVector& nu);

/// All integral lower-convex polygons from (0,0) to (n,d) with slopes in
/// [0, 1], sorted.
std::vector<NewtonPolygon> enumerate_gl(std::size_t n, std::size_t d);

/// Symmetric integral polygons from (0,0) to (2g,g) on or above the ordinary
/// polygon, sorted.
std::vector<NewtonPolygon> enumerate_gsp(std::size_t g);

/// Polygons from `polygons` lying on or above `bound`.
std::vector<NewtonPolygon> on_or_above(const std::vector<NewtonPolygon>& polygons, const NewtonPolygon& bound);

/// "svg" (SVG 1.1, polyline over an integer grid) or "tsv" (header x<TAB>y,
/// one breakpoint per line). Throws UnknownFormat.
std::string render(const NewtonPolygon& polygon, std::string_view format);

}  // namespace isokit
