#include "isokit/newton_polygon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace isokit {

NewtonPolygon::NewtonPolygon(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (s.length == 0) throw Error(ErrorCode::BadInput, "polygon segment of length zero");
    if (i > 0 && !(segments_[i - 1].slope < s.slope))
      throw Error(ErrorCode::BadInput, "polygon slopes must be strictly ascending");
    const Rat rise = s.slope * Rat(static_cast<unsigned long>(s.length));
    if (rise.get_den() != 1)
      throw Error(ErrorCode::NonIntegralBreakpoint,
                  "slope " + format(s.slope) + " with multiplicity " + std::to_string(s.length) +
                      " has a non-integral break point");
  }
}

NewtonPolygon NewtonPolygon::from_slopes(std::vector<Rat> slopes) {
  std::sort(slopes.begin(), slopes.end());
  std::vector<Segment> segments;
  for (const auto& s : slopes) {
    if (!segments.empty() && segments.back().slope == s)
      ++segments.back().length;
    else
      segments.push_back({s, 1});
  }
  return NewtonPolygon(std::move(segments));
}

std::vector<Rat> NewtonPolygon::slopes() const {
  std::vector<Rat> out;
  for (const auto& s : segments_) out.insert(out.end(), s.length, s.slope);
  return out;
}

std::vector<std::pair<Int, Int>> NewtonPolygon::breakpoints() const {
  std::vector<std::pair<Int, Int>> out{{Int(0), Int(0)}};
  Int x = 0;
  Int y = 0;
  for (const auto& s : segments_) {
    const Rat rise = s.slope * Rat(static_cast<unsigned long>(s.length));
    x += static_cast<unsigned long>(s.length);
    y += rise.get_num();
    out.emplace_back(x, y);
  }
  return out;
}

std::size_t NewtonPolygon::width() const {
  std::size_t w = 0;
  for (const auto& s : segments_) w += s.length;
  return w;
}

Int NewtonPolygon::height() const { return breakpoints().back().second; }

Rat NewtonPolygon::value_at(std::size_t x) const {
  if (x > width()) throw Error(ErrorCode::BadInput, "abscissa beyond the polygon");
  Rat y = 0;
  std::size_t remaining = x;
  for (const auto& s : segments_) {
    const std::size_t step = std::min(remaining, s.length);
    y += s.slope * Rat(static_cast<unsigned long>(step));
    remaining -= step;
    if (remaining == 0) break;
  }
  return y;
}

bool NewtonPolygon::lies_on_or_above(const NewtonPolygon& other) const {
  if (width() != other.width() || height() != other.height()) return false;
  for (std::size_t x = 1; x < width(); ++x)
    if (value_at(x) < other.value_at(x)) return false;
  return true;
}

bool NewtonPolygon::is_symmetric() const {
  std::vector<Rat> mirrored;
  for (const auto& s : slopes()) mirrored.push_back(Rat(1) - s);
  std::sort(mirrored.begin(), mirrored.end());
  return mirrored == slopes();
}

std::strong_ordering operator<=>(const NewtonPolygon& a, const NewtonPolygon& b) {
  const auto sa = a.slopes();
  const auto sb = b.slopes();
  for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i) {
    if (sa[i] < sb[i]) return std::strong_ordering::less;
    if (sb[i] < sa[i]) return std::strong_ordering::greater;
  }
  return sa.size() <=> sb.size();
}

NewtonPolygon from_newton_point(const RatVector& nu) {
  for (std::size_t i = 1; i < nu.size(); ++i)
    if (nu[i - 1] < nu[i]) throw Error(ErrorCode::NotDominant, "Newton point " + format(nu) + " is not nonincreasing");
  return NewtonPolygon::from_slopes(nu);
}

NewtonPolygon polygon_of(const BasedRootDatum& rd, const RatVector& nu) {
  const auto& weights = rd.standard_weights();
  if (!weights) throw Error(ErrorCode::BadInput, rd.name() + " has no standard representation");
  RatVector slopes = weights->apply(nu);
  std::sort(slopes.begin(), slopes.end(), [](const Rat& a, const Rat& b) { return b < a; });
  return from_newton_point(slopes);
}

std::vector<NewtonPolygon> enumerate_gl(std::size_t n, std::size_t d) {
  if (d > n) throw Error(ErrorCode::BadParameter, "degree exceeds height");
  std::vector<NewtonPolygon> out;
  std::vector<Segment> path;
  const std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t x, std::size_t y) {
    if (x == n) {
      if (y == d) out.emplace_back(path);
      return;
    }
    for (std::size_t m = 1; x + m <= n; ++m)
      for (std::size_t k = 0; k <= m && y + k <= d; ++k) {
        Rat slope(static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        slope.canonicalize();
        if (!path.empty() && !(path.back().slope < slope)) continue;
        path.push_back({slope, m});
        extend(x + m, y + k);
        path.pop_back();
      }
  };
  extend(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NewtonPolygon> enumerate_gsp(std::size_t g) {
  if (g == 0) throw Error(ErrorCode::BadParameter, "genus must be at least 1");
  std::vector<Rat> ordinary(g, Rat(0));
  ordinary.insert(ordinary.end(), g, Rat(1));
  const NewtonPolygon bound = NewtonPolygon::from_slopes(ordinary);
  std::vector<NewtonPolygon> out;
  for (auto& p : enumerate_gl(2 * g, g))
    if (p.is_symmetric() && p.lies_on_or_above(bound)) out.push_back(std::move(p));
  return out;
}

std::vector<NewtonPolygon> on_or_above(const std::vector<NewtonPolygon>& polygons, const NewtonPolygon& bound) {
  std::vector<NewtonPolygon> out;
  for (const auto& p : polygons)
    if (p.lies_on_or_above(bound)) out.push_back(p);
  return out;
}

namespace {

std::string render_tsv(const NewtonPolygon& polygon) {
  std::ostringstream os;
  os << "x\ty\n";
  for (const auto& [x, y] : polygon.breakpoints()) os << x << '\t' << y << '\n';
  return os.str();
}

std::string render_svg(const NewtonPolygon& polygon) {
  constexpr long unit = 40;
  constexpr long margin = 20;
  const long w = static_cast<long>(polygon.width());
  const long h = std::max(1L, polygon.height().get_si());
  const long px_w = 2 * margin + unit * std::max(1L, w);
  const long px_h = 2 * margin + unit * h;
  const auto sx = [&](long x) { return margin + unit * x; };
  const auto sy = [&](long y) { return px_h - margin - unit * y; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px_w << "\" height=\"" << px_h
     << "\" viewBox=\"0 0 " << px_w << ' ' << px_h << "\">\n"
     << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (long x = 0; x <= w; ++x)
    os << "    <line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(h) << "\"/>\n";
  for (long y = 0; y <= h; ++y)
    os << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(w) << "\" y2=\"" << sy(y) << "\"/>\n";
  os << "  </g>\n  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" points=\"";
  bool first = true;
  for (const auto& [x, y] : polygon.breakpoints()) {
    if (!first) os << ' ';
    first = false;
    os << sx(x.get_si()) << ',' << sy(y.get_si());
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const NewtonPolygon& polygon, std::string_view format) {
  if (format == "tsv") return render_tsv(polygon);
  if (format == "svg") return render_svg(polygon);
  throw Error(ErrorCode::UnknownFormat, "unknown polygon format '" + std::string(format) + "'");
}

}  // namespace isokit
