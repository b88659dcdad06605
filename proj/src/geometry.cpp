#include "darkgallery/geometry.hpp"

#include "darkgallery/errors.hpp"

#include <algorithm>

namespace darkgallery {

bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
bool operator<(const Point2& a, const Point2& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return a.y < b.y;
}

Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
Point2 operator-(const Point2& p, const Vec2& v) { return {p.x - v.x, p.y - v.y}; }
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }
Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }

Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
bool is_zero(const Vec2& v) { return sgn(v.x) == 0 && sgn(v.y) == 0; }

Point2 lerp(const Point2& a, const Point2& b, const Rat& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Point2 midpoint(const Point2& a, const Point2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rat l = (b.x - a.x) * (c.y - a.y);
  Rat r = (b.y - a.y) * (c.x - a.x);
  return cmp(l, r) > 0 ? 1 : (cmp(l, r) < 0 ? -1 : 0);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orientation(a, b, p) != 0) return false;
  return sgn(dot(p - a, b - a)) >= 0 && sgn(dot(p - b, a - b)) >= 0;
}

bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
  if (orientation(a, b, p) != 0) return false;
  return sgn(dot(p - a, b - a)) > 0 && sgn(dot(p - b, a - b)) > 0;
}

LineIntersection line_intersection(const Line& l1, const Line& l2) {
  if (l1.p == l1.q || l2.p == l2.q) throw InvalidInput("line defined by two equal points");
  Vec2 d1 = l1.q - l1.p;
  Vec2 d2 = l2.q - l2.p;
  Rat den = cross(d1, d2);
  if (sgn(den) == 0) {
    if (orientation(l1.p, l1.q, l2.p) == 0) return Coincident{};
    return Parallel{};
  }
  Rat t = cross(l2.p - l1.p, d2) / den;
  return l1.p + t * d1;
}

Point2 intersect(const Line& l1, const Line& l2) {
  auto r = line_intersection(l1, l2);
  if (auto* p = std::get_if<Point2>(&r)) return *p;
  throw InvalidInput("lines do not meet in a single point");
}

Halfplane Halfplane::left_of(const Point2& from, const Point2& to) {
  if (from == to) throw InvalidInput("halfplane from two equal points");
  // cross(to - from, p - from) >= 0
  Rat a = -(to.y - from.y);
  Rat b = to.x - from.x;
  Rat c = -(a * from.x + b * from.y);
  return {a, b, c};
}

Halfplane Halfplane::side_of(const Point2& p, const Point2& q, const Point2& ref) {
  int o = orientation(p, q, ref);
  if (o == 0) throw InvalidInput("reference point lies on the line");
  return o > 0 ? left_of(p, q) : left_of(q, p);
}

Rat Halfplane::eval(const Point2& p) const { return a * p.x + b * p.y + c; }

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InvalidInput("convex polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (vertices_[i] == vertices_[j]) throw InvalidInput("repeated polygon vertex");
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      int o = orientation(a, b, vertices_[j]);
      if (o == 0) throw InvalidInput("polygon has three collinear vertices");
      if (o < 0) throw InvalidInput("polygon is not strictly convex and counterclockwise");
    }
  }
}

const Point2& ConvexPolygon::vertex(std::ptrdiff_t i) const {
  auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::vector<Halfplane> ConvexPolygon::halfplanes() const {
  std::vector<Halfplane> hs;
  hs.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    hs.push_back(Halfplane::left_of(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  return hs;
}

Wedge::Wedge(Point2 apex, Vec2 dir1, Vec2 dir2)
    : apex_(std::move(apex)), dir1_(std::move(dir1)), dir2_(std::move(dir2)) {
  if (is_zero(dir1_) || is_zero(dir2_)) throw InvalidInput("wedge direction is zero");
  int s = sgn(cross(dir1_, dir2_));
  if (s == 0) throw InvalidInput("wedge directions are parallel");
  if (s < 0) std::swap(dir1_, dir2_);
}

std::vector<Halfplane> Wedge::halfplanes() const {
  return {Halfplane::left_of(apex_, apex_ + dir1_), Halfplane::left_of(apex_ + dir2_, apex_)};
}

std::vector<Halfplane> halfplanes(const ConvexRegion& region) {
  return std::visit([](const auto& r) { return r.halfplanes(); }, region);
}

bool contains(std::span<const Halfplane> hs, const Point2& p, Boundary mode) {
  for (const auto& h : hs) {
    int s = sgn(h.eval(p));
    if (s < 0 || (s == 0 && mode == Boundary::Open)) return false;
  }
  return true;
}

bool contains(const ConvexRegion& region, const Point2& p, Boundary mode) {
  auto hs = halfplanes(region);
  return contains(hs, p, mode);
}

bool ParamInterval::contains(const Rat& t) const {
  if (empty) return false;
  if (lo && t < *lo) return false;
  if (hi && t > *hi) return false;
  return true;
}

ParamInterval clip_line(std::span<const Halfplane> hs, const Point2& origin, const Vec2& dir) {
  if (is_zero(dir)) throw InvalidInput("zero direction");
  ParamInterval out;
  for (const auto& h : hs) {
    Rat slope = h.a * dir.x + h.b * dir.y;
    Rat value = h.eval(origin);
    int s = sgn(slope);
    if (s == 0) {
      if (sgn(value) < 0) return ParamInterval{true, std::nullopt, std::nullopt};
      continue;
    }
    Rat t = -value / slope;
    if (s > 0) {
      if (!out.lo || t > *out.lo) out.lo = t;
    } else {
      if (!out.hi || t < *out.hi) out.hi = t;
    }
  }
  if (out.lo && out.hi && *out.lo > *out.hi) return ParamInterval{true, std::nullopt, std::nullopt};
  return out;
}

ParamInterval clip_ray(const ConvexRegion& region, const Point2& origin, const Vec2& dir) {
  auto hs = halfplanes(region);
  ParamInterval out = clip_line(hs, origin, dir);
  if (out.empty) return out;
  if (!out.lo || *out.lo < 0) out.lo = Rat(0);
  if (out.hi && *out.hi < *out.lo) return ParamInterval{true, std::nullopt, std::nullopt};
  return out;
}

HalfplaneIntersection halfplane_intersection(std::span<const Halfplane> input) {
  std::vector<Halfplane> hs;
  for (const auto& h : input) {
    if (sgn(h.a) == 0 && sgn(h.b) == 0) {
      if (sgn(h.c) < 0) return {HalfplaneStatus::Empty, {}};
      continue;
    }
    hs.push_back(h);
  }
  if (hs.empty()) return {HalfplaneStatus::Unbounded, {}};

  std::vector<Point2> corners;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rat det = hs[i].a * hs[j].b - hs[i].b * hs[j].a;
      if (sgn(det) == 0) continue;
      Point2 p{(hs[i].b * hs[j].c - hs[i].c * hs[j].b) / det,
               (hs[i].c * hs[j].a - hs[i].a * hs[j].c) / det};
      if (contains(hs, p)) corners.push_back(std::move(p));
    }
  }

  bool recedes = false;
  for (const auto& h : hs) {
    for (int s : {1, -1}) {
      Vec2 d{Rat(-h.b * s), Rat(h.a * s)};
      bool ok = true;
      for (const auto& k : hs)
        if (sgn(k.a * d.x + k.b * d.y) < 0) { ok = false; break; }
      if (ok) { recedes = true; break; }
    }
    if (recedes) break;
  }

  if (recedes) {
    if (!corners.empty()) return {HalfplaneStatus::Unbounded, {}};
    for (const auto& h : hs) {
      Point2 foot = sgn(h.a) != 0 ? Point2{-h.c / h.a, Rat(0)} : Point2{Rat(0), -h.c / h.b};
      if (contains(hs, foot)) return {HalfplaneStatus::Unbounded, {}};
    }
    return {HalfplaneStatus::Empty, {}};
  }

  if (corners.empty()) return {HalfplaneStatus::Empty, {}};
  ConvexHull hull = convex_hull(corners);
  if (hull.degenerate()) return {HalfplaneStatus::Degenerate, hull.corners};
  return {HalfplaneStatus::Bounded, hull.corners};
}

std::optional<ConvexPolygon> bounded_intersection(std::span<const Halfplane> hs) {
  HalfplaneIntersection r = halfplane_intersection(hs);
  if (r.status == HalfplaneStatus::Unbounded) throw UnboundedRegion("halfplane intersection is unbounded");
  if (r.status != HalfplaneStatus::Bounded) return std::nullopt;
  return ConvexPolygon(std::move(r.vertices));
}

ConvexHull convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw InvalidInput("convex hull of no points");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ConvexHull hull;
  if (pts.size() == 1) {
    hull.corners = pts;
  } else {
    // Monotone chain keeping strict corners only.
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && orientation(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) h = {pts.front(), pts.back()};
    hull.corners = std::move(h);
  }

  const auto& c = hull.corners;
  hull.roles.reserve(points.size());
  for (const auto& p : points) {
    if (std::find(c.begin(), c.end(), p) != c.end()) {
      hull.roles.push_back(HullRole::Corner);
      continue;
    }
    bool boundary = false;
    if (c.size() == 2) {
      boundary = true;  // every input lies on the segment
    } else {
      for (std::size_t i = 0; i < c.size() && !boundary; ++i)
        boundary = on_segment(c[i], c[(i + 1) % c.size()], p);
    }
    hull.roles.push_back(boundary ? HullRole::Collinear : HullRole::Interior);
  }
  return hull;
}

ConvexPolygon ConvexHull::polygon() const {
  if (degenerate()) throw InvalidInput("degenerate hull (all points collinear)");
  return ConvexPolygon(corners);
}

Point2 vertex_centroid(std::span<const Point2> points) {
  if (points.empty()) throw InvalidInput("centroid of no points");
  Rat sx = 0, sy = 0;
  for (const auto& p : points) {
    sx += p.x;
    sy += p.y;
  }
  Rat n(static_cast<long>(points.size()));
  return {sx / n, sy / n};
}

Point2 AffineMap::operator()(const Point2& p) const {
  return {a * p.x + b * p.y + c, d * p.x + e * p.y + f};
}

Vec2 AffineMap::linear(const Vec2& v) const { return {a * v.x + b * v.y, d * v.x + e * v.y}; }

AffineMap affine_from_points(const Point2 (&src)[3], const Point2 (&dst)[3]) {
  Vec2 s1 = src[1] - src[0], s2 = src[2] - src[0];
  Vec2 t1 = dst[1] - dst[0], t2 = dst[2] - dst[0];
  Rat det = cross(s1, s2);
  if (sgn(det) == 0) throw InvalidInput("affine map from collinear points");
  // Linear part L with L s1 = t1, L s2 = t2: L = [t1 t2] [s1 s2]^-1.
  Rat i11 = s2.y / det, i12 = -s2.x / det;
  Rat i21 = -s1.y / det, i22 = s1.x / det;
  AffineMap m;
  m.a = t1.x * i11 + t2.x * i21;
  m.b = t1.x * i12 + t2.x * i22;
  m.d = t1.y * i11 + t2.y * i21;
  m.e = t1.y * i12 + t2.y * i22;
  m.c = dst[0].x - (m.a * src[0].x + m.b * src[0].y);
  m.f = dst[0].y - (m.d * src[0].x + m.e * src[0].y);
  return m;
}

ConvexPolygon transform(const AffineMap& m, const ConvexPolygon& poly) {
  if (sgn(m.det()) == 0) throw InvalidInput("singular affine map");
  std::vector<Point2> out;
  for (const auto& v : poly.vertices()) out.push_back(m(v));
  if (sgn(m.det()) < 0) std::reverse(out.begin(), out.end());
  return ConvexPolygon(std::move(out));
}

Wedge transform(const AffineMap& m, const Wedge& wedge) {
  if (sgn(m.det()) == 0) throw InvalidInput("singular affine map");
  return Wedge(m(wedge.apex()), m.linear(wedge.dir1()), m.linear(wedge.dir2()));
}

ConvexRegion transform(const AffineMap& m, const ConvexRegion& region) {
  return std::visit([&](const auto& r) -> ConvexRegion { return transform(m, r); }, region);
}

std::vector<Point2> transform(const AffineMap& m, std::span<const Point2> points) {
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(m(p));
  return out;
}

}  // namespace darkgallery
