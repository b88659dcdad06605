#include "darkgallery/construct_convex.hpp"

#include "darkgallery/errors.hpp"
#include "darkgallery/fixtures.hpp"
#include "darkgallery/general_position.hpp"

namespace darkgallery {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::VertexGuards: return "vertex-guards";
    case Regime::Plus1: return "plus-1";
    case Regime::Plus2: return "plus-2";
  }
  return "?";
}

RegimePlan plan(int n, int k) {
  if (n < 3) throw InvalidInput("polygon needs n >= 3");
  if (k < 1) throw InvalidInput("depth k must be positive");
  RegimePlan p{n, k, Regime::VertexGuards, k};
  if (k > n && k < 4 * n - 2) {
    p.regime = Regime::Plus1;
    p.g = k + 1;
  } else if (k >= 4 * n - 2) {
    p.regime = Regime::Plus2;
    p.g = k + 2;
  }
  return p;
}

GuardSet place_vertex_guards(const ConvexPolygon& polygon, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > polygon.size())
    throw InvalidInput("vertex guards need 1 <= k <= n");
  return GuardSet(std::vector<Point2>(polygon.vertices().begin(), polygon.vertices().begin() + k));
}

ZigzagTriangulation zigzag(const ConvexPolygon& polygon) {
  const std::size_t n = polygon.size();
  ZigzagTriangulation z;
  std::size_t lo = 0, hi = n - 1;
  for (std::size_t step = 0; step < n; ++step) z.path.push_back(step % 2 == 0 ? lo++ : hi--);
  z.elbow_owner.assign(n, std::nullopt);
  for (std::size_t t = 1; t + 1 < n; ++t) {
    std::size_t u = z.path[t - 1], w = z.path[t + 1];
    std::size_t base = (u + 1) % n == w ? u : w;
    z.elbow_owner[z.path[t]] = z.triangles.size();
    z.triangles.push_back({z.path[t], base});
  }
  return z;
}

namespace {

// Parameter s with p = from + s (to - from), p known to be on that line.
Rat param_along(const Point2& from, const Point2& to, const Point2& p) {
  Vec2 d = to - from;
  return sgn(d.x) != 0 ? (p.x - from.x) / d.x : (p.y - from.y) / d.y;
}

std::optional<Point2> exit_point(const ConvexPolygon& poly, const Point2& from, const Vec2& dir) {
  ParamInterval t = clip_ray(poly, from, dir);
  if (t.empty || !t.hi) return std::nullopt;
  return from + *t.hi * dir;
}

}  // namespace

std::optional<ConstructionScaffold> build_scaffold(const ConvexPolygon& poly, const Rat& epsilon) {
  const std::size_t n = poly.size();
  auto v = [&](std::ptrdiff_t i) -> const Point2& { return poly.vertex(i); };
  auto prev = [&](std::size_t i) { return (i + n - 1) % n; };
  auto next = [&](std::size_t i) { return (i + 1) % n; };

  ConstructionScaffold s;
  s.epsilon = epsilon;
  s.zigzag = zigzag(poly);
  for (std::size_t i = 0; i < n; ++i) {
    s.p.push_back(lerp(v(i), v(i + 1), epsilon));
    s.m.push_back(lerp(v(i), v(i - 1), epsilon));
  }

  try {
    s.elbow.assign(n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.zigzag.elbow_owner[i]) {
        s.b.push_back(s.m[i]);
        s.a.push_back(s.p[i]);
        s.safe_region.push_back({s.m[i], v(i), s.p[i]});
        continue;
      }
      std::size_t j = s.zigzag.triangles[*s.zigzag.elbow_owner[i]].base;
      const Point2& pj = s.p[j];
      const Point2& mj1 = s.m[next(j)];
      Point2 l = intersect({s.m[i], s.p[i]}, {v(i), midpoint(pj, mj1)});
      if (!strictly_between(s.m[i], s.p[i], l)) return std::nullopt;
      auto b = exit_point(poly, l, l - pj);
      auto a = exit_point(poly, l, l - mj1);
      if (!b || !a || !strictly_between(v(i), s.m[i], *b) || !strictly_between(v(i), s.p[i], *a))
        return std::nullopt;
      s.elbow[i] = l;
      s.b.push_back(*b);
      s.a.push_back(*a);
      s.safe_region.push_back({*b, v(i), *a, l});
      ConvexPolygon check(s.safe_region.back());  // throws if not strictly convex
    }

    // Cut a small triangle at v_i inside R_i; x_i and w_i are its base corners.
    std::vector<Point2> w;
    for (std::size_t i = 0; i < n; ++i) {
      Rat beta = param_along(v(i), v(i - 1), s.b[i]);
      Rat alpha = param_along(v(i), v(i + 1), s.a[i]);
      Rat delta = (beta < alpha ? beta : alpha) / 4;
      s.x.push_back(lerp(v(i), v(i - 1), delta));
      w.push_back(lerp(v(i), v(i + 1), delta));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (s.elbow[i]) {
        Point2 cut = intersect({v(i), *s.elbow[i]}, {s.x[i], w[i]});
        Rat sigma = param_along(s.x[i], w[i], cut);
        if (sgn(sigma) <= 0 || sigma >= 1) return std::nullopt;
        s.y.push_back(lerp(s.x[i], w[i], (sigma + 1) / 2));
      } else {
        s.y.push_back(midpoint(s.x[i], w[i]));
      }
    }
    for (std::size_t i = 0; i < n; ++i) s.c.push_back(intersect({s.x[next(i)], s.y[i]}, {v(i), v(i - 1)}));

    for (std::size_t i = 0; i < n; ++i) {
      const Point2& xi = s.x[i];
      std::vector<Halfplane> hs = ConvexPolygon(s.safe_region[i]).halfplanes();
      hs.push_back(Halfplane::left_of(s.y[prev(i)], xi));
      hs.push_back(Halfplane::left_of(xi, s.y[i]));
      hs.push_back(Halfplane::side_of(s.y[i], s.b[i], xi));
      hs.push_back(Halfplane::side_of(s.y[prev(i)], s.c[i], xi));
      hs.push_back(Halfplane::side_of(xi, s.a[i], s.y[i]));
      auto region = bounded_intersection(hs);
      if (!region) return std::nullopt;
      s.z.push_back(vertex_centroid(region->vertices()));
    }
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return s;
}

GuardSet scaffold_guards(const ConstructionScaffold& s) {
  GuardSet g;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    g.add(s.x[i]);
    g.add(s.y[i]);
    g.add(s.z[i]);
  }
  for (const auto& l : s.elbow)
    if (l) g.add(*l);
  return g;
}

ScaffoldPlacement place_4n_minus_2(const ConvexPolygon& polygon) {
  Rat epsilon = frac(1, 4);
  std::optional<DarknessWitness> last;
  for (int attempt = 1; attempt <= 17; ++attempt, epsilon /= 2) {
    auto scaffold = build_scaffold(polygon, epsilon);
    if (!scaffold) continue;
    GuardSet guards;
    try {
      guards = scaffold_guards(*scaffold);
    } catch (const InvalidInput&) {
      continue;
    }
    DepthCertificate cert = min_depth(polygon, guards);
    if (cert.max_darkness <= 1) return {std::move(guards), std::move(*scaffold), std::move(cert), attempt};
    last = cert.witness;
  }
  throw ConstructionFailed("4n-2 construction left a 2-dark point after all retries", last);
}

GuardSet place_general_position(const ConvexRegion& region, int g) {
  if (g < 1) throw InvalidInput("guard count must be positive");
  Point2 center = std::visit(
      [](const auto& r) -> Point2 {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>)
          return vertex_centroid(r.vertices());
        else
          return r.apex() + (r.dir1() + r.dir2());
      },
      region);
  auto hs = halfplanes(region);
  Rat radius = inscribed_power_of_two(hs, center);
  DarkRayArrangement arr;
  std::size_t index = 0;
  while (arr.guards().size() < static_cast<std::size_t>(g)) {
    Point2 z = circle_point(center, radius, index++);
    if (arr.admits(z)) arr.add(z);
  }
  return arr.guards();
}

Construction construct(const ConvexPolygon& polygon, int k) {
  Construction out;
  out.plan = plan(static_cast<int>(polygon.size()), k);
  switch (out.plan.regime) {
    case Regime::VertexGuards:
      out.guards = place_vertex_guards(polygon, k);
      break;
    case Regime::Plus1: {
      // Any subset of a 2-dark-free set stays 2-dark free.
      ScaffoldPlacement full = place_4n_minus_2(polygon);
      std::vector<Point2> pts(full.guards.points().begin(), full.guards.points().begin() + out.plan.g);
      out.guards = GuardSet(std::move(pts));
      break;
    }
    case Regime::Plus2:
      out.guards = place_general_position(polygon, out.plan.g);
      break;
  }
  out.certificate = min_depth(polygon, out.guards);
  if (out.certificate.min_depth < k)
    throw ConstructionFailed("construction certified below the requested depth", out.certificate.witness);
  return out;
}

int guards_for_wedge(int k) {
  if (k < 1) throw InvalidInput("depth k must be positive");
  if (k <= 2) return k;
  if (k <= 9) return k + 1;
  return k + 2;
}

GuardSet place_wedge(const Wedge& wedge, int k) {
  int g = guards_for_wedge(k);
  if (k == 1) return GuardSet({wedge.apex()});
  if (k == 2) return GuardSet({wedge.apex() + wedge.dir1(), wedge.apex() + wedge.dir2()});
  if (k >= 10) return place_general_position(wedge, g);
  Wedge ref = fixtures::wedge();
  Point2 src[3] = {ref.apex(), ref.apex() + ref.dir1(), ref.apex() + ref.dir2()};
  Point2 dst[3] = {wedge.apex(), wedge.apex() + wedge.dir1(), wedge.apex() + wedge.dir2()};
  AffineMap map = affine_from_points(src, dst);
  GuardSet base = fixtures::wedge_guards();
  std::vector<Point2> out;
  for (int i = 0; i < g; ++i) out.push_back(map(base[static_cast<std::size_t>(i)]));
  return GuardSet(std::move(out));
}

}  // namespace darkgallery
