#include "darkgallery/fixtures.hpp"

#include "darkgallery/errors.hpp"

namespace darkgallery::fixtures {

namespace {

Point2 pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

Point2 mirror(const Point2& p) { return {-p.x, p.y}; }

GuardSet triangle_orbit(const Point2& g5) {
  AffineMap t = triangle_rotation();
  std::vector<Point2> base{g5, pt("-102.6", "-100"), pt("-118", "-49")};
  std::vector<Point2> all = base;
  for (int turn = 1; turn <= 2; ++turn)
    for (auto& p : base) {
      p = t(p);
      all.push_back(p);
    }
  all.push_back(pt("0", "0"));
  return GuardSet(std::move(all));
}

GuardSet wedge_set(std::vector<Point2> left, const Point2& g1, const Point2& g2, const Point2& g9,
                   const Point2& g10) {
  // left = g3, g5, g7; g4, g6, g8 mirror them.
  return GuardSet({g1, g2, left[0], mirror(left[0]), left[1], mirror(left[1]), left[2], mirror(left[2]), g9, g10});
}

}  // namespace

ConvexPolygon triangle() { return ConvexPolygon({pt("-866/5", "-100"), pt("866/5", "-100"), pt("0", "200")}); }

AffineMap triangle_rotation() {
  ConvexPolygon tri = triangle();
  const auto& v = tri.vertices();
  Point2 src[3] = {v[2], v[0], v[1]};
  Point2 dst[3] = {v[0], v[1], v[2]};
  return affine_from_points(src, dst);
}

GuardSet triangle_guards_table() { return triangle_orbit(pt("-102.57", "-96")); }
GuardSet triangle_guards() { return triangle_orbit(pt("-102.57", "-97.5")); }

ConvexPolygon square() {
  return ConvexPolygon({pt("-200", "-200"), pt("200", "-200"), pt("200", "200"), pt("-200", "200")});
}

GuardSet square_guards() {
  std::vector<Point2> all{pt("-65", "-120"), pt("65", "120")};
  std::vector<Point2> corner{pt("-180", "-180"), pt("-198", "-137.7"), pt("-200", "-135")};
  for (int turn = 0; turn < 4; ++turn)
    for (auto& p : corner) {
      all.push_back(p);
      p = Point2{-p.y, p.x};
    }
  return GuardSet(std::move(all));
}

Wedge wedge() { return Wedge(pt("0", "200"), Vec2{Rat(-381), Rat(-660)}, Vec2{Rat(381), Rat(-660)}); }

GuardSet wedge_guards_table() {
  return wedge_set({pt("-70", "50"), pt("-41", "120"), pt("-38.1", "134")}, pt("0", "-600"), pt("-9", "-270"),
                   pt("8", "150"), pt("0", "180"));
}

GuardSet wedge_guards() {
  // g7 sits on the left edge at height 132.8.
  Rat y7 = parse_rat("132.8");
  Point2 g7{-(Rat(200) - y7) * Rat(381) / Rat(660), y7};
  return wedge_set({pt("-65.5", "62.9"), pt("-43.4", "119"), g7}, pt("0", "-1600"), pt("-15.7", "-205.6"),
                   pt("8", "151.9"), pt("0", "177.2"));
}

std::vector<std::string> placement_names() {
  return {"triangle", "triangle-table", "square", "wedge", "wedge-table"};
}

Named placement(const std::string& name) {
  if (name == "triangle") return {name, triangle(), triangle_guards()};
  if (name == "triangle-table") return {name, triangle(), triangle_guards_table()};
  if (name == "square") return {name, square(), square_guards()};
  if (name == "wedge") return {name, wedge(), wedge_guards()};
  if (name == "wedge-table") return {name, wedge(), wedge_guards_table()};
  throw InvalidInput("unknown fixture '" + name + "'");
}

}  // namespace darkgallery::fixtures
