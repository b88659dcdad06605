#include "darkgallery/render.hpp"

#include "darkgallery/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace darkgallery {

namespace {

struct P {
  double x, y;
};

P to_p(const Point2& p) { return {to_double(p.x), to_double(p.y)}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Clip origin + t*dir, t >= 0, to the box. Returns false when it misses.
bool clip_ray(P o, P d, const std::array<double, 4>& box, P& a, P& b) {
  double t0 = 0, t1 = INFINITY;
  const double lo[2] = {box[0], box[1]}, hi[2] = {box[2], box[3]};
  const double org[2] = {o.x, o.y}, dir[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (dir[k] == 0) {
      if (org[k] < lo[k] || org[k] > hi[k]) return false;
      continue;
    }
    double ta = (lo[k] - org[k]) / dir[k], tb = (hi[k] - org[k]) / dir[k];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  if (t0 >= t1) return false;
  a = {o.x + t0 * d.x, o.y + t0 * d.y};
  b = {o.x + t1 * d.x, o.y + t1 * d.y};
  return true;
}

}  // namespace

std::array<double, 4> parse_zoom(const std::string& text) {
  std::array<double, 4> z{};
  std::stringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 4) throw InvalidInput("zoom takes xmin,ymin,xmax,ymax");
    try {
      z[static_cast<std::size_t>(i++)] = std::stod(part);
    } catch (const std::exception&) {
      throw InvalidInput("bad zoom value \"" + part + "\"");
    }
  }
  if (i != 4 || !(z[0] < z[2]) || !(z[1] < z[3])) throw InvalidInput("zoom takes xmin,ymin,xmax,ymax with min < max");
  return z;
}

std::string render_svg(const Region& region, const GuardSet& guards, const RenderOptions& options) {
  std::vector<P> outline;
  bool closed = true;
  if (const auto* w = std::get_if<Wedge>(&region)) {
    outline = {to_p(w->apex() + w->dir1()), to_p(w->apex()), to_p(w->apex() + w->dir2())};
    closed = false;
  } else if (const auto* c = std::get_if<ConvexPolygon>(&region)) {
    for (const auto& v : c->vertices()) outline.push_back(to_p(v));
  } else {
    for (const auto& v : std::get<SimplePolygon>(region).vertices()) outline.push_back(to_p(v));
  }

  std::array<double, 4> box{};
  if (options.zoom) {
    box = *options.zoom;
  } else {
    std::vector<P> all = outline;
    for (const auto& g : guards.points()) all.push_back(to_p(g));
    box = {all[0].x, all[0].y, all[0].x, all[0].y};
    for (const P& p : all) {
      box[0] = std::min(box[0], p.x);
      box[1] = std::min(box[1], p.y);
      box[2] = std::max(box[2], p.x);
      box[3] = std::max(box[3], p.y);
    }
    double pad = 0.05 * std::max({box[2] - box[0], box[3] - box[1], 1e-9});
    box = {box[0] - pad, box[1] - pad, box[2] + pad, box[3] + pad};
  }

  const double scale = options.width / (box[2] - box[0]);
  const double height = scale * (box[3] - box[1]);
  auto X = [&](double x) { return num((x - box[0]) * scale); };
  auto Y = [&](double y) { return num((box[3] - y) * scale); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(options.width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(options.width) << ' ' << num(height)
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!closed) {
    // Stretch the wedge edges past the frame.
    const P apex = outline[1];
    double reach = 0;
    for (int k = 0; k < 4; ++k) {
      double cx = box[k % 2 == 0 ? 0 : 2], cy = box[k < 2 ? 1 : 3];
      reach = std::max(reach, std::hypot(cx - apex.x, cy - apex.y));
    }
    for (int k : {0, 2}) {
      double dx = outline[static_cast<std::size_t>(k)].x - apex.x, dy = outline[static_cast<std::size_t>(k)].y - apex.y;
      double f = 2 * reach / std::hypot(dx, dy);
      outline[static_cast<std::size_t>(k)] = {apex.x + f * dx, apex.y + f * dy};
    }
  }
  svg << "<polygon class=\"region\" fill=\"#f2f2f2\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) svg << (i ? " " : "") << X(outline[i].x) << ',' << Y(outline[i].y);
  svg << "\"/>\n";

  if (options.dark_rays) {
    svg << "<g class=\"dark-rays\" stroke=\"#c03030\" stroke-width=\"0.6\">\n";
    for (std::size_t i = 0; i < guards.size(); ++i)
      for (std::size_t j = 0; j < guards.size(); ++j) {
        if (i == j) continue;
        P o = to_p(guards[i]), q = to_p(guards[j]);
        P a{}, b{};
        if (!clip_ray(o, {o.x - q.x, o.y - q.y}, box, a, b)) continue;
        svg << "<line class=\"dark-ray\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x)
            << "\" y2=\"" << Y(b.y) << "\"/>\n";
      }
    svg << "</g>\n";
  }

  svg << "<g class=\"guards\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const auto& g : guards.points()) {
    P p = to_p(g);
    svg << "<circle class=\"guard\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"4\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace darkgallery
