#include "darkgallery/darkness.hpp"

#include "darkgallery/errors.hpp"
#include "darkgallery/parallel.hpp"
#include "kernel.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace darkgallery {

GuardSet::GuardSet(std::vector<Point2> guards) {
  for (auto& g : guards) add(std::move(g));
}

void GuardSet::add(Point2 p) {
  if (find(p)) throw InvalidInput("co-located guards at (" + to_string(p.x) + ", " + to_string(p.y) + ")");
  guards_.push_back(std::move(p));
}

std::optional<std::size_t> GuardSet::find(const Point2& p) const {
  for (std::size_t i = 0; i < guards_.size(); ++i)
    if (guards_[i] == p) return i;
  return std::nullopt;
}

GuardLine make_guard_line(const GuardSet& guards, std::vector<std::size_t> members) {
  if (members.size() < 2) throw InvalidInput("a guard line needs two guards");
  // Lexicographic order is a linear order along any line; it also makes the
  // representation independent of guard numbering.
  std::sort(members.begin(), members.end(),
            [&](std::size_t a, std::size_t b) { return guards[a] < guards[b]; });
  GuardLine line;
  line.anchor = guards[members.front()];
  line.direction = guards[members.back()] - line.anchor;
  Rat len2 = dot(line.direction, line.direction);
  for (std::size_t idx : members) {
    if (orientation(line.anchor, guards[members.back()], guards[idx]) != 0)
      throw InvalidInput("guard line members are not collinear");
    line.params.push_back(dot(guards[idx] - line.anchor, line.direction) / len2);
  }
  for (std::size_t k = 1; k < members.size(); ++k)
    if (line.params[k] == line.params[k - 1]) throw InvalidInput("co-located guards on a line");
  line.members = std::move(members);
  return line;
}

std::vector<GuardLine> collinear_groups(const GuardSet& guards) {
  std::vector<GuardLine> out;
  const std::size_t g = guards.size();
  for (std::size_t i = 0; i < g; ++i) {
    std::map<std::pair<BigInt, BigInt>, std::vector<std::size_t>> by_dir;
    for (std::size_t j = 0; j < g; ++j)
      if (j != i) by_dir[kernel::undirected(guards[j] - guards[i])].push_back(j);
    for (auto& [key, rest] : by_dir) {
      if (rest.front() < i) continue;  // the line belongs to its smallest index
      std::vector<std::size_t> members{i};
      members.insert(members.end(), rest.begin(), rest.end());
      out.push_back(make_guard_line(guards, std::move(members)));
    }
  }
  std::sort(out.begin(), out.end(), [](const GuardLine& a, const GuardLine& b) {
    if (!(a.anchor == b.anchor)) return a.anchor < b.anchor;
    return a.at(1) < b.at(1);
  });
  return out;
}

std::vector<DarkPortion> dark_portions(const GuardLine& line, std::size_t line_index) {
  const int m = static_cast<int>(line.size());
  std::vector<DarkPortion> out;
  out.push_back({line_index, std::nullopt, line.params.front(), m - 1});
  for (std::size_t k = 0; k + 1 < line.params.size(); ++k)
    out.push_back({line_index, line.params[k], line.params[k + 1], m - 2});
  out.push_back({line_index, line.params.back(), std::nullopt, m - 1});
  return out;
}

DarknessWitness darkness_at(const GuardSet& guards, const Point2& p) {
  std::map<std::pair<BigInt, BigInt>, std::vector<std::size_t>> by_dir;
  std::optional<std::size_t> self;
  for (std::size_t i = 0; i < guards.size(); ++i) {
    if (guards[i] == p) {
      self = i;
      continue;
    }
    by_dir[kernel::primitive(guards[i] - p)].push_back(i);
  }

  DarknessWitness w;
  w.point = p;
  for (const auto& [key, cls] : by_dir) w.darkness += static_cast<int>(cls.size()) - 1;

  for (const auto& [key, cls] : by_dir) {
    std::pair<BigInt, BigInt> opp{-key.first, -key.second};
    auto it = by_dir.find(opp);
    bool canonical = sgn(key.first) > 0 || (sgn(key.first) == 0 && sgn(key.second) > 0);
    if (it != by_dir.end() && !canonical) continue;  // handled from the other side
    int blocked = static_cast<int>(cls.size()) - 1;
    std::vector<std::size_t> members = cls;
    if (it != by_dir.end()) {
      blocked += static_cast<int>(it->second.size()) - 1;
      members.insert(members.end(), it->second.begin(), it->second.end());
    }
    if (blocked == 0) continue;
    if (self) members.push_back(*self);
    w.contributing_lines.push_back({make_guard_line(guards, std::move(members)), blocked});
  }
  std::sort(w.contributing_lines.begin(), w.contributing_lines.end(),
            [](const LineContribution& a, const LineContribution& b) {
              if (!(a.line.anchor == b.line.anchor)) return a.line.anchor < b.line.anchor;
              return a.line.at(1) < b.line.at(1);
            });
  return w;
}

DarknessWitness darkness_at(const ConvexRegion& region, const GuardSet& guards, const Point2& p) {
  if (!contains(region, p)) throw InvalidInput("query point outside the region");
  return darkness_at(guards, p);
}

namespace {

// One guard line prepared for the crossing scan. f(P) = dx*x + dy*y grows
// along the members; everything on the line is compared in f.
struct ScanLine {
  kernel::IntLine eq;
  BigInt dx, dy;
  std::vector<Rat> member_f;
  std::optional<Rat> lo, hi;  // region clip, in f
  bool clip_empty = false;
  ParamInterval clip;         // region clip, in the line's own parameter
  std::vector<std::size_t> members;
  std::vector<signed char> side;  // per guard: sign of the line equation
  kernel::HPoint clip_lo, clip_hi;  // clip ends; w = 0 for an unbounded end
  int m = 0;
  Rat f_anchor, f_scale;      // f(anchor + t*direction) = f_anchor + t*f_scale
};

ScanLine prepare(const GuardLine& line, std::span<const Halfplane> hs) {
  ScanLine s;
  auto [dx, dy] = kernel::primitive(line.direction);
  s.dx = dx;
  s.dy = dy;
  s.eq = kernel::line_through(line.anchor, line.at(1));
  s.m = static_cast<int>(line.size());
  s.f_anchor = Rat(dx) * line.anchor.x + Rat(dy) * line.anchor.y;
  s.f_scale = Rat(dx) * line.direction.x + Rat(dy) * line.direction.y;
  for (const Rat& t : line.params) s.member_f.push_back(s.f_anchor + t * s.f_scale);
  ParamInterval clip = clip_line(hs, line.anchor, line.direction);
  s.clip = clip;
  s.clip_empty = clip.empty;
  if (!clip.empty) {
    if (clip.lo) s.clip_lo = kernel::homogenize(line.at(*clip.lo));
    else s.clip_lo = {-dx, -dy, BigInt(0)};
    if (clip.hi) s.clip_hi = kernel::homogenize(line.at(*clip.hi));
    else s.clip_hi = {dx, dy, BigInt(0)};
  }
  if (clip.lo) s.lo = s.f_anchor + *clip.lo * s.f_scale;
  if (clip.hi) s.hi = s.f_anchor + *clip.hi * s.f_scale;
  return s;
}

struct Scratch {
  BigInt f, s1, s2;
};

// Blocked count of the portion containing f/w, or -1 when f/w is a member.
// Same count read off the side table of the other line: along `line` the
// members switch sides of `other` at most once, and the crossing sits where
// they do. Parallel lines come out as if crossing beyond the members.
int classify_by_sides(const ScanLine& line, const ScanLine& other) {
  const signed char first = other.side[line.members.front()];
  bool flips = false;
  for (std::size_t g : line.members) {
    signed char s = other.side[g];
    if (s == 0) return -1;
    flips = flips || s != first;
  }
  return flips ? line.m - 2 : line.m - 1;
}

int side_of(const ScanLine& line, const kernel::HPoint& p, BigInt& v) {
  mpz_mul(v.get_mpz_t(), line.eq.a.get_mpz_t(), p.x.get_mpz_t());
  mpz_addmul(v.get_mpz_t(), line.eq.b.get_mpz_t(), p.y.get_mpz_t());
  mpz_addmul(v.get_mpz_t(), line.eq.c.get_mpz_t(), p.w.get_mpz_t());
  return sgn(v);
}

// Both clip ends of `line` strictly on one side of `other`: they cannot meet
// inside the region.
bool misses_clip(const ScanLine& line, const ScanLine& other, BigInt& v) {
  int a = side_of(other, line.clip_lo, v);
  return a != 0 && side_of(other, line.clip_hi, v) == a;
}

int classify(const ScanLine& line, const BigInt& f, const BigInt& w, Scratch& sc) {
  std::size_t k = 0;
  for (; k < line.member_f.size(); ++k) {
    int c = kernel::compare(f, w, line.member_f[k], sc.s1, sc.s2);
    if (c == 0) return -1;
    if (c < 0) break;
  }
  if (k == 0 || k == line.member_f.size()) return line.m - 1;
  return line.m - 2;
}

bool inside_clip(const ScanLine& line, const BigInt& f, const BigInt& w, Scratch& sc) {
  if (line.lo && kernel::compare(f, w, *line.lo, sc.s1, sc.s2) < 0) return false;
  if (line.hi && kernel::compare(f, w, *line.hi, sc.s1, sc.s2) > 0) return false;
  return true;
}

void eval_f(const ScanLine& line, const kernel::HPoint& p, BigInt& out) {
  mpz_mul(out.get_mpz_t(), line.dx.get_mpz_t(), p.x.get_mpz_t());
  mpz_addmul(out.get_mpz_t(), line.dy.get_mpz_t(), p.y.get_mpz_t());
}

struct Crossing {
  Point2 point;
  std::size_t i, j;
  int bi, bj;
};

struct Best {
  bool set = false;
  Point2 point;
  int darkness = -1;

  void consider(const Point2& p, int d) {
    if (!set || d > darkness || (d == darkness && p < point)) {
      set = true;
      point = p;
      darkness = d;
    }
  }
};

// Max darkness over the closed region by candidate evaluation. With stop_at,
// returns as soon as some candidate reaches it.
Best scan(const ConvexRegion& region, const GuardSet& guards, std::optional<int> stop_at) {
  auto hs = halfplanes(region);
  for (std::size_t i = 0; i < guards.size(); ++i)
    if (!contains(hs, guards[i]))
      throw InvalidInput("guard " + std::to_string(i) + " lies outside the region");

  Best best;
  auto done = [&] { return stop_at && best.darkness >= *stop_at; };

  for (std::size_t i = 0; i < guards.size(); ++i) {
    best.consider(guards[i], darkness_at(guards, guards[i]).darkness);
    if (done()) return best;
  }

  std::vector<GuardLine> lines = collinear_groups(guards);
  std::vector<ScanLine> prepared;
  std::vector<std::size_t> live;
  prepared.reserve(lines.size());
  std::vector<kernel::HPoint> hom;
  for (const Point2& g : guards.points()) hom.push_back(kernel::homogenize(g));
  BigInt v;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    prepared.push_back(prepare(lines[li], hs));
    ScanLine& s = prepared.back();
    s.members = lines[li].members;
    s.side.reserve(hom.size());
    for (const kernel::HPoint& h : hom) s.side.push_back(static_cast<signed char>(side_of(s, h, v)));
    if (!s.clip_empty) live.push_back(li);
  }

  // Portion representatives.
  for (std::size_t li : live) {
    const GuardLine& line = lines[li];
    const ParamInterval& clip = prepared[li].clip;
    for (const DarkPortion& portion : dark_portions(line, li)) {
      if (portion.blocked_count <= 0) continue;
      std::optional<Rat> a = portion.lo, b = portion.hi;
      bool a_open = true, b_open = true;
      if (clip.lo && (!a || *clip.lo >= *a)) {
        a_open = a && *clip.lo == *a;
        a = clip.lo;
      }
      if (clip.hi && (!b || *clip.hi <= *b)) {
        b_open = b && *clip.hi == *b;
        b = clip.hi;
      }
      Rat t;
      if (a && b) {
        int c = cmp(*a, *b);
        if (c > 0 || (c == 0 && (a_open || b_open))) continue;
        t = (*a + *b) / 2;
      } else if (a) {
        t = *a + 1;
      } else if (b) {
        t = *b - 1;
      } else {
        t = 0;
      }
      best.consider(line.at(t), portion.blocked_count);
      if (done()) return best;
    }
  }

  // Crossings of dark portions, split across workers by the first line.
  unsigned workers = std::min<unsigned>(thread_count(), std::max<std::size_t>(1, live.size() / 16));
  std::vector<std::vector<Crossing>> found(workers);
  std::atomic<bool> stop{false};
  run_workers(workers, [&](unsigned w, unsigned count) {
    Scratch sc;
    kernel::HPoint p;
    BigInt f;
    for (std::size_t a = w; a < live.size(); a += count) {
      if (stop.load(std::memory_order_relaxed)) return;
      const ScanLine& l1 = prepared[live[a]];
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        const ScanLine& l2 = prepared[live[b]];
        if (classify_by_sides(l1, l2) <= 0 || classify_by_sides(l2, l1) <= 0) continue;
        if (misses_clip(l1, l2, f)) continue;
        if (!kernel::meet(l1.eq, l2.eq, p)) continue;
        eval_f(l1, p, f);
        if (!inside_clip(l1, f, p.w, sc)) continue;
        int b1 = classify(l1, f, p.w, sc);
        if (b1 <= 0) continue;
        eval_f(l2, p, f);
        int b2 = classify(l2, f, p.w, sc);
        if (b2 <= 0) continue;
        found[w].push_back({kernel::dehomogenize(p), live[a], live[b], b1, b2});
        if (stop_at && b1 + b2 >= *stop_at) {
          stop.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  });

  std::vector<Crossing> all;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const Crossing& a, const Crossing& b) { return a.point < b.point; });
  std::vector<std::pair<std::size_t, int>> through;
  for (std::size_t s = 0; s < all.size();) {
    std::size_t e = s;
    through.clear();
    while (e < all.size() && all[e].point == all[s].point) {
      through.emplace_back(all[e].i, all[e].bi);
      through.emplace_back(all[e].j, all[e].bj);
      ++e;
    }
    std::sort(through.begin(), through.end());
    through.erase(std::unique(through.begin(), through.end()), through.end());
    int total = 0;
    for (const auto& t : through) total += t.second;
    best.consider(all[s].point, total);
    if (done()) return best;
    s = e;
  }
  return best;
}

}  // namespace

DarknessWitness max_darkness(const ConvexRegion& region, const GuardSet& guards) {
  if (guards.empty()) throw InvalidInput("empty guard set");
  Best best = scan(region, guards, std::nullopt);
  DarknessWitness w = darkness_at(guards, best.point);
  if (w.darkness != best.darkness) throw std::logic_error("darkness candidate mismatch");
  return w;
}

DepthCertificate min_depth(const ConvexRegion& region, const GuardSet& guards) {
  DepthCertificate cert;
  cert.witness = max_darkness(region, guards);
  cert.guard_count = guards.size();
  cert.max_darkness = cert.witness.darkness;
  cert.min_depth = static_cast<int>(guards.size()) - cert.max_darkness;
  return cert;
}

JDarkResult has_j_dark(const ConvexRegion& region, const GuardSet& guards, int j) {
  if (j < 1) throw InvalidInput("j must be positive");
  if (guards.empty()) throw InvalidInput("empty guard set");
  Best best = scan(region, guards, j);
  JDarkResult r;
  if (best.darkness >= j) {
    r.found = true;
    r.witness = darkness_at(guards, best.point);
  }
  return r;
}

BoundaryCensus boundary_census(const ConvexPolygon& polygon, const GuardSet& guards) {
  const std::size_t n = polygon.size();
  BoundaryCensus out;
  out.edge_weights.assign(n, Rat(0));
  out.darkened.assign(n, false);

  std::vector<bool> vertex_guarded(n, false);
  std::vector<int> interior(n, 0);
  std::vector<Point2> on_boundary;
  for (const Point2& g : guards.points()) {
    bool placed = false;
    for (std::size_t i = 0; i < n && !placed; ++i) {
      if (g == polygon.vertex(i)) {
        vertex_guarded[i] = true;
        placed = true;
      } else if (strictly_between(polygon.vertex(i), polygon.vertex(i + 1), g)) {
        ++interior[i];
        placed = true;
      }
    }
    if (placed) on_boundary.push_back(g);
  }

  out.shrunken = true;
  for (std::size_t i = 0; i < n; ++i) {
    out.edge_weights[i] = Rat(interior[i]) + frac(vertex_guarded[i] + vertex_guarded[(i + 1) % n], 2);
    out.boundary_guards += out.edge_weights[i];
    if (interior[i] == 0 && !(vertex_guarded[i] && vertex_guarded[(i + 1) % n])) out.shrunken = false;
  }

  GuardSet boundary(on_boundary);
  for (std::size_t i = 0; i < n; ++i) {
    out.darkened[i] = !boundary.empty() && darkness_at(boundary, polygon.vertex(i)).darkness > 0;
    out.darkened_vertices += out.darkened[i];
  }

  out.two_dark_free = guards.empty() || !has_j_dark(polygon, guards, 2).found;
  out.applicable = out.shrunken && out.two_dark_free;
  if (!out.shrunken)
    out.reason = "some edge has neither an interior guard nor guards at both endpoints";
  else if (!out.two_dark_free)
    out.reason = "the placement has a 2-dark point";
  out.equation_holds =
      out.boundary_guards == Rat(static_cast<long>(n)) + frac(out.darkened_vertices, 2);
  return out;
}

}  // namespace darkgallery
