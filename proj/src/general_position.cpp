#include "darkgallery/general_position.hpp"

#include "darkgallery/errors.hpp"
#include "kernel.hpp"

#include <algorithm>

namespace darkgallery {

namespace {

// A guard pair: the line and the segment between them, measured by f = dx*x + dy*y.
struct PairLine {
  kernel::IntLine eq;
  BigInt dx, dy;
  Rat f_lo, f_hi;
};

PairLine make_pair_line(const Point2& p, const Point2& q) {
  PairLine l;
  l.eq = kernel::line_through(p, q);
  auto d = kernel::primitive(q - p);
  l.dx = d.first;
  l.dy = d.second;
  l.f_lo = Rat(l.dx) * p.x + Rat(l.dy) * p.y;
  l.f_hi = Rat(l.dx) * q.x + Rat(l.dy) * q.y;
  return l;  // q - p is a positive multiple of d, so f_lo < f_hi
}

}  // namespace

struct DarkRayArrangement::State {
  GuardSet guards;
  std::vector<PairLine> lines;
};

DarkRayArrangement::DarkRayArrangement() : state_(std::make_unique<State>()) {}
DarkRayArrangement::~DarkRayArrangement() = default;
DarkRayArrangement::DarkRayArrangement(DarkRayArrangement&&) noexcept = default;
DarkRayArrangement& DarkRayArrangement::operator=(DarkRayArrangement&&) noexcept = default;

const GuardSet& DarkRayArrangement::guards() const { return state_->guards; }

bool DarkRayArrangement::admits(const Point2& z) const {
  const State& s = *state_;
  if (s.guards.find(z)) return false;
  kernel::HPoint hz = kernel::homogenize(z);
  BigInt v;
  for (const PairLine& l : s.lines) {
    v = l.eq.a * hz.x + l.eq.b * hz.y + l.eq.c * hz.w;
    if (sgn(v) == 0) return false;
  }

  BigInt s1, s2, f;
  kernel::HPoint p;
  std::vector<Rat> hits;
  for (const Point2& q : s.guards.points()) {
    PairLine fresh = make_pair_line(q, z);
    if (fresh.f_hi < fresh.f_lo) std::swap(fresh.f_lo, fresh.f_hi);
    hits.clear();
    for (const PairLine& l : s.lines) {
      if (!kernel::meet(fresh.eq, l.eq, p)) continue;
      f = l.dx * p.x + l.dy * p.y;
      if (kernel::compare(f, p.w, l.f_lo, s1, s2) >= 0 && kernel::compare(f, p.w, l.f_hi, s1, s2) <= 0)
        continue;  // inside the old segment, not on a dark ray
      f = fresh.dx * p.x + fresh.dy * p.y;
      if (kernel::compare(f, p.w, fresh.f_lo, s1, s2) >= 0 && kernel::compare(f, p.w, fresh.f_hi, s1, s2) <= 0)
        continue;
      Rat at(f, p.w);
      at.canonicalize();
      hits.push_back(std::move(at));
    }
    std::sort(hits.begin(), hits.end());
    if (std::adjacent_find(hits.begin(), hits.end()) != hits.end()) return false;
  }
  return true;
}

void DarkRayArrangement::add(const Point2& z) {
  if (!admits(z)) throw InvalidInput("guard breaks general position");
  State& s = *state_;
  for (const Point2& q : s.guards.points()) s.lines.push_back(make_pair_line(q, z));
  s.guards.add(z);
}

bool in_general_position(const GuardSet& guards) {
  DarkRayArrangement arr;
  for (const Point2& g : guards.points()) {
    if (!arr.admits(g)) return false;
    arr.add(g);
  }
  return true;
}

Point2 circle_point(const Point2& center, const Rat& radius, std::size_t index) {
  // s = tan(theta/2): 0, then +-q_k with q_k the Calkin-Wilf sequence.
  Rat s(0);
  if (index > 0) {
    std::size_t k = (index + 1) / 2;
    Rat q(1);
    for (std::size_t i = 1; i < k; ++i) {
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      q = Rat(1) / (Rat(BigInt(2 * fl)) - q + 1);
    }
    s = (index % 2 == 1) ? q : Rat(-q);
  }
  Rat s2 = s * s;
  Rat den = s2 + 1;
  return {center.x + radius * (1 - s2) / den, center.y + radius * 2 * s / den};
}

Rat inscribed_power_of_two(std::span<const Halfplane> hs, const Point2& center) {
  std::optional<Rat> best;
  for (const Halfplane& h : hs) {
    Rat v = h.eval(center);
    Rat d2 = v * v / (h.a * h.a + h.b * h.b);
    if (!best || d2 < *best) best = d2;
  }
  if (!best || sgn(*best) <= 0) throw InvalidInput("center is not strictly inside the region");
  Rat r(1);
  if (r * r < *best) {
    while (4 * r * r < *best) r *= 2;
  } else {
    while (r * r >= *best) r /= 2;
  }
  return r;
}

}  // namespace darkgallery
