#include "kernel.hpp"

#include "darkgallery/errors.hpp"

namespace darkgallery::kernel {

std::pair<BigInt, BigInt> primitive(const Vec2& v) {
  if (is_zero(v)) throw InvalidInput("zero direction");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  BigInt x = v.x.get_num() * (l / v.x.get_den());
  BigInt y = v.y.get_num() * (l / v.y.get_den());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  return {x, y};
}

std::pair<BigInt, BigInt> undirected(const Vec2& v) {
  auto d = primitive(v);
  if (sgn(d.first) < 0 || (sgn(d.first) == 0 && sgn(d.second) < 0)) {
    d.first = -d.first;
    d.second = -d.second;
  }
  return d;
}

HPoint homogenize(const Point2& p) {
  HPoint h;
  mpz_lcm(h.w.get_mpz_t(), p.x.get_den_mpz_t(), p.y.get_den_mpz_t());
  h.x = p.x.get_num() * (h.w / p.x.get_den());
  h.y = p.y.get_num() * (h.w / p.y.get_den());
  return h;
}

Point2 dehomogenize(const HPoint& p) {
  Point2 out{Rat(p.x, p.w), Rat(p.y, p.w)};
  out.x.canonicalize();
  out.y.canonicalize();
  return out;
}

IntLine line_through(const Point2& p, const Point2& q) {
  if (p == q) throw InvalidInput("line through equal points");
  HPoint a = homogenize(p);
  HPoint b = homogenize(q);
  IntLine l;
  l.a = a.y * b.w - a.w * b.y;
  l.b = a.w * b.x - a.x * b.w;
  l.c = a.x * b.y - a.y * b.x;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), l.a.get_mpz_t(), l.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.c.get_mpz_t());
  if (g > 1) {
    mpz_divexact(l.a.get_mpz_t(), l.a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(l.b.get_mpz_t(), l.b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(l.c.get_mpz_t(), l.c.get_mpz_t(), g.get_mpz_t());
  }
  return l;
}

bool meet(const IntLine& l1, const IntLine& l2, HPoint& out) {
  mpz_mul(out.w.get_mpz_t(), l1.a.get_mpz_t(), l2.b.get_mpz_t());
  mpz_submul(out.w.get_mpz_t(), l1.b.get_mpz_t(), l2.a.get_mpz_t());
  int s = sgn(out.w);
  if (s == 0) return false;
  mpz_mul(out.x.get_mpz_t(), l1.b.get_mpz_t(), l2.c.get_mpz_t());
  mpz_submul(out.x.get_mpz_t(), l1.c.get_mpz_t(), l2.b.get_mpz_t());
  mpz_mul(out.y.get_mpz_t(), l1.c.get_mpz_t(), l2.a.get_mpz_t());
  mpz_submul(out.y.get_mpz_t(), l1.a.get_mpz_t(), l2.c.get_mpz_t());
  if (s < 0) {
    mpz_neg(out.w.get_mpz_t(), out.w.get_mpz_t());
    mpz_neg(out.x.get_mpz_t(), out.x.get_mpz_t());
    mpz_neg(out.y.get_mpz_t(), out.y.get_mpz_t());
  }
  return true;
}

int compare(const BigInt& f, const BigInt& w, const Rat& r, BigInt& s1, BigInt& s2) {
  mpz_mul(s1.get_mpz_t(), f.get_mpz_t(), r.get_den_mpz_t());
  mpz_mul(s2.get_mpz_t(), r.get_num_mpz_t(), w.get_mpz_t());
  return mpz_cmp(s1.get_mpz_t(), s2.get_mpz_t());
}

}  // namespace darkgallery::kernel
