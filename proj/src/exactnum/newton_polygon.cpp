#include "hcrit/exactnum/newton_polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcrit {

int NewtonPolygon::root_count() const {
  int n = zero_roots;
  for (const auto& s : segments) n += s.multiplicity;
  return n;
}

Rational NewtonPolygon::negative_valuation_sum() const {
  Rational acc = 0;
  for (const auto& s : segments)
    if (s.valuation < 0) acc += s.valuation * s.multiplicity;
  return acc;
}

NewtonPolygon newton_polygon(const IntPoly& p, const Place& place) {
  if (p.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
  if (place.is_archimedean()) throw std::invalid_argument("Newton polygon needs a finite place");
  if (p.is_form()) throw std::invalid_argument("Newton polygon of a form; dehomogenize first");
  NewtonPolygon out;
  const auto& c = p.coeffs();
  int lo = 0;
  while (c[lo] == 0) ++lo;
  out.zero_roots = lo;

  struct Pt {
    long x, y;
  };
  std::vector<Pt> pts;
  for (int i = lo; i < static_cast<int>(c.size()); ++i)
    if (c[i] != 0) pts.push_back({i, val_p(c[i], place.prime())});

  // monotone chain, lower hull
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // drop b unless it lies strictly below segment a-q
      long cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long dx = hull[i].x - hull[i - 1].x, dy = hull[i].y - hull[i - 1].y;
    out.segments.push_back({Rational(-dy, dx), static_cast<int>(dx)});
    out.segments.back().valuation.canonicalize();
  }
  std::sort(out.segments.begin(), out.segments.end(),
            [](const NewtonSegment& a, const NewtonSegment& b) { return a.valuation < b.valuation; });
  return out;
}

int count_roots_in_disk(const IntPoly& p, const Place& place, const Rational& center,
                        const Rational& radius_logp, bool closed) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  NewtonPolygon np = newton_polygon(p.shifted(center), place);
  // |w|_p <= p^r  <=>  v(w) >= -r
  Rational bound = -radius_logp;
  int n = np.zero_roots;
  for (const auto& s : np.segments) {
    if (closed ? s.valuation >= bound : s.valuation > bound) n += s.multiplicity;
  }
  return n;
}

}  // namespace hcrit
