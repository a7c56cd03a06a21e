#include "bbdiag/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace bbdiag {

namespace {

double wrap_unit(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;
  return f;
}

}  // namespace

double ArcInterval::center_fraction() const { return wrap_unit(start + 0.5 * length); }

double ArcInterval::center_angle() const { return kTwoPi * center_fraction(); }

bool ArcInterval::contains_fraction(double pos) const {
  if (full_circle()) return true;
  double rel = wrap_unit(pos - start);
  return rel < length;
}

ArcInterval make_arc(double center_angle, double length) {
  if (!(length > 0.0) || length > 1.0)
    throw std::invalid_argument("arc length must lie in (0,1]");
  double center = wrap_unit(center_angle / kTwoPi);
  return ArcInterval{wrap_unit(center - 0.5 * length), length};
}

ArcInterval concentric_double(const ArcInterval& arc) {
  double len = std::min(1.0, 2.0 * arc.length);
  return ArcInterval{wrap_unit(arc.start - 0.5 * (len - arc.length)), len};
}

std::vector<ArcInterval> arc_intersection(const ArcInterval& a, const ArcInterval& b) {
  if (a.full_circle()) return {b};
  if (b.full_circle()) return {a};
  std::vector<ArcInterval> out;
  // work relative to a.start; b may wrap past 1 and contribute two pieces
  double rel = wrap_unit(b.start - a.start);
  for (int copy = -1; copy <= 0; ++copy) {
    double lo = rel + copy;  // b start in a-relative coordinates
    double hi = lo + b.length;
    double s = std::max(lo, 0.0);
    double e = std::min(hi, a.length);
    if (e - s > 1e-15)
      out.push_back(ArcInterval{wrap_unit(a.start + s), e - s});
  }
  return out;
}

double CarlesonBox::area() const {
  double t = interval.length;
  return kPi * t * t * (2.0 - t);
}

bool CarlesonBox::contains(std::complex<double> z) const {
  double r = std::abs(z);
  if (r <= r_lo() || r >= 1.0) return false;
  return interval.contains_fraction(angle_fraction(z));
}

CarlesonBox box_of(const ArcInterval& interval) {
  if (!(interval.length > 0.0) || interval.length > 1.0)
    throw std::invalid_argument("invalid arc");
  return CarlesonBox{interval};
}

double RhoTop::area() const {
  double t = interval.length;
  double hi = r_hi(), lo = r_lo();
  return kPi * t * (hi * hi - lo * lo);  // 2*pi*t * (hi^2 - lo^2)/2
}

bool RhoTop::contains(std::complex<double> z) const {
  double r = std::abs(z);
  if (r <= r_lo() || r >= r_hi()) return false;
  return interval.contains_fraction(angle_fraction(z));
}

RhoTop rho_top(const ArcInterval& interval, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("rho must lie in (0,1)");
  return RhoTop{interval, rho};
}

ArcInterval DyadicInterval::arc() const {
  double len = root.length * std::ldexp(1.0, -level);
  double start = root.start + static_cast<double>(index) * len;
  return ArcInterval{start - std::floor(start), len};
}

std::vector<DyadicInterval> descendants(const ArcInterval& interval, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (depth >= 40)
    throw std::length_error("descendant depth exceeds index capacity");
  std::vector<DyadicInterval> out;
  if (depth == 0) return out;
  out.reserve((std::uint64_t{2} << depth) - 2);
  for (int k = 1; k <= depth; ++k) {
    std::uint64_t n = std::uint64_t{1} << k;
    for (std::uint64_t j = 0; j < n; ++j)
      out.push_back(DyadicInterval{interval, k, j, -1});
  }
  return out;
}

GenerationSlices generation_slices(const ArcInterval& interval, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  GenerationSlices gs;
  gs.interval = interval;
  gs.depth = depth;
  double t = interval.length;
  for (int i = 0; i <= depth; ++i) {
    double a = t * std::ldexp(1.0, -i);
    GenerationSlice s;
    s.level = i;
    s.r_lo = 1.0 - a;
    s.r_hi = 1.0 - 0.5 * a;
    s.area = kPi * t * a * (1.0 - 0.75 * a);
    gs.slices.push_back(s);
  }
  double b = t * std::ldexp(1.0, -depth - 1);
  gs.residual = GenerationSlice{depth + 1, 1.0 - b, 1.0, kPi * t * b * (2.0 - b)};
  return gs;
}

ShiftedGrids::ShiftedGrids(int n) {
  if (n < 1) throw std::invalid_argument("need at least one grid");
  offsets_.resize(n);
  for (int k = 0; k < n; ++k) offsets_[k] = static_cast<double>(k) / n;
}

ArcInterval ShiftedGrids::arc(int g, int level, std::uint64_t index) const {
  return interval(g, level, index).arc();
}

DyadicInterval ShiftedGrids::interval(int g, int level, std::uint64_t index) const {
  return DyadicInterval{root(g), level, index, g};
}

std::uint64_t ShiftedGrids::index_at(int g, int level, double pos) const {
  double rel = pos - offsets_[g];
  rel -= std::floor(rel);
  auto n = std::uint64_t{1} << level;
  auto j = static_cast<std::uint64_t>(rel * static_cast<double>(n));
  return j >= n ? n - 1 : j;
}

ArcInterval ShiftedGrids::smallest_cover(const ArcInterval& target, int max_level) const {
  for (int level = max_level; level >= 0; --level) {
    double cell = std::ldexp(1.0, -level);
    if (cell < target.length) continue;
    for (int g = 0; g < count(); ++g) {
      double rel = target.start - offsets_[g];
      rel -= std::floor(rel);
      double within = rel - cell * std::floor(rel / cell);
      if (within + target.length <= cell + 1e-15)
        return arc(g, level, index_at(g, level, target.start));
    }
  }
  return ArcInterval{0.0, 0.0};
}

ShiftedGrids shifted_grids(int n) { return ShiftedGrids(n); }

std::complex<double> disk_point(double r, double pos) {
  return std::polar(r, kTwoPi * pos);
}

double angle_fraction(std::complex<double> z) {
  double a = std::arg(z) / kTwoPi;
  a -= std::floor(a);
  return a >= 1.0 ? 0.0 : a;
}

}  // namespace bbdiag
