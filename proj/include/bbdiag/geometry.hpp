#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace bbdiag {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Arc on the unit circle. Angular positions are tracked as fractions of
/// the full circle (not radians) so that grid arithmetic stays exact for
/// dyadic lengths; `length` is the fraction t in (0,1].
struct ArcInterval {
  double start = 0.0;   // left endpoint as a fraction of the circle, in [0,1)
  double length = 1.0;  // fraction of the circle, in (0,1]

  double center_fraction() const;
  double center_angle() const;  // radians in [0, 2*pi)
  double half_width() const { return kPi * length; }  // radians
  bool contains_fraction(double pos) const;
  bool full_circle() const { return length >= 1.0; }
};

/// Build an arc from its center angle (radians) and normalized length.
ArcInterval make_arc(double center_angle, double length);

/// Arc with the same center and twice the length (capped at the full circle).
ArcInterval concentric_double(const ArcInterval& arc);

/// Intersection of two arcs, as zero, one or two arcs.
std::vector<ArcInterval> arc_intersection(const ArcInterval& a, const ArcInterval& b);

/// Carleson box over an arc: radial range (1-t, 1), angular range the arc.
struct CarlesonBox {
  ArcInterval interval;
  double r_lo() const { return 1.0 - interval.length; }
  double area() const;  // pi t^2 (2 - t)
  bool contains(std::complex<double> z) const;
};

CarlesonBox box_of(const ArcInterval& interval);

/// Outer radial slice of a Carleson box of relative thickness rho in (0,1).
/// rho = 1/2 is the top half T_I.
struct RhoTop {
  ArcInterval interval;
  double rho = 0.5;
  double r_lo() const { return 1.0 - interval.length; }
  double r_hi() const { return 1.0 - (1.0 - rho) * interval.length; }
  double area() const;
  bool contains(std::complex<double> z) const;
};

RhoTop rho_top(const ArcInterval& interval, double rho);

/// Dyadic descendant of a root arc: the j-th of the 2^k arcs tiling the
/// root at level k. Children split the parent in half, each child keeping
/// one parent endpoint.
struct DyadicInterval {
  ArcInterval root;
  int level = 0;
  std::uint64_t index = 0;
  int shift = -1;  // id of the shifted grid this arc belongs to, -1 if none

  ArcInterval arc() const;
};

/// All dyadic descendants of `interval` down to `depth` levels
/// (levels 1..depth; empty for depth 0). Throws std::length_error when the
/// requested depth exceeds what the index type / memory can hold.
std::vector<DyadicInterval> descendants(const ArcInterval& interval, int depth);

/// One angular generation slice G_i: the union of the top halves of all
/// level-i descendants, which is the annular band
/// (1 - t 2^-i, 1 - t 2^-(i+1)) over the root arc.
struct GenerationSlice {
  int level = 0;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double area = 0.0;
};

struct GenerationSlices {
  ArcInterval interval;
  int depth = 0;
  std::vector<GenerationSlice> slices;  // G_0 .. G_depth
  GenerationSlice residual;             // annulus beyond G_depth, level = depth+1
};

GenerationSlices generation_slices(const ArcInterval& interval, int depth);

/// Family of rotated copies of the standard dyadic grid. Offsets are k/n of
/// the circle; at every dyadic scale the three boundary families of n=3 sit
/// at exact thirds of a cell, which yields the 4x covering property.
class ShiftedGrids {
 public:
  explicit ShiftedGrids(int n);

  int count() const { return static_cast<int>(offsets_.size()); }
  double offset(int g) const { return offsets_[g]; }

  ArcInterval root(int g) const { return ArcInterval{offsets_[g], 1.0}; }
  ArcInterval arc(int g, int level, std::uint64_t index) const;
  DyadicInterval interval(int g, int level, std::uint64_t index) const;

  /// Index of the level-`level` arc of grid g containing the angular
  /// position `pos` (a fraction of the circle).
  std::uint64_t index_at(int g, int level, double pos) const;

  /// Smallest dyadic arc (over all grids, levels 0..max_level) containing
  /// the given arc; returns length 0 arc when none does.
  ArcInterval smallest_cover(const ArcInterval& target, int max_level) const;

 private:
  std::vector<double> offsets_;
};

ShiftedGrids shifted_grids(int n);

/// Annular sector (r_lo, r_hi) x arc, the basic integration region.
/// A Carleson box is the special case r_lo = 1-t, r_hi = 1.
struct Sector {
  double r_lo = 0.0;
  double r_hi = 1.0;
  ArcInterval arc;

  double area() const { return kPi * arc.length * (r_hi * r_hi - r_lo * r_lo); }
  bool touches_boundary() const { return r_hi >= 1.0; }
};

inline Sector sector_of(const CarlesonBox& box) {
  return Sector{box.r_lo(), 1.0, box.interval};
}
inline Sector sector_of(const RhoTop& top) {
  return Sector{top.r_lo(), top.r_hi(), top.interval};
}

/// z = r e^{2 pi i pos} with pos a fraction of the circle.
std::complex<double> disk_point(double r, double pos);

/// Angular position of z as a fraction of the circle, in [0,1).
double angle_fraction(std::complex<double> z);

}  // namespace bbdiag
