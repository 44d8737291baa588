#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dsdisk {

// Comparison tolerance for intersection tests.
inline constexpr double kGeomTol = 1e-9;

using DiskId = int;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Box {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

struct Disk {
  DiskId id = 0;
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
  double w = 1.0;

  Point center() const { return {cx, cy}; }
  bool operator==(const Disk&) const = default;
};

// An ordered disk set whose ids are exactly 0..n-1 (disks()[i].id == i).
class DiskInstance {
 public:
  DiskInstance() = default;
  // Throws Error(kInvalidInstance) on bad ids, negative radii or
  // non-positive weights. Disks are reordered by id.
  explicit DiskInstance(std::vector<Disk> disks);

  std::span<const Disk> disks() const { return disks_; }
  const Disk& operator[](DiskId id) const { return disks_[static_cast<size_t>(id)]; }
  int size() const { return static_cast<int>(disks_.size()); }
  bool empty() const { return disks_.empty(); }
  const Box& bbox() const { return bbox_; }

  std::vector<double> weights() const;
  double max_radius() const;
  double min_radius() const;
  bool unit_weights() const;

  bool operator==(const DiskInstance& o) const { return disks_ == o.disks_; }

 private:
  std::vector<Disk> disks_;
  Box bbox_;
};

Box BoundingBox(std::span<const Disk> disks);

double Distance(Point a, Point b);

// d(x, c_u) - r_u: negative strictly inside u, zero on its boundary.
double PowDistance(Point x, const Disk& u);

// Closed disks: tangency counts.
bool Intersects(const Disk& u, const Disk& v);

// u lies inside v and the two differ in center or radius.
bool ProperlyContains(const Disk& v, const Disk& u);

// Sign of the orientation determinant of (a, b, c); exact up to rounding.
double Orientation(Point a, Point b, Point c);

// Jitters every center coordinate and radius by an independent uniform
// offset in [-magnitude, magnitude]. Deterministic in seed.
DiskInstance Perturb(const DiskInstance& inst, double magnitude, uint64_t seed);

}  // namespace dsdisk
