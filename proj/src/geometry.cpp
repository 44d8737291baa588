#include "dsdisk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/rng.hpp"

namespace dsdisk {

DiskInstance::DiskInstance(std::vector<Disk> disks) : disks_(std::move(disks)) {
  std::sort(disks_.begin(), disks_.end(),
            [](const Disk& a, const Disk& b) { return a.id < b.id; });
  for (size_t i = 0; i < disks_.size(); ++i) {
    const Disk& d = disks_[i];
    if (d.id != static_cast<DiskId>(i)) {
      throw Error(ErrorKind::kInvalidInstance,
                  fmt::format("ids must be exactly 0..{}, found {} at position {}",
                              disks_.size() - 1, d.id, i));
    }
    if (!(d.r >= 0.0) || !std::isfinite(d.r) || !std::isfinite(d.cx) || !std::isfinite(d.cy)) {
      throw Error(ErrorKind::kInvalidInstance, fmt::format("disk {}: bad geometry", d.id));
    }
    if (!(d.w > 0.0) || !std::isfinite(d.w)) {
      throw Error(ErrorKind::kInvalidInstance, fmt::format("disk {}: weight must be > 0", d.id));
    }
  }
  bbox_ = BoundingBox(disks_);
}

std::vector<double> DiskInstance::weights() const {
  std::vector<double> w;
  w.reserve(disks_.size());
  for (const Disk& d : disks_) w.push_back(d.w);
  return w;
}

double DiskInstance::max_radius() const {
  double r = 0.0;
  for (const Disk& d : disks_) r = std::max(r, d.r);
  return r;
}

double DiskInstance::min_radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const Disk& d : disks_) r = std::min(r, d.r);
  return r;
}

bool DiskInstance::unit_weights() const {
  return std::all_of(disks_.begin(), disks_.end(), [](const Disk& d) { return d.w == 1.0; });
}

Box BoundingBox(std::span<const Disk> disks) {
  if (disks.empty()) return {};
  Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Disk& d : disks) {
    b.xmin = std::min(b.xmin, d.cx - d.r);
    b.ymin = std::min(b.ymin, d.cy - d.r);
    b.xmax = std::max(b.xmax, d.cx + d.r);
    b.ymax = std::max(b.ymax, d.cy + d.r);
  }
  return b;
}

double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double PowDistance(Point x, const Disk& u) { return Distance(x, u.center()) - u.r; }

bool Intersects(const Disk& u, const Disk& v) {
  return Distance(u.center(), v.center()) <= u.r + v.r + kGeomTol;
}

bool ProperlyContains(const Disk& v, const Disk& u) {
  const bool same = u.cx == v.cx && u.cy == v.cy && u.r == v.r;
  return !same && Distance(u.center(), v.center()) + u.r <= v.r;
}

double Orientation(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

DiskInstance Perturb(const DiskInstance& inst, double magnitude, uint64_t seed) {
  if (!(magnitude > 0.0)) {
    throw Error(ErrorKind::kInvalidPerturbation, "magnitude must be > 0");
  }
  if (!inst.empty() && magnitude > inst.min_radius()) {
    throw Error(ErrorKind::kInvalidPerturbation,
                fmt::format("magnitude {} exceeds the smallest radius {}", magnitude,
                            inst.min_radius()));
  }
  SplitMix64 rng(seed);
  std::vector<Disk> out(inst.disks().begin(), inst.disks().end());
  for (Disk& d : out) {
    d.cx += rng.Uniform(-magnitude, magnitude);
    d.cy += rng.Uniform(-magnitude, magnitude);
    d.r += rng.Uniform(-magnitude, magnitude);
    d.r = std::max(d.r, 0.0);
  }
  return DiskInstance(std::move(out));
}

}  // namespace dsdisk
