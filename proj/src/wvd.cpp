#include "dsdisk/wvd.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "dsdisk/error.hpp"
#include "dsdisk/graph.hpp"

namespace dsdisk {

Point WvdRaster::pixel_center(int ix, int iy) const {
  const double dx = bbox.width() / resolution;
  const double dy = bbox.height() / resolution;
  return {bbox.xmin + (ix + 0.5) * dx, bbox.ymin + (iy + 0.5) * dy};
}

std::pair<int, int> WvdRaster::pixel_of(Point p) const {
  const double fx = (p.x - bbox.xmin) / bbox.width() * resolution;
  const double fy = (p.y - bbox.ymin) / bbox.height() * resolution;
  const int ix = std::clamp(static_cast<int>(std::floor(fx)), 0, resolution - 1);
  const int iy = std::clamp(static_cast<int>(std::floor(fy)), 0, resolution - 1);
  return {ix, iy};
}

std::vector<DiskId> WvdRaster::owners() const {
  std::vector<DiskId> out(owner);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiskId NearestDisk(std::span<const Disk> disks, Point x) {
  DiskId best = disks.front().id;
  double best_pow = PowDistance(x, disks.front());
  for (const Disk& d : disks.subspan(1)) {
    const double p = PowDistance(x, d);
    if (p < best_pow || (p == best_pow && d.id < best)) {
      best = d.id;
      best_pow = p;
    }
  }
  return best;
}

namespace {

WvdRaster MakeFrame(std::span<const Disk> disks, int resolution) {
  if (disks.empty()) throw Error(ErrorKind::kPreconditionViolation, "rasterize: no disks");
  if (resolution < 16) {
    throw Error(ErrorKind::kInvalidParams, fmt::format("rasterize: resolution {} < 16", resolution));
  }
  WvdRaster raster;
  double pad = 0.0;
  for (const Disk& d : disks) pad = std::max(pad, d.r);
  if (pad <= 0.0) pad = 1.0;
  raster.bbox = BoundingBox(disks);
  raster.bbox.xmin -= pad;
  raster.bbox.ymin -= pad;
  raster.bbox.xmax += pad;
  raster.bbox.ymax += pad;
  raster.resolution = resolution;
  raster.owner.assign(static_cast<size_t>(resolution) * resolution, 0);
  for (const Disk& d : disks) raster.source_ids.push_back(d.id);
  std::sort(raster.source_ids.begin(), raster.source_ids.end());
  return raster;
}

void FillRow(WvdRaster& raster, std::span<const Disk> disks, int iy) {
  for (int ix = 0; ix < raster.resolution; ++ix) {
    raster.owner[static_cast<size_t>(iy) * raster.resolution + ix] =
        NearestDisk(disks, raster.pixel_center(ix, iy));
  }
}

}  // namespace

WvdRaster Rasterize(std::span<const Disk> disks, int resolution) {
  WvdRaster raster = MakeFrame(disks, resolution);
#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < resolution; ++iy) FillRow(raster, disks, iy);
  return raster;
}

WvdRaster RasterizeSerial(std::span<const Disk> disks, int resolution) {
  WvdRaster raster = MakeFrame(disks, resolution);
  for (int iy = 0; iy < resolution; ++iy) FillRow(raster, disks, iy);
  return raster;
}

namespace {

void RequireAntichain(std::span<const Disk> disks, const char* where) {
  for (const Disk& u : disks) {
    for (const Disk& v : disks) {
      if (u.id != v.id && ProperlyContains(v, u)) {
        throw Error(ErrorKind::kPreconditionViolation,
                    fmt::format("{}: disk {} properly contains disk {}", where, v.id, u.id));
      }
    }
  }
}

}  // namespace

CellReport CheckCellsNonempty(const WvdRaster& raster, std::span<const Disk> disks) {
  RequireAntichain(disks, "check_cells_nonempty");
  CellReport report;
  report.resolution = raster.resolution;
  for (const Disk& u : disks) {
    CellCheck c;
    c.disk = u.id;
    const auto [ix, iy] = raster.pixel_of(u.center());
    c.raster_ok = raster.at(ix, iy) == u.id;
    c.exact_ok = NearestDisk(disks, u.center()) == u.id;
    report.raster_violations += c.raster_ok ? 0 : 1;
    report.exact_violations += c.exact_ok ? 0 : 1;
    report.checks.push_back(c);
  }
  return report;
}

CellReport CheckCentersExact(std::span<const Disk> disks) {
  RequireAntichain(disks, "check_centers_exact");
  CellReport report;
  for (const Disk& u : disks) {
    // The center must be strictly closer to u than to every other disk.
    bool ok = true;
    const double own = PowDistance(u.center(), u);
    for (const Disk& v : disks) {
      if (v.id != u.id && !(PowDistance(u.center(), v) > own)) ok = false;
    }
    report.checks.push_back({u.id, ok, ok});
    report.exact_violations += ok ? 0 : 1;
  }
  report.raster_violations = report.exact_violations;
  return report;
}

bool DualGraph::has_edge(DiskId u, DiskId v) const {
  const auto key = u < v ? std::pair{u, v} : std::pair{v, u};
  return std::binary_search(edges.begin(), edges.end(), key);
}

DualGraph ComputeDualGraph(const WvdRaster& raster) {
  std::set<std::pair<DiskId, DiskId>> edges;
  const int res = raster.resolution;
  auto note = [&](DiskId a, DiskId b) {
    if (a != b) edges.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  };
  for (int iy = 0; iy < res; ++iy) {
    for (int ix = 0; ix < res; ++ix) {
      const DiskId here = raster.at(ix, iy);
      if (ix + 1 < res) note(here, raster.at(ix + 1, iy));
      if (iy + 1 < res) note(here, raster.at(ix, iy + 1));
    }
  }
  DualGraph dual;
  dual.vertices = raster.owners();
  dual.edges.assign(edges.begin(), edges.end());
  return dual;
}

LocalityReport CheckLocality(const DiskInstance& inst, std::span<const DiskId> red,
                             std::span<const DiskId> blue, int resolution) {
  const int n = inst.size();
  std::vector<int> color(static_cast<size_t>(n), 0);  // 1 red, 2 blue
  for (DiskId r : red) {
    if (r < 0 || r >= n) throw Error(ErrorKind::kPreconditionViolation, "red id out of range");
    color[r] = 1;
  }
  for (DiskId b : blue) {
    if (b < 0 || b >= n) throw Error(ErrorKind::kPreconditionViolation, "blue id out of range");
    if (color[b] == 1) {
      throw Error(ErrorKind::kPreconditionViolation,
                  fmt::format("check_locality: disk {} is both red and blue", b));
    }
    color[b] = 2;
  }
  const IntersectionGraph g = BuildGraph(inst);
  if (!IsDominating(g, red) || !IsDominating(g, blue)) {
    throw Error(ErrorKind::kPreconditionViolation, "check_locality: R and B must both dominate");
  }
  std::vector<Disk> diagram;
  for (DiskId v = 0; v < n; ++v) {
    if (color[v] != 0) diagram.push_back(inst[v]);
  }
  RequireAntichain(diagram, "check_locality");

  const DualGraph dual = ComputeDualGraph(Rasterize(diagram, resolution));
  LocalityReport report;
  report.resolution = resolution;
  report.dual_vertices = dual.vertices.size();
  report.dual_edges = dual.edges.size();
  if (dual.vertices.size() >= 3) {
    report.planar_edge_bound = dual.edges.size() <= 3 * dual.vertices.size() - 6;
  }
  for (DiskId d = 0; d < n; ++d) {
    LocalityWitness w;
    w.disk = d;
    const auto nb = g.closed_neighborhood(d);
    for (DiskId u : nb) {
      if (color[u] != 1) continue;
      for (DiskId v : nb) {
        if (color[v] == 2 && dual.has_edge(u, v)) {
          w.edge = std::pair{u, v};
          break;
        }
      }
      if (w.edge) break;
    }
    if (!w.edge) report.failures.push_back(d);
    report.witnesses.push_back(w);
  }
  return report;
}

}  // namespace dsdisk
