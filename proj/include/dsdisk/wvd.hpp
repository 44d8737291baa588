#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsdisk/geometry.hpp"

namespace dsdisk {

// Pixel grid of the additively weighted Voronoi diagram: owner[p] minimizes
// PowDistance(center of p, .) over the source disks, ties to the lowest id.
struct WvdRaster {
  Box bbox;
  int resolution = 0;
  std::vector<DiskId> owner;  // row-major, row 0 at ymin
  std::vector<DiskId> source_ids;

  DiskId at(int ix, int iy) const { return owner[static_cast<size_t>(iy) * resolution + ix]; }
  Point pixel_center(int ix, int iy) const;
  // Pixel containing p, clamped to the grid.
  std::pair<int, int> pixel_of(Point p) const;
  // Distinct owners, ascending.
  std::vector<DiskId> owners() const;
};

// Lowest-id disk among the minimizers of PowDistance(x, .).
DiskId NearestDisk(std::span<const Disk> disks, Point x);

// bbox = disks' bounding box grown by the maximum radius on every side.
// Requires nonempty disks and resolution >= 16. Parallel over rows.
WvdRaster Rasterize(std::span<const Disk> disks, int resolution);
WvdRaster RasterizeSerial(std::span<const Disk> disks, int resolution);

struct CellCheck {
  DiskId disk = 0;
  bool raster_ok = false;  // the pixel holding the center is owned by the disk
  bool exact_ok = false;   // the exact center point is owned by the disk
};

struct CellReport {
  int resolution = 0;
  std::vector<CellCheck> checks;
  int raster_violations = 0;
  int exact_violations = 0;
};

// Throws kPreconditionViolation if some disk properly contains another.
CellReport CheckCellsNonempty(const WvdRaster& raster, std::span<const Disk> disks);

// Exact-center check alone: every center belongs only to its own cell.
CellReport CheckCentersExact(std::span<const Disk> disks);

struct DualGraph {
  std::vector<DiskId> vertices;
  std::vector<std::pair<DiskId, DiskId>> edges;  // u < v, sorted

  bool has_edge(DiskId u, DiskId v) const;
};

// Cells are adjacent iff two 4-adjacent pixels have those owners.
DualGraph ComputeDualGraph(const WvdRaster& raster);

struct LocalityWitness {
  DiskId disk = 0;
  std::optional<std::pair<DiskId, DiskId>> edge;  // (red, blue)
};

struct LocalityReport {
  int resolution = 0;
  std::vector<LocalityWitness> witnesses;
  std::vector<DiskId> failures;
  size_t dual_vertices = 0;
  size_t dual_edges = 0;
  bool planar_edge_bound = true;  // |E| <= 3|V| - 6 when |V| >= 3

  bool pass() const { return failures.empty(); }
};

// For each disk d, searches the dual graph of the diagram of R u B for an
// edge between a red and a blue dominator of d. R and B must be disjoint
// dominating sets with no proper containment inside R u B.
LocalityReport CheckLocality(const DiskInstance& inst, std::span<const DiskId> red,
                             std::span<const DiskId> blue, int resolution);

}  // namespace dsdisk
