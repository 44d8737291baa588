#pragma once

#include <span>
#include <string>
#include <vector>

#include "dsdisk/geometry.hpp"
#include "dsdisk/wvd.hpp"

namespace dsdisk {

struct SvgOverlays {
  std::vector<DiskId> solution;
  const WvdRaster* raster = nullptr;
  const DualGraph* dual = nullptr;
  std::span<const Disk> dual_disks;  // disks whose centers anchor dual edges
};

// SVG 1.1 document: optional flat-colored cells (one fill per owner),
// disk outlines, highlighted solution disks and dual edges.
std::string RenderSvg(const DiskInstance& inst, const SvgOverlays& overlays = {});

}  // namespace dsdisk
