#include "dsdisk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace dsdisk {

namespace {

std::string HueColor(double hue, double sat, double light) {
  const double c = (1.0 - std::abs(2.0 * light - 1.0)) * sat;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = light - c / 2.0;
  auto byte = [&](double v) { return std::clamp(static_cast<int>(std::lround((v + m) * 255.0)), 0, 255); };
  return fmt::format("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b));
}

// One distinct fill per owner.
std::map<DiskId, std::string> CellPalette(const std::vector<DiskId>& owners) {
  std::map<DiskId, std::string> palette;
  std::set<std::string> used;
  for (size_t i = 0; i < owners.size(); ++i) {
    double light = 0.78;
    std::string color = HueColor(std::fmod(i * 137.508, 360.0), 0.55, light);
    while (used.count(color) != 0) {
      light -= 0.004;
      color = HueColor(std::fmod(i * 137.508, 360.0), 0.55, light);
    }
    used.insert(color);
    palette[owners[i]] = color;
  }
  return palette;
}

}  // namespace

std::string RenderSvg(const DiskInstance& inst, const SvgOverlays& overlays) {
  Box box = inst.bbox();
  if (overlays.raster) box = overlays.raster->bbox;
  const double pad = 0.03 * std::max({box.width(), box.height(), 1.0});
  box.xmin -= pad;
  box.ymin -= pad;
  box.xmax += pad;
  box.ymax += pad;
  const double flip = box.ymin + box.ymax;  // y' = flip - y puts +y up
  const double stroke = 0.002 * std::max(box.width(), box.height());

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" "
      "width=\"800\" height=\"{}\">\n",
      box.xmin, box.ymin, box.width(), box.height(),
      static_cast<int>(std::lround(800.0 * box.height() / box.width())));

  if (const WvdRaster* raster = overlays.raster) {
    const auto palette = CellPalette(raster->owners());
    const double dx = raster->bbox.width() / raster->resolution;
    const double dy = raster->bbox.height() / raster->resolution;
    os << "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
    for (int iy = 0; iy < raster->resolution; ++iy) {
      int start = 0;
      for (int ix = 1; ix <= raster->resolution; ++ix) {
        if (ix < raster->resolution && raster->at(ix, iy) == raster->at(start, iy)) continue;
        const double x = raster->bbox.xmin + start * dx;
        const double y = flip - (raster->bbox.ymin + (iy + 1) * dy);
        os << fmt::format("<rect class=\"cell\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                          x, y, (ix - start) * dx, dy, palette.at(raster->at(start, iy)));
        start = ix;
      }
    }
    os << "</g>\n";
  }

  std::set<DiskId> chosen(overlays.solution.begin(), overlays.solution.end());
  os << "<g id=\"disks\" fill=\"none\">\n";
  for (const Disk& d : inst.disks()) {
    const bool hl = chosen.count(d.id) != 0;
    os << fmt::format(
        "<circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
        hl ? "solution" : "disk", d.cx, flip - d.cy, d.r, hl ? "#d62728" : "#333333",
        hl ? 2.5 * stroke : stroke);
  }
  os << "</g>\n";

  if (overlays.dual) {
    std::map<DiskId, Point> at;
    for (const Disk& d : overlays.dual_disks) at[d.id] = d.center();
    os << "<g id=\"dual\" stroke=\"#1f77b4\">\n";
    for (const auto& [u, v] : overlays.dual->edges) {
      if (!at.count(u) || !at.count(v)) continue;
      os << fmt::format("<line class=\"dual\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-width=\"{}\"/>\n",
                        at[u].x, flip - at[u].y, at[v].x, flip - at[v].y, 1.5 * stroke);
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dsdisk
