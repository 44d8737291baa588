#include <doctest.h>

#include <set>

#include "dsdisk/error.hpp"
#include "dsdisk/exact.hpp"
#include "dsdisk/generate.hpp"
#include "dsdisk/graph.hpp"
#include "dsdisk/local_search.hpp"
#include "dsdisk/rng.hpp"
#include "dsdisk/wvd.hpp"
#include "oracles.hpp"

using namespace dsdisk;

namespace {
Disk D(double x, double y, double r, DiskId id) { return {id, x, y, r, 1.0}; }

std::vector<Disk> RandomAntichain(SplitMix64& rng, int n) {
  std::vector<Disk> out;
  while (static_cast<int>(out.size()) < n) {
    Disk d = D(rng.Uniform(0, 8), rng.Uniform(0, 8), rng.Uniform(0.3, 1.5), static_cast<int>(out.size()));
    bool ok = true;
    for (const Disk& e : out) ok = ok && !ProperlyContains(e, d) && !ProperlyContains(d, e);
    if (ok) out.push_back(d);
  }
  return out;
}

DiskId ArgminPow(const std::vector<Disk>& disks, Point x) {
  DiskId best = disks[0].id;
  double bv = PowDistance(x, disks[0]);
  for (const Disk& d : disks) {
    const double v = std::hypot(x.x - d.cx, x.y - d.cy) - d.r;
    if (v < bv) {
      bv = v;
      best = d.id;
    }
  }
  return best;
}
}  // namespace

TEST_CASE("rasterize: single disk owns everything") {
  const std::vector<Disk> one{D(1, 1, 2, 0)};
  const auto r = Rasterize(one, 32);
  CHECK(r.owners() == std::vector<DiskId>{0});
  CHECK(r.bbox.xmin == doctest::Approx(-3.0));
  CHECK(r.bbox.xmax == doctest::Approx(5.0));
  CHECK_THROWS_AS(Rasterize(one, 8), Error);
}

TEST_CASE("rasterize: equal disks split along the bisector") {
  const std::vector<Disk> two{D(-2, 0, 1, 0), D(2, 0, 1, 1)};
  const auto r = Rasterize(two, 128);
  const double px = r.bbox.width() / r.resolution;
  for (int iy = 0; iy < r.resolution; ++iy) {
    for (int ix = 0; ix < r.resolution; ++ix) {
      const Point c = r.pixel_center(ix, iy);
      if (c.x < -px) CHECK(r.at(ix, iy) == 0);
      if (c.x > px) CHECK(r.at(ix, iy) == 1);
    }
  }
}

TEST_CASE("rasterize matches an independent per-pixel argmin; serial equals parallel") {
  SplitMix64 rng(3);
  const auto disks = RandomAntichain(rng, 3);
  const auto r = Rasterize(disks, 512);
  CHECK(r.owner == RasterizeSerial(disks, 512).owner);
  for (int s = 0; s < 4000; ++s) {
    const int ix = static_cast<int>(rng.Below(512)), iy = static_cast<int>(rng.Below(512));
    CHECK(r.at(ix, iy) == ArgminPow(disks, r.pixel_center(ix, iy)));
  }
  const auto big = RandomAntichain(rng, 12);
  CHECK(Rasterize(big, 300).owner == RasterizeSerial(big, 300).owner);
}

TEST_CASE("cells nonempty") {
  SUBCASE("two disjoint equal disks") {
    const std::vector<Disk> two{D(0, 0, 1, 0), D(5, 0, 1, 1)};
    const auto rep = CheckCellsNonempty(Rasterize(two, 64), two);
    CHECK(rep.raster_violations == 0);
    CHECK(rep.exact_violations == 0);
  }
  SUBCASE("random antichains at 1024 agree with the exact center argmin") {
    SplitMix64 rng(17);
    for (int t = 0; t < 5; ++t) {
      const auto disks = RandomAntichain(rng, 10);
      const auto rep = CheckCellsNonempty(Rasterize(disks, 1024), disks);
      CHECK(rep.raster_violations == 0);
      CHECK(rep.exact_violations == 0);
      for (const Disk& d : disks) CHECK(ArgminPow(disks, d.center()) == d.id);
    }
  }
  SUBCASE("contained pair is rejected") {
    const std::vector<Disk> nested{D(0, 0, 3, 0), D(0.5, 0, 1, 1)};
    try {
      CheckCellsNonempty(Rasterize(nested, 64), nested);
      FAIL("expected precondition violation");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPreconditionViolation);
    }
    CHECK_THROWS_AS(CheckCentersExact(nested), Error);
  }
}

TEST_CASE("dual graph") {
  const std::vector<Disk> one{D(0, 0, 1, 0)};
  CHECK(ComputeDualGraph(Rasterize(one, 32)).edges.empty());
  const std::vector<Disk> two{D(0, 0, 1, 0), D(1.5, 0, 1, 1)};
  const auto dg = ComputeDualGraph(Rasterize(two, 64));
  CHECK(dg.edges.size() == 1);
  CHECK(dg.has_edge(1, 0));

  // Edges found at 512 persist at 1024 (statistically: allow rare losses of
  // slivers, none expected on these inputs).
  SplitMix64 rng(6);
  int lost = 0, total = 0;
  for (int t = 0; t < 6; ++t) {
    const auto disks = RandomAntichain(rng, 6);
    const auto a = ComputeDualGraph(Rasterize(disks, 512));
    const auto b = ComputeDualGraph(Rasterize(disks, 1024));
    for (const auto& [u, v] : a.edges) {
      ++total;
      if (!b.has_edge(u, v)) ++lost;
    }
    if (a.vertices.size() >= 3) CHECK(a.edges.size() <= 3 * a.vertices.size() - 6);
  }
  CHECK(total > 0);
  CHECK(lost * 20 <= total);
}

TEST_CASE("locality: trivial witness") {
  // a and b intersect each other and every disk.
  const DiskInstance inst({D(0, 0, 2, 0), D(3, 0, 2, 1), D(1.5, 1, 0.5, 2), D(1.5, -1, 0.5, 3)});
  const std::vector<DiskId> R{0}, B{1};
  const auto rep = CheckLocality(inst, R, B, 256);
  CHECK(rep.pass());
  REQUIRE(rep.witnesses.size() == 4);
  for (const auto& w : rep.witnesses) {
    REQUIRE(w.edge.has_value());
    CHECK(*w.edge == std::pair<DiskId, DiskId>{0, 1});
  }
}

TEST_CASE("locality: overlapping R and B rejected") {
  const DiskInstance inst({D(0, 0, 2, 0), D(3, 0, 2, 1)});
  const std::vector<DiskId> R{0}, B{0, 1};
  CHECK_THROWS_AS(CheckLocality(inst, R, B, 64), Error);
}

TEST_CASE("locality: random instances, R exact optimum, B local search") {
  int checked = 0;
  for (uint64_t seed = 1; seed < 200 && checked < 5; ++seed) {
    GeneratorSpec spec;
    spec.n = 15;
    spec.seed = seed;
    spec.side = 4.5;
    const auto inst = Generate(spec);
    const auto g = BuildGraph(inst);
    const auto w = inst.weights();
    LocalSearchConfig cfg;
    const auto blue = LocalSearch(inst, g, cfg).ids;
    ExactOptions opt;
    opt.forbidden = blue;
    const auto red = ExactMinDominating(g, w, opt);
    if (!red.feasible || red.cost != ExactMinDominating(g, w).cost) continue;
    std::vector<Disk> rb;
    for (DiskId id : red.ids) rb.push_back(inst[id]);
    for (DiskId id : blue) rb.push_back(inst[id]);
    bool antichain = true;
    for (const Disk& a : rb)
      for (const Disk& b : rb) antichain = antichain && !ProperlyContains(a, b);
    if (!antichain) continue;
    ++checked;
    const auto rep = CheckLocality(inst, red.ids, blue, 1024);
    CHECK(rep.pass());
    CHECK(rep.planar_edge_bound);
  }
  CHECK(checked == 5);
}
