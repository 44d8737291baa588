#include <doctest.h>

#include <cmath>

#include "dsdisk/error.hpp"
#include "dsdisk/exact.hpp"
#include "dsdisk/local_search.hpp"
#include "dsdisk/rng.hpp"
#include "oracles.hpp"

using namespace dsdisk;

namespace {
Disk D(double x, double y, double r, DiskId id) { return {id, x, y, r, 1.0}; }

DiskInstance Star(int k, DiskId hub) {
  std::vector<Disk> d;
  int leaf = 0;
  for (int i = 0; i <= k; ++i) {
    if (i == hub) {
      d.push_back(D(0, 0, 3, i));
    } else {
      const double a = 2 * 3.14159265358979 * leaf++ / k;
      d.push_back(D(4 * std::cos(a), 4 * std::sin(a), 1.2, i));
    }
  }
  return DiskInstance(d);
}

LocalSearchConfig Cfg(int b) {
  LocalSearchConfig c;
  c.b = b;
  return c;
}
}  // namespace

TEST_CASE("swap size from epsilon") {
  LocalSearchConfig c;
  c.b = 3;
  CHECK(EffectiveSwapSize(c) == 3);
  c.epsilon = 0.5;
  CHECK(EffectiveSwapSize(c) == 4);
  c.c_ls = 2.0;
  c.epsilon = 0.7;
  CHECK(EffectiveSwapSize(c) == 5);
}

TEST_CASE("local search: star reaches the hub") {
  for (int b = 2; b <= 3; ++b) {
    for (DiskId hub : {0, 3, 6}) {
      const auto r = LocalSearch(Star(6, hub), Cfg(b));
      CHECK(r.ids == std::vector<DiskId>{hub});
    }
  }
  // b = 1 allows only deletions; leaves go first when the hub has the
  // highest id.
  CHECK(LocalSearch(Star(6, 6), Cfg(1)).ids == std::vector<DiskId>{6});
}

TEST_CASE("local search: disjoint disks keep everything") {
  std::vector<Disk> d;
  for (int i = 0; i < 5; ++i) d.push_back(D(3.0 * i, 0, 1, i));
  const auto r = LocalSearch(DiskInstance(d), Cfg(2));
  CHECK(r.ids.size() == 5);
  CHECK(r.trace.empty());
}

TEST_CASE("local search: dense instance, certified 2-optimal") {
  GeneratorSpec spec;
  spec.n = 14;
  spec.seed = 5;
  spec.side = 5.0;
  const auto inst = Generate(spec);
  const auto g = BuildGraph(inst);
  const auto r = LocalSearch(inst, g, Cfg(2));
  CHECK(IsDominating(g, r.ids));
  CHECK(IsLocallyOptimal(g, r.ids, 2));
  CHECK_FALSE(oracle::ImprovingSwapExists(inst, r.ids, 2));
  CHECK(ContainmentFree(inst, r.ids));
  const auto opt = ExactMinDominating(g, inst.weights());
  CHECK(r.ids.size() >= opt.ids.size());
  CHECK(r.ids.size() <= 2 * opt.ids.size());
  int prev = inst.size();
  for (const Swap& s : r.trace) {
    CHECK(s.size_after < prev);
    CHECK(s.added.size() + 1 <= s.removed.size());
    prev = s.size_after;
  }
  CHECK(r.trace.size() <= static_cast<size_t>(inst.size()));
}

TEST_CASE("local search: random instances pass the brute-force certificate") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = oracle::RandomInstance(seed, 6 + static_cast<int>(seed % 7),
                                             seed % 3 == 0 ? GeneratorKind::kNested : GeneratorKind::kUniform);
    const auto g = BuildGraph(inst);
    for (int b = 1; b <= 3; ++b) {
      const auto r = LocalSearch(inst, g, Cfg(b));
      CHECK(IsDominating(g, r.ids));
      CHECK(ContainmentFree(inst, r.ids));
      CHECK(IsLocallyOptimal(g, r.ids, b) == !oracle::ImprovingSwapExists(inst, r.ids, b));
      CHECK_FALSE(oracle::ImprovingSwapExists(inst, r.ids, b));
    }
  }
}

TEST_CASE("pruned and unpruned swap search return the same swap") {
  SplitMix64 rng(8);
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 6 + static_cast<int>(rng.Below(7));
    const auto inst = oracle::RandomInstance(1000 + t, n);
    const auto g = BuildGraph(inst);
    std::vector<DiskId> B;
    for (int v = 0; v < n; ++v) {
      if (rng.Bernoulli(0.6)) B.push_back(v);
    }
    if (!IsDominating(g, B)) continue;
    for (int b = 1; b <= 3; ++b) {
      const auto p = FindImprovingSwap(g, B, b, true);
      const auto u = FindImprovingSwap(g, B, b, false);
      REQUIRE(p.has_value() == u.has_value());
      CHECK(p.has_value() == oracle::ImprovingSwapExists(inst, B, b));
      if (p) {
        ++found;
        CHECK(p->removed == u->removed);
        CHECK(p->added == u->added);
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("containment replace") {
  SUBCASE("small disk replaced by its container") {
    const DiskInstance inst({D(0, 0, 1, 0), D(0.5, 0, 3, 1)});
    const std::vector<DiskId> B{0};
    CHECK(ContainmentReplace(inst, B) == std::vector<DiskId>{1});
  }
  SUBCASE("no containment is the identity") {
    const DiskInstance inst({D(0, 0, 1, 0), D(1.5, 0, 1, 1)});
    const std::vector<DiskId> B{0, 1};
    int reps = -1;
    CHECK(ContainmentReplace(inst, B, &reps) == B);
    CHECK(reps == 0);
  }
  SUBCASE("nested chain goes straight to the outermost") {
    const DiskInstance inst({D(0, 0, 1, 0), D(0.2, 0, 2, 1), D(0.4, 0, 4, 2)});
    const std::vector<DiskId> B{0};
    int reps = 0;
    CHECK(ContainmentReplace(inst, B, &reps) == std::vector<DiskId>{2});
    CHECK(reps == 1);
  }
  SUBCASE("two members with a common container collapse") {
    const DiskInstance inst({D(0, 0, 1, 0), D(1, 0, 1, 1), D(0.5, 0, 5, 2)});
    const std::vector<DiskId> B{0, 1};
    CHECK(ContainmentReplace(inst, B) == std::vector<DiskId>{2});
  }
}

TEST_CASE("containers inherit domination") {
  SplitMix64 rng(21);
  for (int t = 0; t < 3000; ++t) {
    const Disk u = D(rng.Uniform(0, 4), rng.Uniform(0, 4), rng.Uniform(0.1, 1), 0);
    const Disk v = D(rng.Uniform(0, 4), rng.Uniform(0, 4), rng.Uniform(0.5, 4), 1);
    const Disk d = D(rng.Uniform(-2, 6), rng.Uniform(-2, 6), rng.Uniform(0.1, 2), 2);
    if (ProperlyContains(v, u) && Intersects(u, d)) CHECK(Intersects(v, d));
  }
}

TEST_CASE("local search on nested instances yields containment-free output") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = oracle::RandomInstance(seed, 20, GeneratorKind::kNested);
    const auto r = LocalSearch(inst, Cfg(2));
    CHECK(ContainmentFree(inst, r.ids));
    for (DiskId u : r.ids) {
      for (const Disk& v : inst.disks()) CHECK_FALSE(ProperlyContains(v, inst[u]));
    }
  }
}

TEST_CASE("iteration cap") {
  const auto inst = oracle::RandomInstance(4, 12);
  LocalSearchConfig c = Cfg(2);
  c.max_iterations = 1;
  try {
    LocalSearch(inst, c);
    FAIL("expected iteration-cap-exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIterationCapExceeded);
  }
}
