#include "dsdisk/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "dsdisk/error.hpp"

namespace dsdisk {

IntersectionGraph::IntersectionGraph(std::vector<std::vector<DiskId>> adjacency)
    : adjacency_(std::move(adjacency)) {
  closed_.resize(adjacency_.size());
  for (size_t v = 0; v < adjacency_.size(); ++v) {
    auto& c = closed_[v];
    c = adjacency_[v];
    c.insert(std::upper_bound(c.begin(), c.end(), static_cast<DiskId>(v)), static_cast<DiskId>(v));
  }
}

bool IntersectionGraph::adjacent(DiskId u, DiskId v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

size_t IntersectionGraph::edge_count() const {
  size_t deg = 0;
  for (const auto& a : adjacency_) deg += a.size();
  return deg / 2;
}

IntersectionGraph BuildGraph(const DiskInstance& inst) {
  const int n = inst.size();
  std::vector<std::vector<DiskId>> adj(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (int u = 0; u < n; ++u) {
    auto& row = adj[u];
    for (int v = 0; v < n; ++v) {
      if (v != u && Intersects(inst[u], inst[v])) row.push_back(v);
    }
  }
  return IntersectionGraph(std::move(adj));
}

IntersectionGraph BuildGraphSerial(const DiskInstance& inst) {
  const int n = inst.size();
  std::vector<std::vector<DiskId>> adj(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Intersects(inst[u], inst[v])) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return IntersectionGraph(std::move(adj));
}

bool IsDominating(const IntersectionGraph& g, std::span<const DiskId> s) {
  std::vector<char> in(static_cast<size_t>(g.n()), 0);
  for (DiskId id : s) {
    if (id < 0 || id >= g.n()) return false;
    in[id] = 1;
  }
  for (DiskId v = 0; v < g.n(); ++v) {
    const auto nb = g.closed_neighborhood(v);
    if (std::none_of(nb.begin(), nb.end(), [&](DiskId u) { return in[u] != 0; })) return false;
  }
  return true;
}

void DiskMultiset::Add(const Disk& d, int copies) {
  if (copies <= 0) return;
  counts_[d.id] += copies;
  size_ += copies;
  weight_ += copies * d.w;
}

void DiskMultiset::RemoveOne(const Disk& d) {
  auto it = counts_.find(d.id);
  if (it == counts_.end()) {
    throw Error(ErrorKind::kPreconditionViolation, "removing a disk absent from the multiset");
  }
  if (--it->second == 0) counts_.erase(it);
  --size_;
  weight_ -= d.w;
}

int DiskMultiset::multiplicity(DiskId id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<DiskId> DiskMultiset::ids() const {
  std::vector<DiskId> out;
  out.reserve(counts_.size());
  for (const auto& [id, m] : counts_) out.push_back(id);
  return out;
}

double DiskMultiset::RecomputeWeight(const DiskInstance& inst) const {
  double w = 0.0;
  for (const auto& [id, m] : counts_) w += m * inst[id].w;
  return w;
}

DiskMultiset DiskMultiset::FromIds(const DiskInstance& inst, std::span<const DiskId> ids) {
  DiskMultiset D;
  for (DiskId id : ids) D.Add(inst[id]);
  return D;
}

long Depth(DiskId v, const DiskMultiset& D, const IntersectionGraph& g) {
  long depth = 0;
  for (DiskId u : g.closed_neighborhood(v)) depth += D.multiplicity(u);
  return depth;
}

std::vector<long> AllDepths(const DiskMultiset& D, const IntersectionGraph& g) {
  std::vector<long> depth(static_cast<size_t>(g.n()), 0);
  for (const auto& [id, m] : D.entries()) {
    for (DiskId v : g.closed_neighborhood(id)) depth[v] += m;
  }
  return depth;
}

NeighborhoodClasses ComputeNeighborhoodClasses(const IntersectionGraph& g, const DiskMultiset& D,
                                               long max_size) {
  const auto depth = AllDepths(D, g);
  std::map<std::vector<DiskId>, size_t> index;
  NeighborhoodClasses out;
  for (DiskId v = 0; v < g.n(); ++v) {
    if (depth[v] > max_size) continue;
    std::vector<DiskId> key;
    for (DiskId u : g.closed_neighborhood(v)) {
      if (D.contains(u)) key.push_back(u);
    }
    auto [it, inserted] = index.try_emplace(std::move(key), out.classes.size());
    if (inserted) {
      out.classes.push_back({it->first, v, {}});
    }
    out.classes[it->second].members.push_back(v);
  }
  return out;
}

NeighborhoodClasses ComputeNeighborhoodClasses(const DiskInstance& inst, const DiskMultiset& D,
                                               long max_size) {
  return ComputeNeighborhoodClasses(BuildGraph(inst), D, max_size);
}

ClassCountReport ClassCountSanity(const DiskInstance& inst, const DiskMultiset& D, long L,
                                  double c_check) {
  const auto classes = ComputeNeighborhoodClasses(inst, D, L);
  ClassCountReport report;
  report.observed = static_cast<long>(std::count_if(
      classes.classes.begin(), classes.classes.end(),
      [](const NeighborhoodClass& c) { return !c.key.empty(); }));
  report.bound = c_check * static_cast<double>(D.size()) * static_cast<double>(L) *
                 static_cast<double>(L);
  report.pass = static_cast<double>(report.observed) <= report.bound;
  return report;
}

}  // namespace dsdisk
