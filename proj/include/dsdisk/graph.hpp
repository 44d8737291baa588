#pragma once

#include <map>
#include <span>
#include <vector>

#include "dsdisk/geometry.hpp"

namespace dsdisk {

class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  // adjacency[v] must be sorted, symmetric and free of self-loops.
  explicit IntersectionGraph(std::vector<std::vector<DiskId>> adjacency);

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::span<const DiskId> neighbors(DiskId v) const { return adjacency_[v]; }
  // N[v]: sorted, includes v.
  std::span<const DiskId> closed_neighborhood(DiskId v) const { return closed_[v]; }
  bool adjacent(DiskId u, DiskId v) const;
  size_t edge_count() const;

  bool operator==(const IntersectionGraph& o) const { return adjacency_ == o.adjacency_; }

 private:
  std::vector<std::vector<DiskId>> adjacency_;
  std::vector<std::vector<DiskId>> closed_;
};

// Edge {u, v} iff Intersects(u, v), u != v. Rows are filled in parallel.
IntersectionGraph BuildGraph(const DiskInstance& inst);
// Single-threaded reference for BuildGraph.
IntersectionGraph BuildGraphSerial(const DiskInstance& inst);

bool IsDominating(const IntersectionGraph& g, std::span<const DiskId> s);

// Disks with multiplicities. Copies of a disk are geometric duplicates.
class DiskMultiset {
 public:
  DiskMultiset() = default;

  void Add(const Disk& d, int copies = 1);
  // Removes one copy; the disk must be present.
  void RemoveOne(const Disk& d);

  int multiplicity(DiskId id) const;
  bool contains(DiskId id) const { return counts_.count(id) != 0; }
  // Total number of copies.
  long size() const { return size_; }
  int distinct() const { return static_cast<int>(counts_.size()); }
  bool empty() const { return counts_.empty(); }
  double weight() const { return weight_; }
  const std::map<DiskId, int>& entries() const { return counts_; }
  std::vector<DiskId> ids() const;

  // Sum of multiplicity * w over the instance, in id order.
  double RecomputeWeight(const DiskInstance& inst) const;

  static DiskMultiset FromIds(const DiskInstance& inst, std::span<const DiskId> ids);

  bool operator==(const DiskMultiset& o) const { return counts_ == o.counts_; }

 private:
  std::map<DiskId, int> counts_;
  long size_ = 0;
  double weight_ = 0.0;
};

// Number of copies in D intersecting v (v's own copies included).
long Depth(DiskId v, const DiskMultiset& D, const IntersectionGraph& g);
std::vector<long> AllDepths(const DiskMultiset& D, const IntersectionGraph& g);

struct NeighborhoodClass {
  std::vector<DiskId> key;  // distinct ids of D intersecting the members
  DiskId representative = 0;
  std::vector<DiskId> members;
};

struct NeighborhoodClasses {
  std::vector<NeighborhoodClass> classes;  // sorted by representative
};

// Groups every v with Depth(v, D) <= max_size by its neighborhood in D.
NeighborhoodClasses ComputeNeighborhoodClasses(const IntersectionGraph& g,
                                               const DiskMultiset& D,
                                               long max_size);
NeighborhoodClasses ComputeNeighborhoodClasses(const DiskInstance& inst,
                                               const DiskMultiset& D,
                                               long max_size);

struct ClassCountReport {
  long observed = 0;   // classes with a nonempty key
  double bound = 0.0;  // c_check * |D| * L^2
  bool pass = true;
};

// Diagnostic for the O(|D| L^2) bound on distinct neighborhoods.
ClassCountReport ClassCountSanity(const DiskInstance& inst, const DiskMultiset& D,
                                  long L, double c_check);

}  // namespace dsdisk
