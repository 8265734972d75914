#pragma once

#include <string>
#include <vector>

#include "planch/rational.hpp"

namespace planch {

// Integer partition: weakly decreasing positive parts. The empty partition
// is valid and prints as "".
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "3,3,1"; "" parses to the empty partition.
  static Partition parse(const std::string& s);

  int size() const { return size_; }  // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 1-based; 0 beyond the last row
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  std::vector<int> contents() const;  // j - i over boxes, ascending
  bool contains(const Partition& mu) const;

  // Diagrams obtained by adding one box, ordered top row first. This order
  // matches the descending order of the interlacing x-coordinates.
  std::vector<Partition> addable() const;
  // Diagrams obtained by removing one box, top row first.
  std::vector<Partition> removable() const;

  std::string str() const;

  bool operator==(const Partition&) const = default;
  // Canonical order: by size, then within a size the enumeration order of
  // partitions_of (first part descending, etc.).
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in canonical order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Dominance partial order; requires |a| == |b|.
bool dominates(const Partition& a, const Partition& b);

// Count of standard fillings, computed by the hook-length formula and
// independently by the one-box growth recursion; a mismatch throws
// logic_error (fatal internal defect). Results are cached.
Int dim_standard(const Partition& la);

// Count of monotone lattice paths mu -> la in the containment order.
// 0 when mu is not contained in la; dim_skew(empty, la) == dim_standard(la).
Int dim_skew(const Partition& mu, const Partition& la);

// Modified Frobenius coordinates: a_i = la_i - i + 1/2, b_i = la'_i - i + 1/2
// for i up to the diagonal length.
struct Frobenius {
  std::vector<Rat> a, b;
};
Frobenius frobenius(const Partition& la);

}  // namespace planch
