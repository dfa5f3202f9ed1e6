#pragma once

// Compositions (ordered) and partitions (weakly decreasing) of integers.

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace hopftrees {

struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p);
  explicit Composition(std::vector<int> p);

  int weight() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  Composition reversed() const;

  // Lexicographic by parts.
  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  // Sorts into weakly decreasing order.
  explicit Partition(std::vector<int> p);

  int weight() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  // m_i(lambda)
  int multiplicity(int i) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// "[2,1,1]"
std::string render_parts(const std::vector<int>& parts);

// Forget order.
Partition partition_of(const Composition& c);

// Lexicographic order.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_of(int n, int length);
// Lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// Every distinct ordering of the parts, lexicographic.
std::vector<Composition> rearrangements(const Partition& p);
// All compositions obtained by summing runs of adjacent parts (includes c).
std::vector<Composition> coarsenings(const Composition& c);
// Conjugate (transpose) partition.
Partition conjugate(const Partition& p);

}  // namespace hopftrees
