#include "hopftrees/compositions.hpp"

#include "hopftrees/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hopftrees {

namespace {
void require_positive(const std::vector<int>& p) {
  for (int x : p)
    if (x < 1) throw DomainError("parts must be positive integers");
}
}  // namespace

Composition::Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) { require_positive(parts); }

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts.rbegin(), parts.rend()));
}

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  require_positive(parts);
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), i));
}

std::string render_parts(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

Partition partition_of(const Composition& c) { return Partition(c.parts); }

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n);
  return out;
}

std::vector<Composition> compositions_of(int n, int length) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n))
    if (static_cast<int>(c.length()) == length) out.push_back(std::move(c));
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Composition> rearrangements(const Partition& p) {
  std::vector<int> v = p.parts;
  std::sort(v.begin(), v.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
  std::vector<Composition> out;
  if (c.empty()) {
    out.emplace_back();
    return out;
  }
  // Each of the length-1 gaps between parts is either kept or merged.
  std::size_t gaps = c.length() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<int> parts{c.parts[0]};
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (std::size_t{1} << g))
        parts.back() += c.parts[g + 1];
      else
        parts.push_back(c.parts[g + 1]);
    }
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition();
  for (int i = 1; i <= p.parts.front(); ++i) {
    int count = 0;
    for (int x : p.parts)
      if (x >= i) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

}  // namespace hopftrees
