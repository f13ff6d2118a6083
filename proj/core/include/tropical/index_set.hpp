#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropical {

// Sorted set of 0-based coordinate indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> items) : items_(items) { normalize(); }
  explicit IndexSet(std::vector<std::size_t> items) : items_(std::move(items)) { normalize(); }

  static IndexSet range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return IndexSet(std::move(v));
  }

  void insert(std::size_t i) {
    auto it = std::lower_bound(items_.begin(), items_.end(), i);
    if (it == items_.end() || *it != i) items_.insert(it, i);
  }
  bool contains(std::size_t i) const {
    return std::binary_search(items_.begin(), items_.end(), i);
  }
  bool subset_of(const IndexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }
  bool proper_subset_of(const IndexSet& other) const {
    return size() < other.size() && subset_of(other);
  }
  bool disjoint(const IndexSet& other) const { return intersect(other).empty(); }

  IndexSet unite(const IndexSet& other) const {
    std::vector<std::size_t> out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
  }
  IndexSet intersect(const IndexSet& other) const {
    std::vector<std::size_t> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
  }
  IndexSet minus(const IndexSet& other) const {
    std::vector<std::size_t> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
    return IndexSet(std::move(out));
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  std::size_t front() const { return items_.front(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::size_t>& items() const { return items_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

  // 1-based rendering, e.g. "{1,3}".
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < items_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(items_[k] + 1);
    }
    return s + "}";
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<std::size_t> items_;
};

}  // namespace tropical
