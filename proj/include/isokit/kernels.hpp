#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output; tests compare the two and bench/ times
// them against each other.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "isokit/lattice.hpp"

namespace isokit::kernels {

/// Bounding box of a vertex set plus the affine-hull equations used to
/// discard box points cheaply before the exact hull test.
class HullScan {
 public:
  explicit HullScan(std::span<const IntVector> vertices);

  std::size_t box_size() const { return box_size_; }
  /// Box point with mixed-radix index `index` (last coordinate fastest).
  IntVector point(std::size_t index) const;
  bool contains(const IntVector& p) const;

 private:
  std::vector<IntVector> vertices_;
  IntVector lower_;
  std::vector<std::size_t> extent_;
  std::size_t box_size_ = 1;
  IntVector base_;
  std::vector<IntVector> normals_;
};

std::vector<IntVector> hull_scan_serial(const HullScan& scan);
std::vector<IntVector> hull_scan_parallel(const HullScan& scan);

/// Evaluates `task(i)` for i in [0, count) and returns the results in index
/// order. Exceptions thrown by a task are rethrown on the calling thread.
template <class T>
std::vector<T> indexed_map_serial(std::size_t count, const std::function<T(std::size_t)>& task) {
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(task(i));
  return out;
}

template <class T>
std::vector<T> indexed_map_parallel(std::size_t count, const std::function<T(std::size_t)>& task);

/// Smallest index i < count with pred(i), or nullopt.
std::optional<std::size_t> first_match_serial(std::size_t count, const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_match_parallel(std::size_t count, const std::function<bool(std::size_t)>& pred);

}  // namespace isokit::kernels

#include "isokit/kernels_impl.hpp"
