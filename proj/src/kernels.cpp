#include "isokit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "isokit/execution.hpp"

namespace isokit {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {
constexpr std::size_t kMaxBox = 100'000'000;
}

HullScan::HullScan(std::span<const IntVector> vertices) : vertices_(vertices.begin(), vertices.end()) {
  if (vertices_.empty()) throw Error(ErrorCode::BadInput, "empty vertex set");
  const std::size_t d = vertices_.front().size();
  lower_ = vertices_.front();
  IntVector upper = vertices_.front();
  for (const auto& v : vertices_) {
    if (v.size() != d) throw Error(ErrorCode::DimensionMismatch, "hull vertices of different lengths");
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lower_[i]) lower_[i] = v[i];
      if (v[i] > upper[i]) upper[i] = v[i];
    }
  }
  extent_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    Int e = upper[i] - lower_[i] + 1;
    if (!e.fits_ulong_p() || e.get_ui() > kMaxBox)
      throw Error(ErrorCode::BadInput, "bounding box too large");
    extent_[i] = e.get_ui();
    if (box_size_ > kMaxBox / extent_[i]) throw Error(ErrorCode::BadInput, "bounding box too large");
    box_size_ *= extent_[i];
  }

  // Normals to the affine hull: kernel of the transposed direction matrix.
  base_ = vertices_.front();
  std::vector<IntVector> directions;
  for (std::size_t k = 1; k < vertices_.size(); ++k) directions.push_back(vertices_[k] - base_);
  IntMatrix dt = IntMatrix::from_rows(directions, d);
  if (directions.empty()) dt = IntMatrix(0, d);
  for (const RatVector& n : rational_kernel(dt)) {
    Int lcm = 1;
    for (const auto& q : n) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    IntVector scaled(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rat s = n[i] * lcm;
      scaled[i] = s.get_num();
    }
    normals_.push_back(std::move(scaled));
  }
}

IntVector HullScan::point(std::size_t index) const {
  IntVector p(extent_.size());
  for (std::size_t i = extent_.size(); i-- > 0;) {
    p[i] = lower_[i] + static_cast<unsigned long>(index % extent_[i]);
    index /= extent_[i];
  }
  return p;
}

bool HullScan::contains(const IntVector& p) const {
  const IntVector shifted = p - base_;
  for (const auto& n : normals_)
    if (sgn(dot(n, shifted)) != 0) return false;
  return in_convex_hull(p, vertices_);
}

std::vector<IntVector> hull_scan_serial(const HullScan& scan) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < scan.box_size(); ++i) {
    IntVector p = scan.point(i);
    if (scan.contains(p)) out.push_back(std::move(p));
  }
  return out;  // mixed-radix order is lexicographic already
}

std::vector<IntVector> hull_scan_parallel(const HullScan& scan) {
  const long n = static_cast<long>(scan.box_size());
  std::vector<char> inside(scan.box_size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    inside[static_cast<std::size_t>(i)] = scan.contains(scan.point(static_cast<std::size_t>(i))) ? 1 : 0;
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < inside.size(); ++i)
    if (inside[i]) out.push_back(scan.point(i));
  return out;
}

std::optional<std::size_t> first_match_serial(std::size_t count, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_match_parallel(std::size_t count, const std::function<bool(std::size_t)>& pred) {
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_lock;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k >= best.load(std::memory_order_relaxed)) continue;
    bool hit = false;
    try {
      hit = pred(k);
    } catch (...) {
      std::lock_guard<std::mutex> guard(failure_lock);
      if (!failure) failure = std::current_exception();
    }
    if (hit) {
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  const std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return b;
}

}  // namespace kernels
}  // namespace isokit
