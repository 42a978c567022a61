#pragma once

#include <exception>
#include <mutex>

namespace isokit::kernels {

template <class T>
std::vector<T> indexed_map_parallel(std::size_t count, const std::function<T(std::size_t)>& task) {
  std::vector<std::optional<T>> slots(count);
  std::exception_ptr failure;
  std::mutex failure_lock;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(task(static_cast<std::size_t>(i)));
    } catch (...) {
      std::lock_guard<std::mutex> guard(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace isokit::kernels
