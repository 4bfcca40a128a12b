#pragma once

// Thread-count control for the OpenMP kernels. Every parallel kernel in the
// library produces bit-identical results regardless of the thread count.

namespace ehc {

int max_threads();
void set_threads(int count);

/// Restores the previous thread count on scope exit.
class ScopedThreads {
 public:
  explicit ScopedThreads(int count) : previous_(max_threads()) { set_threads(count); }
  ~ScopedThreads() { set_threads(previous_); }
  ScopedThreads(const ScopedThreads&) = delete;
  ScopedThreads& operator=(const ScopedThreads&) = delete;

 private:
  int previous_;
};

}  // namespace ehc
