// Append-only storage with stable addresses and lock-free reads.
//
// Writers append under an external lock and publish through the atomic size;
// readers index published slots without synchronization.  Chunk slots are
// preallocated so the spine never reallocates.

#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <stdexcept>

namespace cellring {

template <typename T, size_t ChunkBits = 14, size_t MaxChunks = 4096>
class StableVector {
 public:
  static constexpr size_t kChunk = size_t(1) << ChunkBits;

  StableVector() : size_(0) {}

  size_t size() const { return size_.load(std::memory_order_acquire); }

  // append under the owner's write lock
  size_t push(T v) {
    return pushInit([&](T& slot) { slot = std::move(v); });
  }

  // append with in-place initialization (for non-movable slot types)
  template <typename F>
  size_t pushInit(F&& init) {
    size_t n = size_.load(std::memory_order_relaxed);
    size_t c = n >> ChunkBits;
    if (c >= MaxChunks) throw std::length_error("StableVector capacity exceeded");
    if (!chunks_[c]) chunks_[c] = std::make_unique<std::array<T, kChunk>>();
    init((*chunks_[c])[n & (kChunk - 1)]);
    size_.store(n + 1, std::memory_order_release);
    return n;
  }

  const T& operator[](size_t i) const {
    return (*chunks_[i >> ChunkBits])[i & (kChunk - 1)];
  }
  T& operator[](size_t i) { return (*chunks_[i >> ChunkBits])[i & (kChunk - 1)]; }

 private:
  std::array<std::unique_ptr<std::array<T, kChunk>>, MaxChunks> chunks_;
  std::atomic<size_t> size_;
};

}  // namespace cellring
