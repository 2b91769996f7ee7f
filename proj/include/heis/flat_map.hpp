#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace heis {

// Open-addressing hash map from uint64 keys to small integer values.
// Key 0 is reserved as the empty slot marker; the packed Heisenberg
// coordinate encoding never produces it. Linear probing, power-of-two
// capacity. BFS throughput on packed keys is the whole point.
class FlatMap64 {
 public:
  FlatMap64() { rehash(1024); }

  size_t size() const { return size_; }
  size_t capacity() const { return keys_.size(); }
  size_t bytes() const { return keys_.size() * (sizeof(uint64_t) + 1); }

  // Returns true if the key was inserted (absent before).
  bool insert_if_absent(uint64_t key, uint8_t value) {
    if ((size_ + 1) * 2 >= keys_.size()) rehash(keys_.size() * 2);
    size_t i = slot(key);
    while (keys_[i] != 0) {
      if (keys_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
    vals_[i] = value;
    ++size_;
    return true;
  }

  // -1 when absent.
  int find(uint64_t key) const {
    size_t i = slot(key);
    while (keys_[i] != 0) {
      if (keys_[i] == key) return vals_[i];
      i = (i + 1) & mask_;
    }
    return -1;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] != 0) fn(keys_[i], vals_[i]);
    }
  }

  void reserve(size_t n) {
    size_t cap = 1024;
    while (cap < 2 * n + 1) cap <<= 1;
    if (cap > keys_.size()) rehash(cap);
  }

 private:
  size_t slot(uint64_t key) const {
    key *= 0x9e3779b97f4a7c15ULL;
    key ^= key >> 29;
    return static_cast<size_t>(key) & mask_;
  }

  void rehash(size_t cap) {
    std::vector<uint64_t> old_keys = std::move(keys_);
    std::vector<uint8_t> old_vals = std::move(vals_);
    keys_.assign(cap, 0);
    vals_.assign(cap, 0);
    mask_ = cap - 1;
    for (size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == 0) continue;
      size_t j = slot(old_keys[i]);
      while (keys_[j] != 0) j = (j + 1) & mask_;
      keys_[j] = old_keys[i];
      vals_[j] = old_vals[i];
    }
  }

  std::vector<uint64_t> keys_;
  std::vector<uint8_t> vals_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

}  // namespace heis
