#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sdtp {

/// Implicit d-ary min-heap (d = 4 by default). No decrease-key: Dijkstra
/// pushes duplicates and skips settled nodes on pop, which keeps the hot
/// loop branch-light and the storage contiguous.
template <typename Prio, typename Id, int Arity = 4>
class DAryHeap {
  static_assert(Arity >= 2);

 public:
  struct Entry {
    Prio prio;
    Id id;
  };

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  void clear() { heap_.clear(); }
  void reserve(std::size_t n) { heap_.reserve(n); }

  void push(Prio prio, Id id) {
    heap_.push_back({prio, id});
    sift_up(heap_.size() - 1);
  }

  Entry pop_min() {
    Entry top = heap_.front();
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) sift_down(0);
    return top;
  }

 private:
  void sift_up(std::size_t pos) {
    Entry e = heap_[pos];
    while (pos > 0) {
      const std::size_t parent = (pos - 1) / Arity;
      if (heap_[parent].prio <= e.prio) break;
      heap_[pos] = heap_[parent];
      pos = parent;
    }
    heap_[pos] = e;
  }

  void sift_down(std::size_t pos) {
    const std::size_t n = heap_.size();
    Entry e = heap_[pos];
    for (;;) {
      const std::size_t first = pos * Arity + 1;
      if (first >= n) break;
      const std::size_t last = std::min(first + Arity, n);
      std::size_t best = first;
      for (std::size_t c = first + 1; c < last; ++c)
        if (heap_[c].prio < heap_[best].prio) best = c;
      if (e.prio <= heap_[best].prio) break;
      heap_[pos] = heap_[best];
      pos = best;
    }
    heap_[pos] = e;
  }

  std::vector<Entry> heap_;
};

}  // namespace sdtp
