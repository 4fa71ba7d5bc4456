#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "cliquemerge/graph.hpp"

namespace cliquemerge::detail {

// Calls fn(v) for every node. Workers pull node ids from a shared counter;
// fn must only write to state owned by v.
template <typename Fn>
void for_each_node(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    for (NodeId v = 0; v < n; ++v) fn(v);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t v = next.fetch_add(1); v < n; v = next.fetch_add(1)) fn(static_cast<NodeId>(v));
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  pool.reserve(count - 1);
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(work);
  work();
}

}  // namespace cliquemerge::detail
