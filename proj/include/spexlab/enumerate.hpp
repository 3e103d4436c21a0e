#pragma once

#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

struct EnumOptions {
  std::string cache_dir;     // empty: $SPEXLAB_CACHE_DIR, else "spexlab-cache"
  int jobs = 0;              // 0: hardware concurrency
  bool allow_order_10 = false;
  bool use_disk_cache = true;
};

struct EnumResult {
  const std::vector<std::string>* g6 = nullptr;  // canonical, sorted; owned by in-process memo
  bool disk_cache_hit = false;
};

std::string default_cache_dir();

// All isomorphism classes of simple graphs of the given order, as sorted
// canonical graph6 strings. Orders above 9 need allow_order_10 (order 10 is
// ~12M classes); anything above 10 is rejected outright.
EnumResult enumerate_graphs(int n, const EnumOptions& opts = {});

}  // namespace spexlab
