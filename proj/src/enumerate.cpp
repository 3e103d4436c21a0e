#include "spexlab/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "spexlab/canonical.hpp"
#include "spexlab/errors.hpp"

namespace spexlab {

namespace {

std::uint64_t fnv1a(const std::vector<std::string>& lines) {
  std::uint64_t h = 1469598103934665603ull;
  for (const std::string& s : lines) {
    for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    h = (h ^ '\n') * 1099511628211ull;
  }
  return h;
}

std::filesystem::path cache_file(const std::string& dir, int n) {
  return std::filesystem::path(dir) / ("order" + std::to_string(n) + ".g6");
}

bool load_cache(const std::string& dir, int n, std::vector<std::string>& out) {
  std::ifstream in(cache_file(dir, n));
  if (!in) return false;
  std::vector<std::string> lines;
  std::string line, check;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      check = line;
      break;
    }
    lines.push_back(line);
  }
  char tag[16];
  unsigned long long h = 0, cnt = 0;
  if (std::sscanf(check.c_str(), "#%15s %llx %llu", tag, &h, &cnt) != 3) return false;
  if (std::string(tag) != "fnv1a" || cnt != lines.size() || h != fnv1a(lines)) return false;
  out = std::move(lines);
  return true;
}

void store_cache(const std::string& dir, int n, const std::vector<std::string>& lines) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(cache_file(dir, n), std::ios::trunc);
  if (!out) return;  // cache is best-effort
  for (const std::string& s : lines) out << s << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "#fnv1a %016llx %llu",
                static_cast<unsigned long long>(fnv1a(lines)),
                static_cast<unsigned long long>(lines.size()));
  out << buf << '\n';
}

// Children of one parent class: attach a new vertex to every subset of the
// parent's vertices, canonicalize, dedupe into acc.
void expand_parent(const Graph& parent, std::unordered_set<std::string>& acc) {
  int p = parent.order();
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    Graph child(p + 1);
    for (int u = 0; u < p; ++u) {
      for (int v = parent.row(u).next(u + 1); v >= 0; v = parent.row(u).next(v + 1))
        child.add_edge(u, v);
      if ((mask >> u) & 1) child.add_edge(u, p);
    }
    acc.insert(canonical_g6(child));
  }
}

std::vector<std::string> generate_level(const std::vector<std::string>& parents, int jobs) {
  std::vector<Graph> pg;
  pg.reserve(parents.size());
  for (const std::string& s : parents) pg.push_back(graph6_decode(s));
  std::vector<std::unordered_set<std::string>> acc(std::max(jobs, 1));
  if (jobs <= 1 || pg.size() < 32) {
    for (const Graph& g : pg) expand_parent(g, acc[0]);
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (pg.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        size_t lo = t * chunk, hi = std::min(pg.size(), lo + chunk);
        for (size_t i = lo; i < hi; ++i) expand_parent(pg[i], acc[t]);
      });
    for (auto& th : pool) th.join();
  }
  std::unordered_set<std::string> all;
  for (auto& a : acc) all.merge(a);
  std::vector<std::string> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::mutex memo_mutex;
std::map<int, std::vector<std::string>> memo;

}  // namespace

std::string default_cache_dir() {
  const char* env = std::getenv("SPEXLAB_CACHE_DIR");
  if (env && *env) return env;
  return "spexlab-cache";
}

EnumResult enumerate_graphs(int n, const EnumOptions& opts) {
  if (n < 1 || n > 10) throw budget_error("enumeration supports orders 1..10");
  if (n == 10 && !opts.allow_order_10)
    throw budget_error("order 10 enumeration requires allow_order_10");
  std::string dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;
  int jobs = opts.jobs > 0 ? opts.jobs
                           : std::max(1u, std::thread::hardware_concurrency());

  std::scoped_lock lock(memo_mutex);
  EnumResult res;
  if (auto it = memo.find(n); it != memo.end()) {
    res.g6 = &it->second;
    return res;
  }
  // find deepest available level, then extend upward
  int base = n;
  std::vector<std::string> level;
  for (; base > 1; --base) {
    if (auto it = memo.find(base); it != memo.end()) {
      level = it->second;
      break;
    }
    if (opts.use_disk_cache && load_cache(dir, base, level)) {
      if (base == n) res.disk_cache_hit = true;
      break;
    }
  }
  if (base == 1) level = {graph6_encode(Graph(1))};
  for (int k = base; k < n; ++k) {
    level = generate_level(level, jobs);
    if (opts.use_disk_cache) store_cache(dir, k + 1, level);
  }
  auto [it, inserted] = memo.emplace(n, std::move(level));
  res.g6 = &it->second;
  return res;
}

}  // namespace spexlab
