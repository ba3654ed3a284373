#include "cuberep/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "cuberep/error.hpp"

namespace cuberep {

std::string status_name(ExtremalStatus status) {
  return status == ExtremalStatus::exact ? "exact" : "lower";
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedSearchState {
  std::atomic<long long> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::optional<Clock::time_point> deadline;
  std::optional<std::uint64_t> node_budget;
};

struct TaskResult {
  long long value = -1;
  std::vector<char> chosen;
};

// Maximum subset of {0..ground-1} containing no listed copy entirely.
class CopyFreeSearch {
 public:
  CopyFreeSearch(std::size_t ground, std::vector<std::vector<int>> copies)
      : ground_(ground), copies_(std::move(copies)), by_element_(ground) {
    for (std::size_t c = 0; c < copies_.size(); ++c)
      for (int e : copies_[c]) by_element_[e].push_back(static_cast<int>(c));
  }

  struct Outcome {
    long long value = 0;
    std::vector<char> chosen;
    bool complete = true;
    std::uint64_t nodes = 0;
  };

  Outcome run(const ExtremalOptions& options) {
    SharedSearchState shared;
    if (options.time_budget_seconds)
      shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(*options.time_budget_seconds));
    shared.node_budget = options.node_budget;

    const int threads = std::max(1, options.threads);
    int split = 0;
    if (threads > 1) {
      while ((1 << split) < threads) ++split;
      split = std::min<int>(split + 3, static_cast<int>(ground_));
    }
    std::vector<std::vector<char>> prefixes;
    {
      Worker w(*this, shared);
      w.collect_prefixes(split, prefixes);
    }
    std::vector<TaskResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      Worker w(*this, shared);
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        results[i] = w.run_task(prefixes[i]);
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    Outcome out;
    out.value = -1;
    for (auto& r : results)
      if (r.value > out.value) {
        out.value = r.value;
        out.chosen = std::move(r.chosen);
      }
    if (out.value < 0) {
      out.value = 0;
      out.chosen.assign(ground_, 0);
    }
    out.complete = !shared.stop.load();
    out.nodes = shared.nodes.load();
    return out;
  }

 private:
  enum : char { undecided = 0, included = 1, excluded = 2 };

  class Worker {
   public:
    Worker(const CopyFreeSearch& s, SharedSearchState& shared)
        : s_(s), shared_(shared), state_(s.ground_, undecided), in_(s.copies_.size(), 0),
          out_(s.copies_.size(), 0), stamp_(s.ground_, 0) {}

    void collect_prefixes(int depth, std::vector<std::vector<char>>& prefixes) {
      if (depth == 0) {
        prefixes.push_back({});
        return;
      }
      std::vector<char> path;
      collect(0, depth, path, prefixes);
    }

    TaskResult run_task(const std::vector<char>& prefix) {
      reset();
      for (std::size_t i = 0; i < prefix.size(); ++i) decide(static_cast<int>(i), prefix[i]);
      local_ = TaskResult{};
      current_ = static_cast<long long>(std::count(prefix.begin(), prefix.end(), included));
      search(static_cast<int>(prefix.size()));
      return std::move(local_);
    }

   private:
    void reset() {
      std::fill(state_.begin(), state_.end(), undecided);
      std::fill(in_.begin(), in_.end(), 0);
      std::fill(out_.begin(), out_.end(), 0);
    }

    bool can_include(int e) const {
      for (int c : s_.by_element_[e])
        if (out_[c] == 0 && in_[c] + 1 == static_cast<int>(s_.copies_[c].size())) return false;
      return true;
    }

    void decide(int e, char how) {
      state_[e] = how;
      for (int c : s_.by_element_[e]) (how == included ? in_ : out_)[c]++;
    }
    void undo(int e) {
      const char how = state_[e];
      for (int c : s_.by_element_[e]) (how == included ? in_ : out_)[c]--;
      state_[e] = undecided;
    }

    void collect(int e, int depth, std::vector<char>& path, std::vector<std::vector<char>>& prefixes) {
      if (e == depth) {
        prefixes.push_back(path);
        return;
      }
      if (can_include(e)) {
        decide(e, included);
        path.push_back(included);
        collect(e + 1, depth, path, prefixes);
        path.pop_back();
        undo(e);
      }
      decide(e, excluded);
      path.push_back(excluded);
      collect(e + 1, depth, path, prefixes);
      path.pop_back();
      undo(e);
    }

    // Lower bound on how many undecided elements must still be excluded.
    long long forced_exclusions() {
      ++epoch_;
      long long packed = 0;
      for (std::size_t c = 0; c < s_.copies_.size(); ++c) {
        if (out_[c] != 0) continue;
        bool clash = false;
        for (int e : s_.copies_[c])
          if (state_[e] == undecided && stamp_[e] == epoch_) {
            clash = true;
            break;
          }
        if (clash) continue;
        for (int e : s_.copies_[c])
          if (state_[e] == undecided) stamp_[e] = epoch_;
        ++packed;
      }
      return packed;
    }

    bool out_of_budget() {
      const std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
      if (shared_.node_budget && n > *shared_.node_budget) shared_.stop = true;
      if (shared_.deadline && (n & 1023) == 0 && Clock::now() > *shared_.deadline) shared_.stop = true;
      return shared_.stop.load(std::memory_order_relaxed);
    }

    void search(int e) {
      if (out_of_budget()) return;
      if (current_ > local_.value) {
        local_.value = current_;
        local_.chosen.assign(state_.begin(), state_.end());
        for (auto& x : local_.chosen) x = x == included ? 1 : 0;
        long long seen = shared_.best.load();
        while (current_ > seen && !shared_.best.compare_exchange_weak(seen, current_)) {
        }
      }
      if (e == static_cast<int>(s_.ground_)) return;
      const long long undecided_left = static_cast<long long>(s_.ground_) - e;
      const long long bound = current_ + undecided_left - forced_exclusions();
      if (bound <= local_.value || bound < shared_.best.load()) return;
      if (can_include(e)) {
        decide(e, included);
        ++current_;
        search(e + 1);
        --current_;
        undo(e);
        if (shared_.stop.load(std::memory_order_relaxed)) return;
      }
      decide(e, excluded);
      search(e + 1);
      undo(e);
    }

    const CopyFreeSearch& s_;
    SharedSearchState& shared_;
    std::vector<char> state_;
    std::vector<int> in_;
    std::vector<int> out_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    long long current_ = 0;
    TaskResult local_;
  };

  std::size_t ground_;
  std::vector<std::vector<int>> copies_;
  std::vector<std::vector<int>> by_element_;
};

void add_copy(std::set<std::vector<int>>& copies, std::vector<int> edge_ids, std::size_t cap) {
  std::sort(edge_ids.begin(), edge_ids.end());
  copies.insert(std::move(edge_ids));
  if (copies.size() > cap) throw CapExceeded("forbidden copies", static_cast<std::int64_t>(cap),
                                             static_cast<std::int64_t>(copies.size()));
}

}  // namespace

CubeExtremalResult ex_cube(int n, const AbstractGraph& h, const ExtremalOptions& options) {
  if (n < 1) throw InvalidArgument("ex_cube needs n >= 1");
  const int cap = options.exact_mode() ? options.max_exact_dimension : options.max_budget_dimension;
  if (n > cap) throw CapExceeded(options.exact_mode() ? "exact-mode dimension" : "budget-mode dimension", cap, n);
  const CubeSubgraph cube = full_cube(n);
  const std::vector<CubeEdge> ground = cube.edges();
  if (ground.size() > options.max_ground)
    throw CapExceeded("ground set", static_cast<std::int64_t>(options.max_ground),
                      static_cast<std::int64_t>(ground.size()));

  std::set<std::vector<int>> copies;
  const AbstractGraph core = h.without_isolated();
  const bool fits = static_cast<std::uint64_t>(h.vertex_count()) <= (std::uint64_t{1} << n);
  if (core.edge_count() > 0 && fits) {
    const CubeGraphView view = to_abstract(cube);
    auto edge_id = [&](int a, int b) {
      const CubeEdge e = view.labels[a].level() < view.labels[b].level()
                             ? edge_between(view.labels[a], view.labels[b])
                             : edge_between(view.labels[b], view.labels[a]);
      return static_cast<int>(std::lower_bound(ground.begin(), ground.end(), e, CanonicalLess{}) - ground.begin());
    };
    for_each_subgraph(core, view.graph, [&](const std::vector<int>& map) {
      std::vector<int> ids;
      ids.reserve(core.edge_count());
      for (const auto& [u, v] : core.edges()) ids.push_back(edge_id(map[u], map[v]));
      add_copy(copies, std::move(ids), options.max_copies);
      return true;
    });
  }

  CopyFreeSearch search(ground.size(), {copies.begin(), copies.end()});
  auto outcome = search.run(options);
  std::vector<CubeEdge> chosen;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (outcome.chosen[i]) chosen.push_back(ground[i]);

  CubeExtremalResult result;
  result.value = static_cast<std::uint64_t>(outcome.value);
  result.witness = CubeSubgraph(n, std::move(chosen));
  result.status = outcome.complete ? ExtremalStatus::exact : ExtremalStatus::lower_bound;
  result.nodes = outcome.nodes;
  result.copies = copies.size();
  if (result.witness.size() != result.value) throw Error("internal: witness size differs from value");
  if (core.edge_count() > 0 && fits) {
    SubgraphSearchOptions so;
    so.max_pattern_vertices = std::max(h.vertex_count(), 1);
    if (find_abstract_copy(result.witness, h, so)) throw Error("internal: ex_cube witness contains H");
  }
  return result;
}

HypergraphExtremalResult ex_hypergraph(int m, const KUniformHypergraph& pattern, const ExtremalOptions& options) {
  const int k = pattern.arity();
  if (m < 0 || m > kMaxPositions) throw InvalidArgument("ex_hypergraph: m out of range");
  if (options.exact_mode()) {
    const int cap = k == 1 ? kMaxPositions
                    : k == 2 ? options.max_exact_vertices_k2
                    : k == 3 ? options.max_exact_vertices_k3
                             : k + 3;
    if (m > cap) throw CapExceeded("exact-mode hypergraph vertices", cap, m);
  }
  const KUniformHypergraph complete = KUniformHypergraph::complete(m, k);
  const auto& ground = complete.edges();
  if (ground.size() > options.max_ground)
    throw CapExceeded("ground set", static_cast<std::int64_t>(options.max_ground),
                      static_cast<std::int64_t>(ground.size()));

  std::set<std::vector<int>> copies;
  const bool forbids = pattern.edge_count() > 0 && pattern.vertex_count() <= m;
  if (forbids) {
    HypergraphEmbedOptions eo;
    eo.max_pattern_vertices = kMaxPositions;
    for_each_hypergraph_embedding(
        pattern, complete,
        [&](const std::vector<int>& g) {
          std::vector<int> ids;
          for (PositionSet e : pattern.edges()) {
            const PositionSet image = map_set(e, g);
            ids.push_back(static_cast<int>(std::lower_bound(ground.begin(), ground.end(), image, set_less) -
                                           ground.begin()));
          }
          add_copy(copies, std::move(ids), options.max_copies);
          return true;
        },
        eo);
  }

  CopyFreeSearch search(ground.size(), {copies.begin(), copies.end()});
  auto outcome = search.run(options);
  std::vector<PositionSet> chosen;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (outcome.chosen[i]) chosen.push_back(ground[i]);

  HypergraphExtremalResult result;
  result.value = static_cast<std::uint64_t>(outcome.value);
  result.witness = KUniformHypergraph(m, k, std::move(chosen));
  result.status = outcome.complete ? ExtremalStatus::exact : ExtremalStatus::lower_bound;
  result.nodes = outcome.nodes;
  result.copies = copies.size();
  if (result.witness.edge_count() != result.value) throw Error("internal: witness size differs from value");
  if (forbids) {
    HypergraphEmbedOptions eo;
    eo.max_pattern_vertices = kMaxPositions;
    if (embed_hypergraph(pattern, result.witness, eo)) throw Error("internal: ex_hypergraph witness contains pattern");
  }
  return result;
}

CorollaryExponent corollary_exponent(std::vector<int> sizes) {
  if (sizes.empty()) throw InvalidArgument("corollary_exponent needs at least one partite size");
  for (int s : sizes)
    if (s < 1) throw InvalidArgument("partite sizes must be >= 1");
  std::sort(sizes.begin(), sizes.end());
  std::int64_t product = 1;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) product *= sizes[i];
  CorollaryExponent out;
  out.sorted_sizes = sizes;
  out.delta = Rational(1, product);
  out.exponent = Rational(1) - out.delta / static_cast<std::int64_t>(sizes.size());
  return out;
}

CorollaryExponent corollary_exponent(const Representation& r) {
  if (!verify_representation(r).pass) throw InvalidArgument("corollary_exponent needs a verified representation");
  return corollary_exponent(partite_sizes(r));
}

ErdosReport erdos_bound_check(const std::vector<int>& sizes, int m_min, int m_max, const ExtremalOptions& options) {
  ErdosReport report;
  const CorollaryExponent ce = corollary_exponent(sizes);
  report.k = static_cast<int>(sizes.size());
  report.sizes = sizes;
  report.delta = ce.delta;
  const KUniformHypergraph pattern = KUniformHypergraph::complete_partite(sizes);
  const double power = report.k - boost::rational_cast<double>(report.delta);
  for (int m = m_min; m <= m_max; ++m) {
    const auto ex = ex_hypergraph(m, pattern, options);
    ErdosRow row;
    row.m = m;
    row.value = ex.value;
    row.status = ex.status;
    row.scale = std::pow(static_cast<double>(m), power);
    row.ratio = row.scale == 0.0 ? 0.0 : static_cast<double>(ex.value) / row.scale;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cuberep
