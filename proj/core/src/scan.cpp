#include "wcd/scan.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <istream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json_util.hpp"
#include "wcd/graph6.hpp"

namespace wcd {

std::vector<Graph> generate_all_graphs(int order) {
  if (order < 1 || order > 8)
    throw std::invalid_argument("built-in generation supports order <= 8; scan external streams instead");

  // Grow representatives one vertex at a time: every class on k vertices is
  // some class on k-1 vertices plus a vertex attached to a subset, so
  // augmenting every representative with every attachment set and
  // deduplicating by canonical form is exhaustive.
  std::vector<std::string> reps = {canonical_form(Graph(1))};
  for (int k = 2; k <= order; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<std::string> next;
    for (const std::string& rep : reps) {
      const Graph parent = parse_graph6(rep);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph child(k);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (std::uint64_t b = mask; b; b &= b - 1) child.add_edge(k - 1, std::countr_zero(b));
        std::string canon = canonical_form(child);
        if (seen.insert(canon).second) next.push_back(std::move(canon));
      }
    }
    reps = std::move(next);
  }
  std::sort(reps.begin(), reps.end());

  std::vector<Graph> out;
  out.reserve(reps.size());
  for (const std::string& rep : reps) out.push_back(parse_graph6(rep));
  return out;
}

namespace {

struct TaskOutcome {
  std::optional<ScanRecord> record;
  bool malformed = false;
  bool valid_graph = false;
};

TaskOutcome profile_line(const std::string& line, std::size_t index) {
  TaskOutcome out;
  Graph g(1);
  try {
    g = parse_graph6(line);
  } catch (const Graph6Error&) {
    out.malformed = true;
    return out;
  }
  out.valid_graph = true;
  WcdimProfile profile = wcdim_profile(g);
  if (profile.characteristic_dependent()) {
    ScanRecord r;
    r.graph6 = to_graph6(g);
    r.order = profile.order;
    r.mis_count = profile.mis_count;
    r.wcdim_generic = profile.wcdim_generic;
    r.invariant_factors = profile.invariant_factors.factors;
    r.critical = profile.critical;
    r.source_index = index;
    out.record = std::move(r);
  }
  return out;
}

void fold_into_summary(ScanSummary& summary, const TaskOutcome& outcome, std::size_t index,
                       const RecordSink& sink) {
  if (outcome.malformed) {
    summary.malformed_lines.push_back(index + 1);
    return;
  }
  if (outcome.valid_graph) ++summary.graphs_scanned;
  if (!outcome.record) return;
  ++summary.dependent_found;
  const ScanRecord& r = *outcome.record;
  for (const auto& [p, dim] : r.critical) {
    auto it = summary.min_order_per_prime.find(p);
    if (it == summary.min_order_per_prime.end()) {
      summary.min_order_per_prime.emplace(p, std::make_pair(r.order, r.graph6));
    } else if (r.order < it->second.first ||
               (r.order == it->second.first && r.graph6 < it->second.second)) {
      it->second = {r.order, r.graph6};
    }
  }
  if (sink) sink(r);
}

// Pulls indexed tasks, runs them on `jobs` workers, and folds outcomes into
// the summary strictly in task order, so results are identical for every
// worker count.
class OrderedPool {
 public:
  OrderedPool(int jobs, ScanSummary& summary, const RecordSink& sink)
      : jobs_(std::max(jobs, 1)), summary_(summary), sink_(sink) {
    workers_.reserve(static_cast<std::size_t>(jobs_));
    for (int i = 0; i < jobs_; ++i) workers_.emplace_back([this] { work(); });
  }

  ~OrderedPool() { finish(); }

  void submit(std::string line) {
    std::unique_lock lock(mu_);
    queue_space_.wait(lock, [this] { return queue_.size() < pending_cap(); });
    queue_.emplace_back(next_index_++, std::move(line));
    queue_filled_.notify_one();
  }

  /// Drains the queue and joins the workers; the summary passed at
  /// construction holds the folded totals afterwards.
  void finish() {
    {
      std::lock_guard lock(mu_);
      done_ = true;
    }
    queue_filled_.notify_all();
    for (std::thread& t : workers_)
      if (t.joinable()) t.join();
  }

 private:
  std::size_t pending_cap() const { return static_cast<std::size_t>(jobs_) * 64; }

  void work() {
    while (true) {
      std::pair<std::size_t, std::string> task;
      {
        std::unique_lock lock(mu_);
        queue_filled_.wait(lock, [this] { return !queue_.empty() || done_; });
        if (queue_.empty()) return;
        task = std::move(queue_.front());
        queue_.pop_front();
        queue_space_.notify_one();
      }
      TaskOutcome outcome = profile_line(task.second, task.first);
      std::lock_guard lock(emit_mu_);
      ready_.emplace(task.first, std::move(outcome));
      while (true) {
        auto it = ready_.find(next_emit_);
        if (it == ready_.end()) break;
        fold_into_summary(summary_, it->second, next_emit_, sink_);
        ready_.erase(it);
        ++next_emit_;
      }
    }
  }

  int jobs_;
  ScanSummary& summary_;
  const RecordSink& sink_;

  std::mutex mu_;
  std::condition_variable queue_filled_;
  std::condition_variable queue_space_;
  std::deque<std::pair<std::size_t, std::string>> queue_;
  std::size_t next_index_ = 0;
  bool done_ = false;

  std::mutex emit_mu_;
  std::unordered_map<std::size_t, TaskOutcome> ready_;
  std::size_t next_emit_ = 0;

  std::vector<std::thread> workers_;
};

}  // namespace

ScanSummary scan_graph6_lines(std::istream& in, int jobs, const RecordSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  ScanSummary summary;
  {
    OrderedPool pool(jobs, summary, sink);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      pool.submit(std::move(line));
    }
    pool.finish();
  }
  summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

ScanSummary scan_graphs(const std::vector<Graph>& graphs, int jobs, const RecordSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  ScanSummary summary;
  {
    OrderedPool pool(jobs, summary, sink);
    for (const Graph& g : graphs) pool.submit(to_graph6(g));
    pool.finish();
  }
  summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::map<mpz_class, std::pair<int, std::string>> min_order_report(
    const std::vector<ScanRecord>& records, const std::vector<mpz_class>& primes) {
  std::map<mpz_class, std::pair<int, std::string>> out;
  for (const ScanRecord& r : records) {
    for (const auto& [p, dim] : r.critical) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) continue;
      auto it = out.find(p);
      if (it == out.end()) {
        out.emplace(p, std::make_pair(r.order, r.graph6));
      } else if (r.order < it->second.first ||
                 (r.order == it->second.first && r.graph6 < it->second.second)) {
        it->second = {r.order, r.graph6};
      }
    }
  }
  return out;
}

std::string record_to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  j["mis_count"] = r.mis_count;
  j["wcdim_generic"] = r.wcdim_generic;
  auto factors = nlohmann::ordered_json::array();
  for (const mpz_class& d : r.invariant_factors) factors.push_back(detail::mpz_to_json(d));
  j["invariant_factors"] = std::move(factors);
  auto critical = nlohmann::ordered_json::array();
  for (const auto& [p, dim] : r.critical)
    critical.push_back({{"p", detail::mpz_to_json(p)}, {"wcdim", dim}});
  j["critical"] = std::move(critical);
  j["source_index"] = r.source_index;
  return j.dump();
}

std::string summary_to_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["graphs_scanned"] = s.graphs_scanned;
  j["dependent_found"] = s.dependent_found;
  j["malformed_lines"] = s.malformed_lines;
  auto minima = nlohmann::ordered_json::object();
  for (const auto& [p, witness] : s.min_order_per_prime)
    minima[p.get_str()] = {{"order", witness.first}, {"graph6", witness.second}};
  j["min_order_per_prime"] = std::move(minima);
  j["wall_time_seconds"] = s.wall_time_seconds;
  return j.dump();
}

}  // namespace wcd
