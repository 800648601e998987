#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wcd/graph.hpp"
#include "wcd/wcdim.hpp"

namespace wcd {

/// One characteristic-dependent graph found by a scan.
struct ScanRecord {
  std::string graph6;
  int order = 0;
  std::size_t mis_count = 0;
  int wcdim_generic = 0;
  std::vector<mpz_class> invariant_factors;
  std::vector<std::pair<mpz_class, int>> critical;  // (p, wcdim at p), ascending
  std::size_t source_index = 0;                     // position in the input stream
};

/// Exact totals of one scan. min_order_per_prime maps each critical prime
/// seen to the smallest-order witness (ties broken by lexicographically
/// smallest graph6 string).
struct ScanSummary {
  std::size_t graphs_scanned = 0;
  std::size_t dependent_found = 0;
  std::vector<std::size_t> malformed_lines;  // 1-based input line numbers
  std::map<mpz_class, std::pair<int, std::string>> min_order_per_prime;
  double wall_time_seconds = 0.0;
};

/// Exactly one representative per isomorphism class of simple graphs on
/// `order` vertices (1 <= order <= 8), in ascending canonical-graph6 order.
/// Counts match 1, 2, 4, 11, 34, 156, 1044, 12346 for orders 1..8.
std::vector<Graph> generate_all_graphs(int order);

using RecordSink = std::function<void(const ScanRecord&)>;

/// Profiles every input graph with a pool of `jobs` workers and emits a
/// ScanRecord for each graph with a nonempty critical-prime set. Records
/// are delivered strictly in source order regardless of scheduling, so the
/// output is byte-identical for any worker count.
ScanSummary scan_graphs(const std::vector<Graph>& graphs, int jobs, const RecordSink& sink);

/// Same over newline-delimited graph6 input. Malformed lines are counted
/// (with their line numbers) and skipped; the scan continues.
ScanSummary scan_graph6_lines(std::istream& in, int jobs, const RecordSink& sink);

/// For each requested prime, the smallest-order record having it critical
/// (ties by lexicographically smallest graph6); absent if none was seen.
std::map<mpz_class, std::pair<int, std::string>> min_order_report(
    const std::vector<ScanRecord>& records, const std::vector<mpz_class>& primes);

/// One-line JSON object {graph6, order, mis_count, wcdim_generic,
/// invariant_factors, critical, source_index}; deterministic bytes.
std::string record_to_json(const ScanRecord& r);

/// JSON object with the summary totals (wall_time_seconds varies run to
/// run; everything else is deterministic).
std::string summary_to_json(const ScanSummary& s);

}  // namespace wcd
