#pragma once

#include <matchlab/rational.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace matchlab {

// r-regular bipartite graph on n + n vertices, stored as a biadjacency
// matrix with one column bitmask per left vertex (n <= 31).
class BipartiteGraph {
public:
  BipartiteGraph(long n, long r, std::vector<std::uint32_t> row_masks);

  // n lines of n characters in {0,1}. Throws std::invalid_argument with
  // line/column diagnostics on malformed or non-regular input.
  static BipartiteGraph parse_text(const std::string& contents);
  // {"n": int, "adjacency": [[col, ...], ...]} (0-based columns).
  static BipartiteGraph parse_json(const std::string& contents);

  long n() const { return n_; }
  long r() const { return r_; }
  long v() const { return 2 * n_; }
  bool edge(long row, long col) const { return (rows_[row] >> col) & 1u; }
  const std::vector<std::uint32_t>& row_masks() const { return rows_; }

  std::string to_text() const;

private:
  long n_;
  long r_;
  std::vector<std::uint32_t> rows_;
};

// Exact matching counts m_0..m_n (m_i = number of i-matchings), by dynamic
// programming over used-column masks. Practical up to n ~ 20.
std::vector<Int> matching_vector(const BipartiteGraph& g);

// Independent subset-recursion oracle, restricted to |E| <= 20.
std::vector<Int> matching_vector_brute(const BipartiteGraph& g);

// m_0..m_{t_max} only, by row-subset enumeration; cheap for small t_max on
// larger graphs than the full DP handles.
std::vector<Int> partial_matching_counts(const BipartiteGraph& g, long t_max);

// Matchings of the complete graph on v vertices: v!/((v-2i)! i! 2^i),
// zero when 2i > v.
Int complete_graph_matchings(long v, long i);

// The exact sign data behind d(i) = ln(m_i/r^i) - ln(mbar_i/(v-1)^i):
// A_i = m_i (v-1)^i / (mbar_i r^i), d(i) = ln A_i. Table is truncated at the
// last index with m_i > 0 (regular bipartite graphs keep all of 0..n).
struct DTable {
  long n = 0, v = 0, r = 0;
  std::vector<Int> m;
  long last_index = 0;            // largest i with m_i > 0
  std::vector<Rational> a_ratio;  // A_0..A_last
  std::vector<double> d;          // display only; verdicts never use these

  bool meaningful(long k, long i) const {
    return k >= 0 && i >= 0 && i + k <= last_index;
  }
  // Exact sign of Delta^k d(i) via big-integer cross multiplication.
  int delta_sign(long k, long i) const;
};
DTable d_table(const BipartiteGraph& g);

struct PositivityVerdict {
  bool satisfies = true;
  long k = -1, i = -1;  // first violating cell in (k, i) lexicographic order
};
PositivityVerdict positivity_check(const BipartiteGraph& g);
PositivityVerdict positivity_check(const DTable& t);

// All n x n 0/1 matrices with row and column sums r, by row-wise
// backtracking in deterministic lexicographic order. visit returns false to
// stop early. Returns number visited.
std::uint64_t enumerate_regular_bipartite(
    long n, long r, const std::function<bool(const BipartiteGraph&)>& visit);

// Uniform sample over simple labeled r-regular bipartite graphs:
// configuration-model pairing with whole-sample rejection of multi-edges.
BipartiteGraph sample_regular_bipartite(long n, long r, std::uint64_t seed);

struct WeakPositivityStats {
  long n = 0, r = 0, i = 0, k = 0;
  long samples = 0;
  long nonneg_count = 0;
  Rational alpha_hat;               // sample mean of alpha0 = e^x - e^y
  Rational beta_hat;                // sample variance
  std::optional<Rational> bound;    // beta/alpha^2 when alpha_hat > 0
  std::uint64_t seed = 0;
};

// Samples graphs (per-sample RNG stream: independent of worker layout),
// counts Delta^k d(i) >= 0, and accumulates the exact per-graph
// alpha0 statistic from the parity-class products.
WeakPositivityStats weak_positivity_stats(long n, long r, long i, long k,
                                          long samples, std::uint64_t seed);

}  // namespace matchlab
