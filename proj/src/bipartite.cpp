#include <matchlab/bipartite.hpp>

#include <matchlab/combinatorics.hpp>

#include <json.hpp>

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace matchlab {

namespace {

long popcount(std::uint32_t x) { return std::popcount(x); }

// SplitMix64: stable across platforms, used for all sampling.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Unbiased bounded draw by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

}  // namespace

BipartiteGraph::BipartiteGraph(long n, long r, std::vector<std::uint32_t> row_masks)
    : n_(n), r_(r), rows_(std::move(row_masks)) {
  if (n < 1 || n > 31) throw std::invalid_argument("BipartiteGraph: need 1 <= n <= 31");
  if (static_cast<long>(rows_.size()) != n)
    throw std::invalid_argument("BipartiteGraph: wrong number of rows");
  std::vector<long> col_sum(n, 0);
  for (long row = 0; row < n; ++row) {
    if (rows_[row] >> n)
      throw std::invalid_argument("BipartiteGraph: row " + std::to_string(row) +
                                  " has bits beyond column " + std::to_string(n - 1));
    if (popcount(rows_[row]) != r)
      throw std::invalid_argument("BipartiteGraph: row " + std::to_string(row) +
                                  " has degree " + std::to_string(popcount(rows_[row])) +
                                  ", expected " + std::to_string(r));
    for (long col = 0; col < n; ++col)
      if ((rows_[row] >> col) & 1u) ++col_sum[col];
  }
  for (long col = 0; col < n; ++col)
    if (col_sum[col] != r)
      throw std::invalid_argument("BipartiteGraph: column " + std::to_string(col) +
                                  " has degree " + std::to_string(col_sum[col]) +
                                  ", expected " + std::to_string(r));
}

BipartiteGraph BipartiteGraph::parse_text(const std::string& contents) {
  std::vector<std::string> lines;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("graph text: empty input");
  long n = static_cast<long>(lines.size());
  std::vector<std::uint32_t> rows(n, 0);
  for (long row = 0; row < n; ++row) {
    if (static_cast<long>(lines[row].size()) != n)
      throw std::invalid_argument("graph text: line " + std::to_string(row + 1) +
                                  " has " + std::to_string(lines[row].size()) +
                                  " characters, expected " + std::to_string(n));
    for (long col = 0; col < n; ++col) {
      char ch = lines[row][col];
      if (ch == '1')
        rows[row] |= (1u << col);
      else if (ch != '0')
        throw std::invalid_argument("graph text: line " + std::to_string(row + 1) +
                                    ", column " + std::to_string(col + 1) +
                                    ": expected '0' or '1', got '" + ch + "'");
    }
  }
  long r = popcount(rows[0]);
  return BipartiteGraph(n, r, std::move(rows));
}

BipartiteGraph BipartiteGraph::parse_json(const std::string& contents) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("adjacency"))
    throw std::invalid_argument("graph json: need fields 'n' and 'adjacency'");
  long n = j["n"].get<long>();
  if (n < 1 || n > 31) throw std::invalid_argument("graph json: need 1 <= n <= 31");
  const auto& adj = j["adjacency"];
  if (!adj.is_array() || static_cast<long>(adj.size()) != n)
    throw std::invalid_argument("graph json: adjacency must list n rows");
  std::vector<std::uint32_t> rows(n, 0);
  for (long row = 0; row < n; ++row) {
    for (const auto& col_v : adj[row]) {
      long col = col_v.get<long>();
      if (col < 0 || col >= n)
        throw std::invalid_argument("graph json: row " + std::to_string(row) +
                                    " lists column " + std::to_string(col) +
                                    " out of range");
      if ((rows[row] >> col) & 1u)
        throw std::invalid_argument("graph json: row " + std::to_string(row) +
                                    " repeats column " + std::to_string(col));
      rows[row] |= (1u << col);
    }
  }
  long r = popcount(rows[0]);
  return BipartiteGraph(n, r, std::move(rows));
}

std::string BipartiteGraph::to_text() const {
  std::string out;
  for (long row = 0; row < n_; ++row) {
    for (long col = 0; col < n_; ++col) out += edge(row, col) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::vector<Int> matching_vector(const BipartiteGraph& g) {
  long n = g.n();
  if (n > 20)
    throw std::invalid_argument("matching_vector: full vector limited to n <= 20");
  // dp[mask] = ways the rows processed so far match exactly the columns in
  // mask (each used column paired with one earlier row).
  std::vector<Int> dp(std::size_t(1) << n, Int(0)), next(std::size_t(1) << n, Int(0));
  dp[0] = 1;
  for (long row = 0; row < n; ++row) {
    std::uint32_t row_mask = g.row_masks()[row];
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (dp[mask] == 0) continue;
      next[mask] += dp[mask];  // row left unmatched
      std::uint32_t free = row_mask & ~mask;
      while (free) {
        std::uint32_t bit = free & (~free + 1);
        next[mask | bit] += dp[mask];
        free ^= bit;
      }
    }
    dp.swap(next);
    std::fill(next.begin(), next.end(), Int(0));
  }
  std::vector<Int> m(n + 1, Int(0));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (dp[mask] != 0) m[popcount(mask)] += dp[mask];
  return m;
}

std::vector<Int> matching_vector_brute(const BipartiteGraph& g) {
  std::vector<std::pair<long, long>> edges;
  for (long row = 0; row < g.n(); ++row)
    for (long col = 0; col < g.n(); ++col)
      if (g.edge(row, col)) edges.emplace_back(row, col);
  if (edges.size() > 20)
    throw std::invalid_argument("matching_vector_brute: limited to |E| <= 20");
  std::vector<Int> m(g.n() + 1, Int(0));
  // Choose/skip recursion over the edge list.
  std::function<void(size_t, std::uint32_t, std::uint32_t, long)> rec =
      [&](size_t idx, std::uint32_t used_rows, std::uint32_t used_cols, long size) {
        if (idx == edges.size()) {
          ++m[size];
          return;
        }
        rec(idx + 1, used_rows, used_cols, size);
        auto [row, col] = edges[idx];
        if (((used_rows >> row) & 1u) || ((used_cols >> col) & 1u)) return;
        rec(idx + 1, used_rows | (1u << row), used_cols | (1u << col), size + 1);
      };
  rec(0, 0, 0, 0);
  return m;
}

std::vector<Int> partial_matching_counts(const BipartiteGraph& g, long t_max) {
  long n = g.n();
  if (t_max < 0 || t_max > n)
    throw std::invalid_argument("partial_matching_counts: 0 <= t_max <= n");
  if (t_max > 6)
    throw std::invalid_argument("partial_matching_counts: t_max <= 6 supported");
  std::vector<Int> m(t_max + 1, Int(0));
  m[0] = 1;
  // For each row subset of size t, count injective column systems.
  std::vector<long> subset;
  std::function<void(long, long)> pick = [&](long start, long remaining) {
    if (remaining == 0) {
      std::function<Int(size_t, std::uint32_t)> count = [&](size_t idx,
                                                            std::uint32_t used) -> Int {
        if (idx == subset.size()) return 1;
        Int total = 0;
        std::uint32_t free = g.row_masks()[subset[idx]] & ~used;
        while (free) {
          std::uint32_t bit = free & (~free + 1);
          total += count(idx + 1, used | bit);
          free ^= bit;
        }
        return total;
      };
      m[subset.size()] += count(0, 0);
      return;
    }
    for (long row = start; row + remaining <= n; ++row) {
      subset.push_back(row);
      pick(row + 1, remaining - 1);
      subset.pop_back();
    }
  };
  for (long t = 1; t <= t_max; ++t) pick(0, t);
  return m;
}

Int complete_graph_matchings(long v, long i) {
  if (v < 0 || i < 0) throw std::invalid_argument("complete_graph_matchings: negative");
  if (2 * i > v) return 0;
  Int out = factorial(v) / (factorial(v - 2 * i) * factorial(i));
  return out / (Int(1) << i);
}

DTable d_table(const BipartiteGraph& g) {
  DTable t;
  t.n = g.n();
  t.v = g.v();
  t.r = g.r();
  t.m = matching_vector(g);
  t.last_index = 0;
  for (long i = 0; i <= t.n; ++i)
    if (t.m[i] > 0) t.last_index = i;
  // Zero counts cannot reappear after the first gap for a valid table; the
  // table is truncated at the last positive index regardless.
  for (long i = 0; i <= t.last_index; ++i) {
    if (t.m[i] == 0)
      throw std::domain_error("d_table: m_" + std::to_string(i) +
                              " vanishes before the last positive index");
    Rational a = Rational(t.m[i] * int_pow(Int(t.v - 1), i),
                          complete_graph_matchings(t.v, i) * int_pow(Int(t.r), i));
    t.a_ratio.push_back(a);
    t.d.push_back(std::log(a.to_double()));
  }
  return t;
}

int DTable::delta_sign(long k, long i) const {
  if (!meaningful(k, i))
    throw std::out_of_range("DTable::delta_sign: cell not meaningful");
  // Delta^k d(i) = sum_l (-1)^(k-l) C(k,l) ln A_{i+l}; compare the product
  // with positive signs against the one with negative signs, exactly.
  Rational plus(1), minus(1);
  for (long l = 0; l <= k; ++l) {
    Rational p = a_ratio[i + l].pow(binomial(k, l).get_si());
    if ((k - l) % 2 == 0)
      plus *= p;
    else
      minus *= p;
  }
  if (plus == minus) return 0;
  return plus > minus ? 1 : -1;
}

PositivityVerdict positivity_check(const DTable& t) {
  for (long k = 0; k <= t.last_index; ++k)
    for (long i = 0; i + k <= t.last_index; ++i)
      if (t.delta_sign(k, i) < 0) return {false, k, i};
  return {};
}

PositivityVerdict positivity_check(const BipartiteGraph& g) {
  return positivity_check(d_table(g));
}

std::uint64_t enumerate_regular_bipartite(
    long n, long r, const std::function<bool(const BipartiteGraph&)>& visit) {
  if (r < 1 || r > n)
    throw std::invalid_argument("enumerate_regular_bipartite: need 1 <= r <= n");
  std::vector<std::uint32_t> rows(n, 0);
  std::vector<long> col_sum(n, 0);
  std::uint64_t count = 0;
  bool stopped = false;

  // Columns chosen for the current row, ascending; prune on column quotas.
  std::function<void(long)> fill_row = [&](long row) {
    if (stopped) return;
    if (row == n) {
      ++count;
      if (!visit(BipartiteGraph(n, r, rows))) stopped = true;
      return;
    }
    long remaining_rows = n - row;
    std::vector<long> chosen;
    std::function<void(long)> pick = [&](long start) {
      if (stopped) return;
      long need = r - static_cast<long>(chosen.size());
      if (need == 0) {
        // Feasibility: every column must still be able to reach quota r.
        for (long c = 0; c < n; ++c)
          if (r - col_sum[c] > remaining_rows - 1) return;
        fill_row(row + 1);
        return;
      }
      for (long c = start; c + need <= n; ++c) {
        if (col_sum[c] >= r) continue;
        chosen.push_back(c);
        col_sum[c]++;
        rows[row] |= (1u << c);
        pick(c + 1);
        rows[row] &= ~(1u << c);
        col_sum[c]--;
        chosen.pop_back();
        if (stopped) return;
      }
    };
    pick(0);
  };
  fill_row(0);
  return count;
}

BipartiteGraph sample_regular_bipartite(long n, long r, std::uint64_t seed) {
  if (r < 1 || r > n)
    throw std::invalid_argument("sample_regular_bipartite: need 1 <= r <= n");
  SplitMix64 rng(seed);
  const long stubs = n * r;
  std::vector<long> right(stubs);
  for (long t = 0; t < stubs; ++t) right[t] = t / r;  // owner of each right stub

  for (long attempt = 0; attempt < 100000; ++attempt) {
    // Fisher-Yates with our own bounded draws (portable determinism).
    for (long t = stubs - 1; t > 0; --t) {
      long s = static_cast<long>(rng.below(static_cast<std::uint64_t>(t + 1)));
      std::swap(right[t], right[s]);
    }
    std::vector<std::uint32_t> rows(n, 0);
    bool simple = true;
    for (long t = 0; t < stubs && simple; ++t) {
      long row = t / r;
      long col = right[t];
      if ((rows[row] >> col) & 1u)
        simple = false;  // multi-edge: reject the whole pairing
      else
        rows[row] |= (1u << col);
    }
    if (simple) return BipartiteGraph(n, r, std::move(rows));
  }
  throw std::runtime_error("sample_regular_bipartite: rejection cap reached");
}

WeakPositivityStats weak_positivity_stats(long n, long r, long i, long k,
                                          long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("weak_positivity_stats: samples >= 1");
  if (i + k > n)
    throw std::invalid_argument("weak_positivity_stats: need i + k <= n");
  WeakPositivityStats st;
  st.n = n;
  st.r = r;
  st.i = i;
  st.k = k;
  st.samples = samples;
  st.seed = seed;

  const long v = 2 * n;
  std::vector<Int> mbar(i + k + 1), rpow(i + k + 1), vpow(i + k + 1);
  for (long t = 0; t <= i + k; ++t) {
    mbar[t] = complete_graph_matchings(v, t);
    rpow[t] = int_pow(Int(r), t);
    vpow[t] = int_pow(Int(v - 1), t);
  }

  Rational sum, sum_sq;
  for (long s = 0; s < samples; ++s) {
    // Per-sample stream: results do not depend on any worker partitioning.
    SplitMix64 mix(seed ^ (0xa0761d6478bd642full * (s + 1)));
    BipartiteGraph g = sample_regular_bipartite(n, r, mix.next());
    std::vector<Int> m = (i + k <= 6) ? partial_matching_counts(g, i + k)
                                      : matching_vector(g);

    Rational ex(1), ey(1);
    for (long l = 0; l <= k; ++l) {
      long t = i + l;
      Rational a = Rational(m[t] * vpow[t], mbar[t] * rpow[t]);
      Rational p = a.pow(binomial(k, l).get_si());
      if (l % 2 == k % 2)
        ex *= p;
      else
        ey *= p;
    }
    bool nonneg = (k == 0) ? ex >= Rational(1) : ex >= ey;
    if (nonneg) ++st.nonneg_count;
    if (k == 0) ey = Rational(0);  // empty parity class contributes nothing
    Rational alpha0 = ex - ey;
    sum += alpha0;
    sum_sq += alpha0 * alpha0;
  }
  st.alpha_hat = sum / Rational(samples);
  st.beta_hat = sum_sq / Rational(samples) - st.alpha_hat * st.alpha_hat;
  if (st.alpha_hat > Rational(0))
    st.bound = st.beta_hat / (st.alpha_hat * st.alpha_hat);
  return st;
}

}  // namespace matchlab
