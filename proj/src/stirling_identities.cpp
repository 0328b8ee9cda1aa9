#include <matchlab/stirling_identities.hpp>

#include <matchlab/combinatorics.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace matchlab {

namespace {

void require_distinct(const std::vector<Rational>& c) {
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t k = i + 1; k < c.size(); ++k)
      if (c[i] == c[k])
        throw std::invalid_argument("phi_sum: values must be pairwise distinct");
}

// Evaluation summed over weight vectors: given block sums t_1..t_m, the
// weight-w part is (-1)^m (1/m) [w] prod_i (sum_{wi} P_{wi}(t_i) x^wi).
Rational weight_sum(const std::vector<Rational>& block_sums, long w) {
  std::vector<Rational> acc(w + 1);
  acc[0] = Rational(1);
  for (const Rational& t : block_sums) {
    std::vector<Rational> factor(w + 1);
    for (long wi = 0; wi <= w; ++wi) factor[wi] = pw_polynomial(wi).eval(t);
    std::vector<Rational> next(w + 1);
    for (long a = 0; a <= w; ++a) {
      if (acc[a].is_zero()) continue;
      for (long b = 0; a + b <= w; ++b) next[a + b] += acc[a] * factor[b];
    }
    acc = std::move(next);
  }
  long m = static_cast<long>(block_sums.size());
  Rational sign((m % 2 == 0) ? 1 : -1);
  return sign * Rational(1, m) * acc[w];
}

// All set partitions of {0..g-1}, canonical order (block of the smallest
// unassigned element first).
void for_each_partition(long g,
                        const std::function<void(const std::vector<std::vector<long>>&)>& fn) {
  std::vector<std::vector<long>> blocks;
  std::function<void(long)> rec = [&](long e) {
    if (e == g) {
      fn(blocks);
      return;
    }
    // index-based: recursion grows the block vector
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      blocks[bi].push_back(e);
      rec(e + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({e});
    rec(e + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace

Rational phi_sum(long g, long w, const std::vector<Rational>& c) {
  if (g < 2) throw std::invalid_argument("phi_sum: g >= 2");
  if (w < 0) throw std::invalid_argument("phi_sum: w >= 0");
  if (static_cast<long>(c.size()) != g)
    throw std::invalid_argument("phi_sum: need exactly g values");
  require_distinct(c);

  // Literal ordered enumeration: pick the first block as any non-empty
  // subset, recurse on the remainder.
  Rational total;
  std::vector<Rational> sums;
  std::function<void(std::vector<long>)> rec = [&](std::vector<long> rest) {
    if (rest.empty()) {
      total += weight_sum(sums, w);
      return;
    }
    long k = static_cast<long>(rest.size());
    // Non-empty subsets of `rest` by bitmask.
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      Rational t;
      std::vector<long> remain;
      for (long b = 0; b < k; ++b) {
        if (mask & (1ul << b))
          t += c[rest[b]];
        else
          remain.push_back(rest[b]);
      }
      sums.push_back(t);
      rec(std::move(remain));
      sums.pop_back();
    }
  };
  std::vector<long> all(g);
  std::iota(all.begin(), all.end(), 0);
  rec(std::move(all));
  return total;
}

Rational phi_sum_via_unordered(long g, long w, const std::vector<Rational>& c) {
  if (g < 2) throw std::invalid_argument("phi_sum: g >= 2");
  require_distinct(c);
  Rational total;
  for_each_partition(g, [&](const std::vector<std::vector<long>>& blocks) {
    std::vector<Rational> sums;
    sums.reserve(blocks.size());
    for (const auto& b : blocks) {
      Rational t;
      for (long e : b) t += c[e];
      sums.push_back(t);
    }
    total += weight_sum(sums, w) * Rational(factorial(static_cast<long>(blocks.size())));
  });
  return total;
}

namespace {

// Weight generating sequence of Sym(a): [P_0(a), P_1(a), ..., P_{a-1}(a)].
std::vector<Int> weight_profile(long a) {
  std::vector<Int> out(a);
  for (long w = 0; w < a; ++w) out[w] = stirling_first_unsigned(a, a - w);
  return out;
}

}  // namespace

Rational permutation_identity_lhs(const std::vector<long>& sizes, long w) {
  long g = static_cast<long>(sizes.size());
  if (g < 1) throw std::invalid_argument("permutation_identity_lhs: g >= 1");
  for (long a : sizes)
    if (a < 1) throw std::invalid_argument("permutation_identity_lhs: sizes >= 1");

  Rational total;
  for_each_partition(g, [&](const std::vector<std::vector<long>>& parts) {
    long r = static_cast<long>(parts.size());
    // P_w over the product group with per-part sizes |C_{I_t}|.
    std::vector<Int> conv{Int(1)};
    for (const auto& part : parts) {
      long a = 0;
      for (long b : part) a += sizes[b];
      std::vector<Int> profile = weight_profile(a);
      std::vector<Int> next(w + 1, Int(0));
      for (size_t x = 0; x < conv.size(); ++x) {
        if (conv[x] == 0) continue;
        for (size_t y = 0; y < profile.size() && x + y <= static_cast<size_t>(w); ++y)
          next[x + y] += conv[x] * profile[y];
      }
      conv = std::move(next);
    }
    Int pw = (static_cast<long>(conv.size()) > w) ? conv[w] : Int(0);
    Rational term = Rational(factorial(r - 1) * pw);
    total += (r % 2 == 1) ? term : -term;
  });
  return total;
}

long BlockPermutation::weight() const {
  long n = static_cast<long>(image.size());
  std::vector<bool> seen(n, false);
  long cycles = 0;
  for (long s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (long t = s; !seen[t]; t = image[t]) seen[t] = true;
  }
  return n - cycles;
}

long finest_admitting_block_count(const BlockPermutation& sigma) {
  // Union the block of e with the block of sigma(e); components of the
  // result form the finest admitting partition.
  std::vector<long> parent(sigma.g);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t e = 0; e < sigma.image.size(); ++e) {
    long a = find(sigma.block_of[e]);
    long b = find(sigma.block_of[sigma.image[e]]);
    if (a != b) parent[a] = b;
  }
  long m = 0;
  for (long b = 0; b < sigma.g; ++b)
    if (find(b) == b) ++m;
  return m;
}

Int admitting_partition_count(const BlockPermutation& sigma, long r) {
  return stirling_second(finest_admitting_block_count(sigma), r);
}

Int admitting_partition_count_enumerated(const BlockPermutation& sigma, long r) {
  Int count = 0;
  for_each_partition(sigma.g, [&](const std::vector<std::vector<long>>& parts) {
    if (static_cast<long>(parts.size()) != r) return;
    // part index per block
    std::vector<long> part_of(sigma.g, -1);
    for (size_t p = 0; p < parts.size(); ++p)
      for (long b : parts[p]) part_of[b] = static_cast<long>(p);
    for (size_t e = 0; e < sigma.image.size(); ++e)
      if (part_of[sigma.block_of[e]] != part_of[sigma.block_of[sigma.image[e]]])
        return;
    ++count;
  });
  return count;
}

Rational permutation_identity_brute(const std::vector<long>& sizes, long w) {
  long total_size = 0;
  for (long a : sizes) total_size += a;
  if (total_size > 9)
    throw std::invalid_argument("permutation_identity_brute: ground set too large");

  BlockPermutation sigma;
  sigma.g = static_cast<long>(sizes.size());
  sigma.block_of.resize(total_size);
  long pos = 0;
  for (size_t b = 0; b < sizes.size(); ++b)
    for (long t = 0; t < sizes[b]; ++t) sigma.block_of[pos++] = static_cast<long>(b);

  std::vector<long> perm(total_size);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    sigma.image = perm;
    if (sigma.weight() != w) continue;
    long m = finest_admitting_block_count(sigma);
    // Below weight g-1 a permutation can never tie all blocks together.
    if (w <= sigma.g - 2 && m <= 1)
      throw ConsistencyError(
          "permutation_identity_brute: single-block finest partition at weight " +
          std::to_string(w));
    for (long r = 1; r <= sigma.g; ++r) {
      Rational term = Rational(factorial(r - 1) * stirling_second(m, r));
      total += (r % 2 == 1) ? term : -term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational alternating_stirling2(long m) {
  if (m < 1) throw std::invalid_argument("alternating_stirling2: m >= 1");
  Rational total;
  for (long r = 1; r <= m; ++r) {
    Rational term = Rational(factorial(r - 1) * stirling_second(m, r));
    total += (r % 2 == 1) ? term : -term;
  }
  return total;
}

}  // namespace matchlab
