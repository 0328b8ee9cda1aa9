#pragma once

#include <matchlab/report.hpp>

#include <cstdint>
#include <vector>

namespace matchlab::suites {

// Parameter envelope. The defaults keep `verify all` comfortably inside a
// few minutes; long_mode widens toward the full published ranges.
struct Options {
  std::vector<long> rs{2, 3, 4};
  long h_max = 5;
  long k_max = 5;
  long i_max = 12;
  long j_max = 25;
  long g_max = 5;
  long xx_smax = 6;
  bool long_mode = false;
  std::uint64_t seed = 12345;
  int threads = 0;  // 0 = hardware concurrency

  Options widened_for_long_mode() const;
};

Report pernici(const Options& o);
Report second_identity(const Options& o);
Report alpha(const Options& o);
Report stirling(const Options& o);
Report permutation(const Options& o);
Report awesome(const Options& o);

// Known suite names, "all" included.
const std::vector<std::string>& suite_names();
std::vector<Report> run(const std::string& suite, const Options& o);

}  // namespace matchlab::suites
