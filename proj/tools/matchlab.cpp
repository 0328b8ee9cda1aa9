#include <matchlab/bipartite.hpp>
#include <matchlab/report.hpp>
#include <matchlab/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace matchlab;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct VerifyArgs {
  std::string suite = "all";
  std::vector<long> rs;
  long h_max = -1, k_max = -1, i_max = -1, j_max = -1;
  bool long_mode = false;
  std::uint64_t seed = 12345;
  int threads = 0;
  std::string out;
  std::string format = "json";
  bool no_timestamp = false;
};

int run_verify(const VerifyArgs& a) {
  suites::Options opts;
  if (!a.rs.empty()) opts.rs = a.rs;
  if (a.h_max >= 0) opts.h_max = a.h_max;
  if (a.k_max >= 0) opts.k_max = a.k_max;
  if (a.i_max >= 0) opts.i_max = a.i_max;
  if (a.j_max >= 0) opts.j_max = a.j_max;
  opts.long_mode = a.long_mode;
  opts.seed = a.seed;
  opts.threads = a.threads;

  std::vector<Report> reports = suites::run(a.suite, opts);
  std::string text = a.format == "csv" ? to_csv_string(reports)
                                       : to_json_string(reports, !a.no_timestamp);
  int io = write_output(text, a.out);
  if (io != 0) return io;
  bool pass = true;
  std::size_t checks = 0;
  for (const auto& r : reports) {
    pass = pass && r.all_pass();
    checks += r.checks.size();
  }
  std::cerr << (pass ? "PASS" : "FAIL") << ": " << checks << " checks in "
            << reports.size() << " suite(s)\n";
  return pass ? 0 : 1;
}

BipartiteGraph load_graph(const std::string& path) {
  std::string contents = read_file(path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
    return BipartiteGraph::parse_json(contents);
  return BipartiteGraph::parse_text(contents);
}

std::string stats_csv(const WeakPositivityStats& st) {
  std::ostringstream out;
  out << "n,r,i,k,samples,nonneg_count,alpha_hat,beta_hat,bound,"
         "alpha_hat_dec,beta_hat_dec,bound_dec,seed,sampler_version\n";
  out << st.n << "," << st.r << "," << st.i << "," << st.k << "," << st.samples
      << "," << st.nonneg_count << "," << st.alpha_hat.str() << ","
      << st.beta_hat.str() << "," << (st.bound ? st.bound->str() : "n/a") << ","
      << st.alpha_hat.to_double() << "," << st.beta_hat.to_double() << ","
      << (st.bound ? std::to_string(st.bound->to_double()) : "n/a") << ","
      << st.seed << ",config-reject-1\n";
  return out.str();
}

std::string stats_json(const WeakPositivityStats& st) {
  std::ostringstream out;
  out << "{\n"
      << "  \"n\": " << st.n << ",\n  \"r\": " << st.r << ",\n  \"i\": " << st.i
      << ",\n  \"k\": " << st.k << ",\n  \"samples\": " << st.samples
      << ",\n  \"nonneg_count\": " << st.nonneg_count << ",\n  \"alpha_hat\": \""
      << st.alpha_hat.str() << "\",\n  \"beta_hat\": \"" << st.beta_hat.str()
      << "\",\n  \"bound\": \"" << (st.bound ? st.bound->str() : "n/a")
      << "\",\n  \"alpha_hat_dec\": " << st.alpha_hat.to_double()
      << ",\n  \"beta_hat_dec\": " << st.beta_hat.to_double()
      << ",\n  \"seed\": " << st.seed
      << ",\n  \"sampler_version\": \"config-reject-1\"\n}";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchlab: exact verification workbench for matching series "
               "and bipartite graph positivity"};
  app.require_subcommand(1);

  // ---- verify ----
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", va.suite, "one of: pernici, second-identity, alpha, "
                                        "stirling, permutation, awesome, all")
      ->check(CLI::IsMember(matchlab::suites::suite_names()));
  verify->add_option("--r", va.rs, "degrees r to test (repeatable)");
  verify->add_option("--hmax", va.h_max, "max 1/n order for the log identities");
  verify->add_option("--kmax", va.k_max, "max finite-difference order");
  verify->add_option("--imax", va.i_max, "max matching index");
  verify->add_option("--jmax", va.j_max, "max series index");
  verify->add_flag("--long", va.long_mode, "widen toward the published ranges");
  verify->add_option("--seed", va.seed, "seed for randomized draws");
  verify->add_option("--threads", va.threads, "worker threads (0 = hardware)");
  verify->add_option("--out", va.out, "write the report to a file");
  verify->add_option("--format", va.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--no-timestamp", va.no_timestamp,
                   "omit timestamp and wall time (byte-stable reports)");

  // ---- graph ----
  auto* graph = app.add_subcommand("graph", "concrete graph computations");
  graph->require_subcommand(1);

  std::string check_file;
  std::string graph_format = "text";
  auto* check = graph->add_subcommand("check", "matching vector, d table and "
                                               "positivity verdict for one graph");
  check->add_option("file", check_file, "biadjacency file (text or .json)")
      ->required();

  long en_n = 3, en_r = 2;
  bool en_long = false;
  auto* enumerate = graph->add_subcommand("enumerate",
                                          "exhaustive positivity scan over all "
                                          "labeled r-regular biadjacency matrices");
  enumerate->add_option("--n", en_n, "side size")->required();
  enumerate->add_option("--r", en_r, "degree")->required();
  enumerate->add_flag("--long", en_long, "allow the slow sizes (r=3 needs this "
                                         "beyond n=6)");

  long sa_n = 8, sa_r = 3, sa_count = 1;
  std::uint64_t sa_seed = 1;
  auto* sample = graph->add_subcommand("sample", "sample uniform r-regular "
                                                 "bipartite graphs");
  sample->add_option("--n", sa_n, "side size")->required();
  sample->add_option("--r", sa_r, "degree")->required();
  sample->add_option("--seed", sa_seed, "seed");
  sample->add_option("--count", sa_count, "number of graphs to print");

  long st_n = 12, st_r = 3, st_i = 2, st_k = 1, st_samples = 100;
  std::uint64_t st_seed = 7;
  std::string st_out, st_format = "csv";
  auto* stats = graph->add_subcommand("stats", "sampled weak-positivity and "
                                               "second-moment statistics");
  stats->add_option("--n", st_n)->required();
  stats->add_option("--r", st_r)->required();
  stats->add_option("--i", st_i)->required();
  stats->add_option("--k", st_k)->required();
  stats->add_option("--samples", st_samples);
  stats->add_option("--seed", st_seed);
  stats->add_option("--out", st_out);
  stats->add_option("--format", st_format)->check(CLI::IsMember({"csv", "json"}));

  long hu_n = 7, hu_r = 3, hu_samples = 1000;
  std::uint64_t hu_seed = 7;
  auto* hunt = graph->add_subcommand("hunt", "sampled search for positivity "
                                             "violations");
  hunt->add_option("--n", hu_n)->required();
  hunt->add_option("--r", hu_r)->required();
  hunt->add_option("--samples", hu_samples);
  hunt->add_option("--seed", hu_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(va);

    if (*check) {
      BipartiteGraph g = load_graph(check_file);
      DTable t = d_table(g);
      PositivityVerdict v = positivity_check(t);
      std::cout << "n=" << g.n() << " r=" << g.r() << " v=" << g.v() << "\n";
      std::cout << "m = [";
      for (size_t i = 0; i < t.m.size(); ++i)
        std::cout << (i ? ", " : "") << t.m[i].get_str();
      std::cout << "]\n";
      if (v.satisfies) {
        std::cout << "satisfies graph positivity\n";
        return 0;
      }
      std::cout << "violates graph positivity at Delta^" << v.k << " d(" << v.i
                << ")\n";
      return 1;
    }

    if (*enumerate) {
      if (en_r >= 3 && en_n > 6 && !en_long) {
        std::cerr << "error: n > 6 with r >= 3 requires --long\n";
        return 2;
      }
      std::uint64_t violations = 0, total = 0;
      enumerate_regular_bipartite(en_n, en_r, [&](const BipartiteGraph& g) {
        ++total;
        if (!positivity_check(g).satisfies) ++violations;
        return true;
      });
      std::cout << "graphs=" << total << " violations=" << violations << "\n";
      return violations == 0 ? 0 : 1;
    }

    if (*sample) {
      for (long c = 0; c < sa_count; ++c) {
        BipartiteGraph g = sample_regular_bipartite(sa_n, sa_r, sa_seed + c);
        std::cout << g.to_text();
        if (c + 1 < sa_count) std::cout << "\n";
      }
      return 0;
    }

    if (*stats) {
      WeakPositivityStats st =
          weak_positivity_stats(st_n, st_r, st_i, st_k, st_samples, st_seed);
      std::string text = st_format == "json" ? stats_json(st) : stats_csv(st);
      return write_output(text, st_out);
    }

    if (*hunt) {
      for (long s = 0; s < hu_samples; ++s) {
        BipartiteGraph g = sample_regular_bipartite(hu_n, hu_r, hu_seed + s);
        PositivityVerdict v = positivity_check(g);
        if (!v.satisfies) {
          std::cout << "violation found at sample " << s << " (Delta^" << v.k
                    << " d(" << v.i << ")):\n"
                    << g.to_text();
          return 0;
        }
      }
      std::cout << "no violation in " << hu_samples << " samples\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
