// Times the sharded kernels against their serial reference implementations
// and double-checks that both produce identical results.  Output is CSV:
// kernel,threads,seconds,speedup.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "invol/closed_forms.hpp"
#include "invol/geninv.hpp"
#include "invol/permutation.hpp"
#include "invol/series.hpp"
#include "invol/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now_s() { return omp_get_wtime(); }
#else
#include <chrono>
static double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
#endif

namespace {

int g_threads = 2;

template <typename Fn>
double time_once(Fn&& fn) {
  const double start = now_s();
  fn();
  return now_s() - start;
}

void report(const char* kernel, double serial_s, double parallel_s, bool equal) {
  if (!equal) {
    std::fprintf(stderr, "%s: serial and parallel results DIFFER\n", kernel);
    std::exit(1);
  }
  std::printf("%s,1,%.3f,1.00\n", kernel, serial_s);
  std::printf("%s,%d,%.3f,%.2f\n", kernel, g_threads, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  g_threads = omp_get_max_threads();
#endif
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--threads" && i + 1 < argc) {
      g_threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--threads N]\n", argv[0]);
      return 2;
    }
  }
  if (g_threads < 1) g_threads = 1;
  std::printf("kernel,threads,seconds,speedup\n");

  {
    invol::StatTable serial_table, parallel_table;
    const double s = time_once(
        [&] { serial_table = invol::brute_stat_table(14, invol::StatKind::involution_f); });
    const double p = time_once([&] {
      parallel_table =
          invol::brute_stat_table_parallel(14, invol::StatKind::involution_f, g_threads);
    });
    report("involution-table-n14", s, p, serial_table == parallel_table);
  }

  {
    invol::StatTable serial_table, parallel_table;
    const double s = time_once(
        [&] { serial_table = invol::brute_stat_table(10, invol::StatKind::signed_b); });
    const double p = time_once([&] {
      parallel_table = invol::brute_stat_table_parallel(10, invol::StatKind::signed_b, g_threads);
    });
    report("signed-eulerian-table-n10", s, p, serial_table == parallel_table);
  }

  {
    invol::GenInvCensus serial_census, parallel_census;
    const double s = time_once([&] { serial_census = invol::census(10, 8); });
    const double p = time_once([&] { parallel_census = invol::census_parallel(10, 8, g_threads); });
    report("geninv-census-n10-m8", s, p, serial_census == parallel_census);
  }

  {
    std::vector<invol::CoeffMismatch> serial_out, parallel_out;
    const double s = time_once([&] { serial_out = invol::verify_gf_identity(128, 128, 1); });
    const double p = time_once([&] { parallel_out = invol::verify_gf_identity(128, 128, g_threads); });
    report("gf-identity-window-128", s, p, serial_out == parallel_out);
  }

  {
    invol::CheckReport serial_report, parallel_report;
    const double s = time_once([&] { serial_report = invol::check_zeilberger(300, 1); });
    const double p = time_once([&] { parallel_report = invol::check_zeilberger(300, g_threads); });
    report("zeilberger-n300", s, p,
           serial_report.ok() == parallel_report.ok() &&
               serial_report.points_checked == parallel_report.points_checked);
  }

  return 0;
}
