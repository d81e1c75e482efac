// Compares the OpenMP kernels against the serial brute-force reference on
// the standard desk-scale workloads.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "enriq/generatrix.hpp"
#include "enriq/isometry.hpp"
#include "enriq/oracle.hpp"
#include "enriq/roots.hpp"

using namespace enriq;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds(t0, std::chrono::steady_clock::now());
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif

  {
    IntegerLattice e8 = construct_standard("twist(E8,-1)");
    std::size_t a = 0, b = 0;
    double fp = timed([&] { a = enumerate_norm_vectors(e8, Int(-2)).size(); });
    double box = timed([&] { b = oracle::box_roots(e8, Int(-2)).size(); });
    std::printf("E8(-1) roots: kernel %zu in %.3fs | reference %zu in %.3fs\n", a, fp, b, box);
  }
  {
    IntegerLattice d4 = construct_standard("twist(D4,-1)");
    std::size_t a = 0, b = 0;
    double fast = timed([&] { a = isometry_group(d4).generators.size(); });
    double slow = timed([&] { b = oracle::group_expand(d4).size(); });
    std::printf("O(D4(-1)): kernel %zu in %.3fs | reference %zu in %.3fs\n", a, fast, b, slow);
  }
  {
    auto v = nonneutral_form(3, 4);
    std::size_t a = 0;
    oracle::CensusCounts c;
    double fast =
        timed([&] { a = enumerate_generatrices(v, 2, GenFilter::Characteristic).size(); });
    double slow = timed([&] { c = oracle::gen_census(v, 2); });
    std::printf("sigma=2 p=3 m=2 census: kernel %zu in %.3fs | reference %llu in %.3fs\n", a, fast,
                c.characteristic, slow);
  }
  return 0;
}
