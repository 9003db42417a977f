#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pqw/families.hpp"
#include "pqw/pi1.hpp"
#include "pqw/product_quotient.hpp"
#include "pqw/schreier.hpp"

using namespace pqw;

// The parallel kernels must be byte-identical to their serial references,
// independent of the thread count.

TEST_CASE("census: serial reference equals the parallel kernel") {
  for (int n = 2; n <= 4; ++n) {
    ProductQuotientSpec spec = x_family(n);
    Census serial = singular_census(spec, {false, 10'000'000});
    Census parallel = singular_census(spec, {true, 10'000'000});
    CHECK(serial == parallel);
  }
  ProductQuotientSpec y = y_family(3);
  CHECK(singular_census(y, {false, 10'000'000}) == singular_census(y, {true, 10'000'000}));
}

TEST_CASE("schreier relators: serial reference equals the parallel kernel") {
  for (int n = 2; n <= 3; ++n) {
    ProductQuotientSpec spec = x_family(n);
    FiberProduct fp = build_fiber_product(spec);
    SubgroupPresentation serial = reidemeister_schreier(fp.ambient, fp.table, {false, 0, 1 << 12});
    SubgroupPresentation parallel = reidemeister_schreier(fp.ambient, fp.table, {true, 0, 1 << 12});
    CHECK(serial.pres.ngens == parallel.pres.ngens);
    CHECK(serial.pres.relators == parallel.pres.relators);
  }
}

TEST_CASE("fix generators: serial reference equals the parallel kernel") {
  for (char fam : {'X', 'Y'}) {
    ProductQuotientSpec spec = fam == 'X' ? x_family(3) : y_family(3);
    FiberProduct fp = build_fiber_product(spec);
    Pi1Options ser, par;
    ser.parallel = false;
    std::vector<FixGenerator> a = enumerate_fix_generators(spec, fp, ser);
    std::vector<FixGenerator> b = enumerate_fix_generators(spec, fp, par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].ambient_word == b[i].ambient_word);
      CHECK(a[i].rewritten == b[i].rewritten);
      CHECK(a[i].common_value == b[i].common_value);
    }
  }
}

#ifdef _OPENMP
TEST_CASE("thread count does not change the output") {
  ProductQuotientSpec spec = x_family(3);
  int before = omp_get_max_threads();
  omp_set_num_threads(1);
  Census one = singular_census(spec);
  Pi1Result pi_one = armstrong_pi1(spec);
  omp_set_num_threads(before);
  Census many = singular_census(spec);
  Pi1Result pi_many = armstrong_pi1(spec);
  CHECK(one == many);
  CHECK(pi_one.order == pi_many.order);
  CHECK(pi_one.abelian == pi_many.abelian);
  CHECK(pi_one.presentation.relators == pi_many.presentation.relators);
}
#endif
