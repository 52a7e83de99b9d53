#include <doctest.h>

#include <cmath>

#include "lpsq/kernels.hpp"
#include "lpsq/multipliers.hpp"
#include "lpsq/orlicz.hpp"
#include "test_util.hpp"

using namespace lpsq;
using lpsq::testing::Rng;
using lpsq::testing::quad_mean;
using lpsq::testing::random_poly;

TEST_CASE("fejer: coefficients, peak value, unit L1 mass") {
  const TrigPoly k0 = fejer(0);
  REQUIRE(k0.term_count() == 1);
  CHECK(k0.amplitude(0) == cd{1, 0});

  const int32_t one = 1;
  CHECK(fejer(2).coeff(std::span<const int32_t>(&one, 1)).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  for (int n : {1, 5, 16}) {
    const TrigPoly k = fejer(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < k.term_count(); ++i) peak += k.amplitude(i).real();
    CHECK(peak == doctest::Approx(n + 1.0).epsilon(1e-12));
    // Positivity makes the L1 norm equal \hat K_n(0) = 1.
    CHECK(lp_norm(k, 1.0, 8) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("vallee_poussin: trapezoid plateau, midpoint, taper endpoints, L1 bound") {
  for (int N : {1, 2, 3, 6}) {
    const TrigPoly v = vallee_poussin(N);
    const int32_t zero = 0;
    CHECK(v.coeff(std::span<const int32_t>(&zero, 1)) == cd{1, 0});
    const int32_t edge = int32_t{1} << (N + 1);
    CHECK(v.coeff(std::span<const int32_t>(&edge, 1)) == cd{0, 0});
    const int32_t nedge = -edge;
    CHECK(v.coeff(std::span<const int32_t>(&nedge, 1)) == cd{0, 0});
    const int32_t mid = 3 * (int32_t{1} << (N - 1));
    CHECK(v.coeff(std::span<const int32_t>(&mid, 1)).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.support().max[0] == edge - 1);
  }
  for (int N = 1; N <= 10; ++N) {
    CHECK(lp_norm(vallee_poussin(N), 1.0, 4) <= 3.0);
  }
}

TEST_CASE("pichorides family: analyticity and the exact Dirichlet block identity") {
  for (int N : {1, 2, 3, 7}) {
    const TrigPoly f = pichorides_fn(N, 1);
    CHECK(is_analytic(f));
    CHECK(f.support().min[0] >= 0);
    CHECK(f.support().max[0] <= (int32_t{1} << (N + 2)));
    CHECK(delta_project(f, N + 1, 0) == dirichlet_block(N));
  }

  // Tensor member norms factor.
  const TrigPoly f2 = pichorides_fn(2, 2);
  const TrigPoly f1 = pichorides_fn(2, 1);
  CHECK(lp_norm(f2, 1.0, 4) == doctest::Approx(std::pow(lp_norm(f1, 1.0, 4), 2.0)).epsilon(1e-6));
}

TEST_CASE("dirichlet_block: Plancherel size and the closed-form modulus") {
  for (int N : {2, 4, 6}) {
    const TrigPoly d = dirichlet_block(N);
    CHECK(lp_norm(d, 2.0) == doctest::Approx(std::pow(2.0, N / 2.0)).epsilon(1e-12));

    const int res[1] = {int(1) << (N + 3)};
    const GridFunction g = synthesize(d, res);
    const int32_t M = int32_t{1} << N;
    for (int j = 1; j < res[0]; ++j) {
      const double x = static_cast<double>(j) / res[0];
      const double expect = std::abs(std::sin(std::numbers::pi * M * x) / std::sin(std::numbers::pi * x));
      CHECK(std::abs(std::abs(g.at_flat(static_cast<std::size_t>(j))) - expect) < 1e-8 * M);
    }
    CHECK(std::abs(g.at_flat(0)) == doctest::Approx(static_cast<double>(M)).epsilon(1e-12));
  }
}

TEST_CASE("dirichlet_block L1 norms grow logarithmically in the block size") {
  // v_N: quadrature values; consecutive increments settle near log(2) * 4/pi^2.
  std::vector<double> v;
  for (int N = 4; N <= 8; ++N) {
    v.push_back(lp_norm(dirichlet_block(N), 1.0, 16));
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    CHECK(v[i] > v[i - 1]);
    CHECK(v[i] - v[i - 1] > 0.2);
    CHECK(v[i] - v[i - 1] < 0.5);
  }
}

TEST_CASE("diag_embed: constants and Lp invariance") {
  const TrigPoly c = diag_embed(TrigPoly::constant(1, cd{2, 1}), 3);
  REQUIRE(c.term_count() == 1);
  CHECK(c.dim() == 3);
  CHECK(c.amplitude(0) == cd{2, 1});

  Rng rng(113);
  for (int trial = 0; trial < 5; ++trial) {
    const TrigPoly F = random_poly(rng, 1, -6, 6, 5);
    const TrigPoly g = diag_embed(F, 2);
    for (double p : {1.0, 2.0}) {
      CHECK(lp_norm(g, p, 4) == doctest::Approx(lp_norm(F, p, 4)).epsilon(1e-6));
    }
  }
}

TEST_CASE("square_function(f_N) dominates the Dirichlet block piece pointwise") {
  const int N = 4;
  const TrigPoly f = pichorides_fn(N, 1);
  const int res[1] = {256};
  const GridFunction s = square_function(f, res);
  const GridFunction block = synthesize(dirichlet_block(N), res);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.at_flat(i).real() + 1e-12 >= std::abs(block.at_flat(i)));
  }
}

TEST_CASE("orlicz growth of f_N: orlicz(f_N, r) / N^r sits in a fixed bracket") {
  for (double r : {1.0, 2.0}) {
    const double lo = r == 1.0 ? 0.5 : 0.15;
    const double hi = r == 1.0 ? 1.0 : 0.45;
    for (int N = 4; N <= 10; ++N) {
      const TrigPoly f = pichorides_fn(N, 1);
      std::vector<int> res{static_cast<int>(next_pow2(static_cast<std::size_t>(f.support_width(0)) + 1)) * 4};
      const double val = orlicz_norm(synthesize(f, res), {.r = r}) / std::pow(N, r);
      CHECK(val >= lo);
      CHECK(val <= hi);
    }
  }
}

TEST_CASE("family dispatch and closed-form frequency bounds") {
  CHECK(family_from_string("pichorides") == FamilyName::pichorides);
  CHECK(family_to_string(FamilyName::zygmund_tensor) == "zygmund_tensor");
  CHECK_THROWS_AS((void)family_from_string("nope"), std::invalid_argument);

  CHECK(make_family({FamilyName::fejer, 5, 1}) == fejer(5));
  CHECK(make_family({FamilyName::vallee_poussin, 3, 1}) == vallee_poussin(3));
  CHECK(make_family({FamilyName::pichorides, 3, 2}) == pichorides_fn(3, 2));
  CHECK(make_family({FamilyName::zygmund_tensor, 3, 2}) == pichorides_fn(3, 2));
  CHECK(make_family({FamilyName::diagonal, 3, 2}) == diag_embed(pichorides_fn(3, 1), 2));

  for (int N : {1, 3, 5}) {
    for (FamilyName name : {FamilyName::fejer, FamilyName::vallee_poussin, FamilyName::pichorides}) {
      const TrigPoly f = make_family({name, N, 1});
      int64_t measured = 0;
      for (std::size_t i = 0; i < f.term_count(); ++i) {
        measured = std::max(measured, static_cast<int64_t>(std::abs(f.exponent(i)[0])));
      }
      CHECK(measured == family_max_abs_freq(name, N));
    }
  }
}

TEST_CASE("fejer L1 mass against a direct quadrature of the closed form") {
  // |K_n(x)| = K_n(x) >= 0, and K_n(x) = (1/(n+1)) (sin(pi (n+1) x) / sin(pi x))^2.
  const int n = 6;
  const double oracle = quad_mean(
      [n](double x) {
        if (x == 0.0) return n + 1.0;
        const double s = std::sin(std::numbers::pi * (n + 1) * x) / std::sin(std::numbers::pi * x);
        return s * s / (n + 1.0);
      },
      1000000);
  CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));
}
