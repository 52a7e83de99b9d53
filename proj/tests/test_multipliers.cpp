#include <doctest.h>

#include <cmath>
#include <map>

#include "lpsq/kernels.hpp"
#include "lpsq/multipliers.hpp"
#include "test_util.hpp"

using namespace lpsq;
using lpsq::testing::Rng;
using lpsq::testing::random_poly;

namespace {

TrigPoly basis1(int32_t n) { return TrigPoly::basis(std::span<const int32_t>(&n, 1)); }

TrigPoly sum_of_exponentials(std::initializer_list<int32_t> ns) {
  TrigPolyBuilder b(1);
  for (int32_t n : ns) b.add(std::span<const int32_t>(&n, 1), cd{1, 0});
  return std::move(b).build();
}

// All block indices occupied along one axis of f.
std::vector<int> occupied_blocks(const TrigPoly& f, int axis) {
  std::vector<int> ks;
  for (std::size_t i = 0; i < f.term_count(); ++i) ks.push_back(block_index(f.exponent(i)[axis]));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

}  // namespace

TEST_CASE("block_index and block_range follow the dyadic convention") {
  CHECK(block_index(0) == 0);
  CHECK(block_index(1) == 1);
  CHECK(block_index(2) == 2);
  CHECK(block_index(3) == 2);
  CHECK(block_index(4) == 3);
  CHECK(block_index(-1) == -1);
  CHECK(block_index(-4) == -3);
  for (int k = 1; k <= 20; ++k) {
    const auto [lo, hi] = block_range(k);
    CHECK(block_index(lo) == k);
    CHECK(block_index(hi) == k);
    CHECK(block_index(lo - 1) == k - 1);
    const auto [nlo, nhi] = block_range(-k);
    CHECK(nlo == -hi);
    CHECK(nhi == -lo);
    CHECK(block_index(nlo) == -k);
    CHECK(block_index(nhi) == -k);
  }
}

TEST_CASE("delta_project keeps exactly the requested block") {
  const TrigPoly f = sum_of_exponentials({2, 3, 4});
  CHECK(delta_project(f, 2, 0) == sum_of_exponentials({2, 3}));
  CHECK(delta_project(f, 3, 0) == sum_of_exponentials({4}));

  // Delta_0 retains the mean only.
  TrigPolyBuilder b(1);
  const int32_t zero = 0, one = 1;
  b.add(std::span<const int32_t>(&zero, 1), cd{0.5, -2});
  b.add(std::span<const int32_t>(&one, 1), cd{1, 0});
  const TrigPoly g = std::move(b).build();
  const TrigPoly d0 = delta_project(g, 0, 0);
  REQUIRE(d0.term_count() == 1);
  CHECK(d0.exponent(0)[0] == 0);
  CHECK(d0.amplitude(0) == cd{0.5, -2});
}

TEST_CASE("delta blocks reconstruct and are orthogonal") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly f = random_poly(rng, 1, -40, 40, 12);
    TrigPolyBuilder sum(1);
    double energy = 0.0;
    for (int k : occupied_blocks(f, 0)) {
      const TrigPoly piece = delta_project(f, k, 0);
      for (std::size_t i = 0; i < piece.term_count(); ++i) sum.add(piece.exponent(i), piece.amplitude(i));
      const double l2 = lp_norm(piece, 2.0);
      energy += l2 * l2;
    }
    CHECK(std::move(sum).build() == f);
    const double total = lp_norm(f, 2.0);
    CHECK(std::abs(energy - total * total) < 1e-12 * std::max(1.0, total * total));
  }
}

TEST_CASE("apply_tensor_multiplier: identity, factorization, block signs") {
  Rng rng(43);
  const TrigPoly f = random_poly(rng, 2, -9, 9, 8);
  MultiplierSpec ident{{AxisSymbol::identity(-16, 16), AxisSymbol::identity(-16, 16)}};
  CHECK(apply_tensor_multiplier(ident, f) == f);

  // Product structure on a tensor product.
  const TrigPoly a = random_poly(rng, 1, -5, 5, 4);
  const TrigPoly c = random_poly(rng, 1, -5, 5, 4);
  const TrigPoly factors[2] = {a, c};
  const TrigPoly prod = tensor_product(factors);
  std::map<int, int> flip_some{{-4, -1}, {-3, 1}, {-2, -1}, {-1, 1}, {0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}};
  const AxisSymbol s1 = sign_symbol(SignPattern(flip_some), -8, 8);
  const AxisSymbol s2 = AxisSymbol::identity(-8, 8);
  const TrigPoly lhs = apply_tensor_multiplier({{s1, s2}}, prod);
  const TrigPoly ta = apply_tensor_multiplier({{s1}}, a);
  const TrigPoly parts[2] = {ta, c};
  CHECK(lhs == tensor_product(parts));

  // epsilon_{k1} epsilon_{k2} on a single tensor exponential: 2 lies in
  // block 2 and 5 in block 3.
  const int32_t pt[2] = {2, 5};
  const TrigPoly e25 = TrigPoly::basis(pt);
  std::map<int, int> signs{{0, 1}, {1, 1}, {2, -1}, {3, -1}};
  const AxisSymbol s = sign_symbol(SignPattern(signs), 0, 8);
  const TrigPoly out = apply_tensor_multiplier({{s, s}}, e25);
  REQUIRE(out.term_count() == 1);
  CHECK(out.amplitude(0) == cd{1, 0});  // (-1) * (-1)
}

TEST_CASE("apply_tensor_multiplier rejects uncovered frequencies and wrong rank") {
  const TrigPoly f = sum_of_exponentials({5});
  CHECK_THROWS_AS((void)apply_tensor_multiplier({{AxisSymbol::identity(0, 3)}}, f), std::out_of_range);
  CHECK_THROWS_AS((void)apply_tensor_multiplier({{AxisSymbol::identity(0, 8), AxisSymbol::identity(0, 8)}}, f),
                  std::invalid_argument);
}

TEST_CASE("sign_symbol: trivial pattern is the identity, signs square to one") {
  std::map<int, int> plus;
  for (int k = -8; k <= 8; ++k) plus[k] = 1;
  const AxisSymbol all_plus = sign_symbol(SignPattern(plus), -64, 64);
  Rng rng(47);
  const TrigPoly f = random_poly(rng, 1, -64, 64, 10);
  CHECK(apply_tensor_multiplier({{all_plus}}, f) == f);

  // Flipping only block k = 1 negates exactly \hat f(1) on supports in [0, 1].
  std::map<int, int> flip1{{0, 1}, {1, -1}};
  const AxisSymbol s = sign_symbol(SignPattern(flip1), 0, 1);
  const TrigPoly g = sum_of_exponentials({0, 1});
  const TrigPoly flipped = apply_tensor_multiplier({{s}}, g);
  const int32_t zero = 0, one = 1;
  CHECK(flipped.coeff(std::span<const int32_t>(&zero, 1)) == cd{1, 0});
  CHECK(flipped.coeff(std::span<const int32_t>(&one, 1)) == cd{-1, 0});

  // Any sign multiplier is an involution.
  std::map<int, int> rnd;
  for (int k = -8; k <= 8; ++k) rnd[k] = rng.uniform() < 0.5 ? -1 : 1;
  const AxisSymbol t = sign_symbol(SignPattern(rnd), -64, 64);
  CHECK(apply_tensor_multiplier({{t}}, apply_tensor_multiplier({{t}}, f)) == f);
}

TEST_CASE("marcinkiewicz_constant: frozen references") {
  // Constant symbol: no variation.
  CHECK(marcinkiewicz_constant(AxisSymbol::identity(-70, 70), 4) == 0.0);

  // Indicator of [8, 15]: the k = 3 window sees both unit jumps.
  {
    std::vector<cd> vals(141, cd{0, 0});
    for (int n = 8; n <= 15; ++n) vals[static_cast<std::size_t>(n + 70)] = cd{1, 0};
    const AxisSymbol ind(-70, std::move(vals));
    CHECK(marcinkiewicz_constant(ind, 4) == doctest::Approx(2.0).epsilon(1e-14));
  }

  // Alternating block signs: two jumps of size 2 inside each one-sided
  // window, so the literal variation sum is 8. (The introduction claims
  // B_m <= 2 for such symbols under an unstated normalization; the literal
  // evaluation of the displayed sums is what this toolkit reports.)
  {
    std::map<int, int> alt;
    for (int k = -6; k <= 6; ++k) alt[k] = (k % 2 == 0) ? 1 : -1;
    const AxisSymbol m = sign_symbol(SignPattern(alt), -35, 35);
    CHECK(marcinkiewicz_constant(m, 4) == doctest::Approx(8.0).epsilon(1e-14));
  }

  CHECK_THROWS_AS((void)marcinkiewicz_constant(AxisSymbol::identity(-10, 10), 4), std::invalid_argument);
}

TEST_CASE("square_function: single exponential and a frozen block sum at x = 0") {
  const int res[1] = {32};
  const GridFunction s = square_function(basis1(7), res);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.at_flat(i).real() == doctest::Approx(1.0).epsilon(1e-12));

  // f = sum_{n=0}^{7} e_n splits into blocks {0}, {1}, {2,3}, {4..7}; at
  // x = 0 the pieces have moduli 1, 1, 2, 4, so S(0) = sqrt(22).
  const TrigPoly f = sum_of_exponentials({0, 1, 2, 3, 4, 5, 6, 7});
  double direct = 0.0;
  for (int k : occupied_blocks(f, 0)) {
    const TrigPoly piece = delta_project(f, k, 0);
    double v = 0.0;
    for (std::size_t i = 0; i < piece.term_count(); ++i) v += piece.amplitude(i).real();
    direct += v * v;
  }
  CHECK(direct == doctest::Approx(22.0));
  const GridFunction sf = square_function(f, res);
  CHECK(sf.at_flat(0).real() == doctest::Approx(std::sqrt(22.0)).epsilon(1e-12));
}

TEST_CASE("square_function preserves the L2 norm on random analytic inputs") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 2;
    const TrigPoly f = random_poly(rng, d, 0, 31, 8);
    std::vector<int> res(static_cast<std::size_t>(d), 64);
    const double lhs = lp_norm(square_function(f, res), 2.0);
    const double rhs = lp_norm(f, 2.0);
    CHECK(std::abs(lhs - rhs) < 1e-11 * rhs);
  }
}

TEST_CASE("square_function equals the sign-averaged second moment (Khintchine bridge)") {
  Rng rng(59);
  const TrigPoly f = random_poly(rng, 1, 0, 63, 9);
  const auto ks = occupied_blocks(f, 0);
  REQUIRE(ks.size() <= 12);
  const int res[1] = {128};
  std::vector<GridFunction> pieces;
  for (int k : ks) pieces.push_back(synthesize(delta_project(f, k, 0), res));
  const GridFunction s = square_function(f, res);

  for (int j : {0, 17, 63, 101}) {
    double avg = 0.0;
    const std::size_t patterns = std::size_t{1} << ks.size();
    for (std::size_t pat = 0; pat < patterns; ++pat) {
      cd sum{0, 0};
      for (std::size_t b = 0; b < ks.size(); ++b) {
        sum += ((pat >> b) & 1) ? -pieces[b].at_flat(j) : pieces[b].at_flat(j);
      }
      avg += std::norm(sum);
    }
    avg /= static_cast<double>(patterns);
    const double s2 = s.at_flat(j).real() * s.at_flat(j).real();
    CHECK(std::abs(avg - s2) < 1e-10 * std::max(1.0, s2));
  }
}

TEST_CASE("square_function of a diagonal embedding is the one-variable square function") {
  Rng rng(61);
  const TrigPoly F = random_poly(rng, 1, 0, 31, 7);
  const TrigPoly g = diag_embed(F, 2);
  const int R = 64;
  const int res2[2] = {R, R};
  const int res1[1] = {R};
  const GridFunction s2 = square_function(g, res2);
  const GridFunction s1 = square_function(F, res1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < R; ++j) {
      const double lhs = s2.at_flat(static_cast<std::size_t>(i) * R + j).real();
      const double rhs = s1.at_flat(static_cast<std::size_t>((i + j) % R)).real();
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("tensor multiplier obeys the sup-norm bound in L2") {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly f = random_poly(rng, 2, -16, 16, 10);
    std::vector<cd> v1(64), v2(64);
    for (auto& v : v1) v = rng.complex_gaussian();
    for (auto& v : v2) v = rng.complex_gaussian();
    const AxisSymbol m1(-31, std::move(v1));
    const AxisSymbol m2(-31, std::move(v2));
    const double bound = m1.sup_norm() * m2.sup_norm() * lp_norm(f, 2.0);
    CHECK(lp_norm(apply_tensor_multiplier({{m1, m2}}, f), 2.0) <= bound * (1 + 1e-12));
  }
}
