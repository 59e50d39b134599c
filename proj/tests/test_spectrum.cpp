#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hoinfo/generators.hpp"
#include "hoinfo/spectrum.hpp"
#include "suite.hpp"

using namespace hoinfo;

namespace {

constexpr double kTol = 1e-9;

bool near(double a, double b, double tol = kTol) { return std::abs(a - b) < tol; }

void check_array(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(near(got[i], want[i]));
}

}  // namespace

TEST_CASE("spectrum of canonical systems") {
  const auto xor3 = compute_spectrum(parity(3));
  check_array(xor3.delta, {3, 2, 1, 0});
  CHECK(xor3.synergy_order == 3);
  REQUIRE(xor3.delta_crossing);
  CHECK(near(*xor3.delta_crossing, 3.0));
  CHECK(xor3.last_positive_delta() == 2);

  const auto gb3 = compute_spectrum(giant_bit(3, 2));
  check_array(gb3.gamma, {3, 2, 1, 0});
  CHECK(gb3.redundancy_order == 3);
  REQUIRE(gb3.gamma_crossing);
  CHECK(near(*gb3.gamma_crossing, 3.0));

  const auto ind = compute_spectrum(suite::uniform(3));
  check_array(ind.delta, {0, 0, 0, 0});
  check_array(ind.gamma, {0, 0, 0, 0});
  CHECK_FALSE(ind.synergy_order);
  CHECK_FALSE(ind.redundancy_order);
  CHECK_FALSE(ind.delta_crossing);
  CHECK_FALSE(ind.gamma_crossing);

  const auto x4 = compute_spectrum(parity(4));
  check_array(x4.delta, {4, 3, 2, 1, 0});
  CHECK(x4.synergy_order == 4);

  const auto gb2 = compute_spectrum(giant_bit(2, 2));
  check_array(gb2.gamma, {2, 1, 0});
  CHECK(gb2.redundancy_order == 2);

  CHECK_THROWS_AS(compute_spectrum(point_mass(1)), Error);
}

TEST_CASE("order diagnostics on gadgets") {
  for (int k = 2; k <= 4; ++k) {
    CHECK(compute_spectrum(parity(k)).synergy_order == k);
    const std::vector<GeneratorSpec> pair = {{.kind = GeneratorKind::parity, .order = k},
                                             {.kind = GeneratorKind::parity, .order = k}};
    CHECK(compute_spectrum(compose_independent(pair)).synergy_order == k);
    for (int a = 2; a <= 3; ++a) CHECK(compute_spectrum(giant_bit(k, a)).redundancy_order == k);
  }
}

TEST_CASE("sign interpretation") {
  CHECK(sign_interpretation(compute_spectrum(parity(3)), 2) == OrderDominance::HigherOrderDominated);
  CHECK(sign_interpretation(compute_spectrum(giant_bit(3)), 2) == OrderDominance::LowerOrderDominated);
  CHECK(sign_interpretation(compute_spectrum(parity(3)), 3) == OrderDominance::BalancedAtK);
  const auto s = compute_spectrum(parity(3));
  CHECK_THROWS_AS(sign_interpretation(s, 4), Error);
  CHECK_THROWS_AS(sign_interpretation(s, -1), Error);
  CHECK(to_string(OrderDominance::BalancedAtK) == "BalancedAtK");
}

TEST_CASE("spectrum invariants on random systems") {
  for (const auto& d : suite::random_distributions(150, 0x5BEC)) {
    const auto s = compute_spectrum(d);
    const auto m = compute_measures(d);
    const std::size_t n = d.n_vars();
    REQUIRE(s.delta.size() == n + 1);
    CHECK(s.delta[0] == s.gamma[0]);
    CHECK(near(s.delta[0], m.s_information));
    for (std::size_t k = 0; k <= n; ++k) {
      const int kk = static_cast<int>(k);
      CHECK(near(s.delta[k], delta_k_via_tc(d, kk)));
      CHECK(near(s.gamma[k], gamma_k_via_tc(d, kk)));
      if (k > 0) {
        CHECK(near(s.delta[k] - s.delta[k - 1], -m.total_correlation));
        CHECK(near(s.gamma[k] - s.gamma[k - 1], -m.dual_total_correlation));
        CHECK(s.delta[k] <= s.delta[k - 1] + 1e-12);
        CHECK(s.gamma[k] <= s.gamma[k - 1] + 1e-12);
      }
    }
    if (s.delta_crossing) {
      for (std::size_t k = 0; k <= n; ++k) {
        if (std::abs(s.delta[k]) > kTol) CHECK((s.delta[k] > 0) == (static_cast<double>(k) < *s.delta_crossing));
      }
      // The two order queries differ by exactly one on an affine, decreasing sequence.
      if (s.synergy_order && *s.synergy_order > 0) CHECK(s.last_positive_delta() == *s.synergy_order - 1);
    }
  }
}
