#include <cmath>
#include <random>
#include <sstream>

#include <doctest.h>

#include "fluxring/profile_io.hpp"
#include "fluxring/random_profiles.hpp"
#include "fluxring/ring.hpp"

#include "test_support.hpp"

using namespace fluxring;

TEST_SUITE("ring") {

TEST_CASE("cosine profile: zero amplitude gives the zero modulation") {
  const auto profile = make_cosine_profile(0.0, 1, 64);
  CHECK(profile.grid_size() == 64);
  CHECK(profile.samples().abs().maxCoeff() == 0.0);
}

TEST_CASE("cosine profile: mean square is eps^2 n0^2 / 2 on the grid") {
  // the sampled cos^2 averages to exactly 1/2 once the harmonic is resolvable
  const auto profile = make_cosine_profile(0.2, 1, 1024);
  const auto averages = compute_averages(RingConfigd{}, profile);
  CHECK(averages.modulation_mean_square == doctest::Approx(0.02).epsilon(1e-14));

  const auto third = make_cosine_profile(0.3, 3, 256, 2.0);
  const auto avg3 = compute_averages(RingConfigd{.base_density = 2.0}, third);
  CHECK(avg3.modulation_mean_square ==
        doctest::Approx(0.09 * 4.0 / 2.0).epsilon(1e-14));
}

TEST_CASE("cosine profile: invalid arguments are refused") {
  CHECK_THROWS_AS(make_cosine_profile(1.0, 1, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_cosine_profile(-1.0, 1, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_cosine_profile(0.2, 0, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_cosine_profile(0.2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_cosine_profile(0.2, 32, 64), std::invalid_argument);
}

TEST_CASE("custom profile: constant input centers to zero") {
  const auto profile = make_custom_profile(ArrayX<double>::Constant(16, 0.7));
  CHECK(profile.samples().abs().maxCoeff() == 0.0);
}

TEST_CASE("custom profile: centering is exact arithmetic") {
  ArrayX<double> raw(16);
  for (int i = 0; i < 16; i += 4) {
    raw[i] = 0.3;
    raw[i + 1] = raw[i + 2] = raw[i + 3] = -0.1;
  }
  const auto profile = make_custom_profile(raw);
  CHECK(std::abs(profile.samples().mean()) < 1e-15);
}

TEST_CASE("custom profile: density dipping to zero is an error") {
  ArrayX<double> raw = ArrayX<double>::Zero(16);
  raw[3] = -1.5;  // after centering still below -n0
  CHECK_THROWS_WITH_AS(static_cast<void>(make_custom_profile(raw)),
                       doctest::Contains("density vanishes"),
                       std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(make_custom_profile(ArrayX<double>::Zero(4))),
                  std::invalid_argument);
}

TEST_CASE("averages: unmodulated ring") {
  const auto profile = make_cosine_profile(0.0, 1, 128);
  const auto averages = compute_averages(RingConfigd{}, profile);
  CHECK(averages.inv_density_mean == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(averages.modulation_mean_square == 0.0);

  RingConfigd dense;
  dense.base_density = 2.5;
  const auto dense_profile = make_cosine_profile(0.0, 1, 128, 2.5);
  CHECK(compute_averages(dense, dense_profile).inv_density_mean ==
        doctest::Approx(1.0 / 2.5).epsilon(1e-15));
}

TEST_CASE("averages: cosine inverse-density mean hits the closed form") {
  for (const double epsilon : {0.2, 0.5}) {
    const auto profile = make_cosine_profile(epsilon, 1, 1024);
    const auto averages = compute_averages(RingConfigd{}, profile);
    CHECK(averages.inv_density_mean ==
          doctest::Approx(testing::cosine_inv_mean(epsilon)).epsilon(1e-13));
  }
  const auto profile = make_cosine_profile(0.5, 1, 1024);
  CHECK(compute_averages(RingConfigd{}, profile).modulation_mean_square ==
        doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("averages: quadrature converges below 1e-12 by N = 256") {
  for (const double epsilon : {0.1, 0.3, 0.5}) {
    const auto profile = make_cosine_profile(epsilon, 1, 256);
    const auto averages = compute_averages(RingConfigd{}, profile);
    CHECK(std::abs(averages.inv_density_mean - testing::cosine_inv_mean(epsilon)) <
          1e-12);
  }
}

TEST_CASE("property: harmonic mean inequality over random profiles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto random = random_harmonic_profile(rng, 512, 5, 0.5);
    const auto averages = compute_averages(RingConfigd{}, random.profile);
    CHECK(averages.inv_density_mean * 1.0 >= 1.0 - 1e-14);
    if (random.total_amplitude > 0.05)  // strict part needs a visible modulation
      CHECK(averages.inv_density_mean > 1.0 + 1e-6);
    CHECK(averages.modulation_mean_square >= 0.0);
  }
}

TEST_CASE("property: constructors keep the mean at zero") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto random = random_harmonic_profile(rng, 256, 5, 0.4);
    CHECK(std::abs(random.profile.samples().mean()) <= 1e-12);
  }
  const auto cosine = make_cosine_profile(0.7, 4, 512);
  CHECK(std::abs(cosine.samples().mean()) <= 1e-12);
}

TEST_CASE("profiles validate against the config they are used with") {
  const auto profile = make_custom_profile(ArrayX<double>::LinSpaced(64, -0.9, 0.9));
  RingConfigd thin;
  thin.base_density = 0.5;  // profile dips below -0.5 after centering
  CHECK_THROWS_AS(compute_averages(thin, profile), std::invalid_argument);

  RingConfigd bad;
  bad.radius = -1.0;
  CHECK_THROWS_AS(compute_averages(bad, make_cosine_profile(0.0, 1, 64)),
                  std::invalid_argument);
}

TEST_CASE("scalar genericity: the core instantiates at long double") {
  const auto profile = make_cosine_profile<long double>(0.2L, 1, 256);
  const auto averages = compute_averages(RingConfig<long double>{}, profile);
  CHECK(static_cast<double>(averages.modulation_mean_square) ==
        doctest::Approx(0.02).epsilon(1e-15));
}

TEST_CASE("profile table: write / read round trip re-centers the mean") {
  const auto profile = make_cosine_profile(0.3, 2, 64);
  std::stringstream stream;
  write_profile(stream, profile);

  const auto loaded = read_profile(stream);
  REQUIRE(loaded.grid_size() == 64);
  CHECK((loaded.samples() - profile.samples()).abs().maxCoeff() < 1e-15);

  std::stringstream shifted("# n1 profile N=8\n1.25\n1.25\n1.25\n1.25\n0.25\n0.25\n0.25\n0.25\n");
  const auto centered = read_profile(shifted);
  CHECK(std::abs(centered.samples().mean()) < 1e-15);
  CHECK(centered.samples().maxCoeff() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("profile table: malformed input is rejected") {
  std::stringstream garbage("0.1\nnot-a-number\n");
  CHECK_THROWS_AS(static_cast<void>(read_profile(garbage)), ProfileIoError);

  std::stringstream mismatch("# n1 profile N=4\n0.0\n0.0\n0.0\n0.0\n0.0\n0.0\n0.0\n0.0\n");
  CHECK_THROWS_AS(static_cast<void>(read_profile(mismatch)), ProfileIoError);

  std::stringstream trailing("0.1 junk\n");
  CHECK_THROWS_AS(static_cast<void>(read_profile(trailing)), ProfileIoError);
}

}  // TEST_SUITE
