#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "wgm/error.hpp"
#include "wgm/modes.hpp"

using namespace wgm;
using doctest::Approx;

namespace {

const SphereSystem kSmall{5.0, 1.46 * 1.46};
const SphereSystem kLarge{200.0, 1.46 * 1.46};

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("polarization names") {
  CHECK(to_string(Polarization::TM) == "TM");
  CHECK(polarization_from_string("TE") == Polarization::TE);
  CHECK_THROWS_AS(polarization_from_string("XX"), DomainError);
}

TEST_CASE("vacuum sphere has no resonances") {
  const SphereSystem vac{5.0, 1.0};
  for (int i = 0; i <= 200; ++i) {
    const double w = 0.5 + i * 0.01;
    CHECK(std::abs(denominator(Polarization::TM, vac, 39, w)) > 1e-3);
  }
  CHECK(scan_candidates(Polarization::TM, vac, 39, 1.0, 1.2, 4001).empty());
}

TEST_CASE("TM 39 on the 5 um sphere") {
  const auto l2 = find_mode_near(Polarization::TM, kSmall, 39, 1.0968);
  CHECK(l2.id.l == 2);
  CHECK(rel(l2.root(), oracle::root_tm39_l2_a5) <= 1e-12);
  CHECK(l2.q_factor == Approx(l2.omega_c / (2.0 * l2.kappa)).epsilon(1e-15));
  CHECK(l2.kappa > 0.0);

  const auto l1 = find_mode(Polarization::TM, kSmall, 39, 1);
  CHECK(rel(l1.root(), oracle::root_tm39_l1_a5) <= 1e-12);
  CHECK(l1.omega_c < l2.omega_c);
  CHECK(find_mode(Polarization::TM, kSmall, 39, 2).omega_c == l2.omega_c);
}

TEST_CASE("root residual and circle property") {
  const auto r = find_mode_near(Polarization::TM, kSmall, 39, 1.0968);
  const cplx w = r.root();
  const double d0 = std::abs(denominator(Polarization::TM, kSmall, 39, w));
  CHECK(d0 < 1e-10 * std::abs(denominator(Polarization::TM, kSmall, 39, r.omega_c + 10.0 * r.kappa)));

  std::vector<double> ring;
  for (int k = 0; k < 32; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 32;
    ring.push_back(std::abs(denominator(Polarization::TM, kSmall, 39, w + 10.0 * r.kappa * std::polar(1.0, phi))));
  }
  std::nth_element(ring.begin(), ring.begin() + 16, ring.end());
  CHECK(d0 <= 1e-9 * ring[16]);
}

TEST_CASE("restart inside the basin returns the same root") {
  const auto r = find_mode_near(Polarization::TM, kSmall, 39, 1.0968);
  const auto again = refine_resonance(Polarization::TM, kSmall, 39, r.omega_c + 0.3 * r.kappa);
  CHECK(rel(again.root(), r.root()) <= 1e-12);
  CHECK(again.id.l == 0);
}

TEST_CASE("scan candidates bracket the resonance and nest under refinement") {
  const auto b = scan_candidates(Polarization::TM, kSmall, 39, 1.0, 1.2, 4001);
  const double target = 1.096835618;
  CHECK(std::any_of(b.begin(), b.end(), [&](const Bracket& x) { return x.lo <= target && target <= x.hi; }));
  const auto fine = scan_candidates(Polarization::TM, kSmall, 39, 1.0, 1.2, 8001);
  for (const auto& c : b) {
    const double mid = 0.5 * (c.lo + c.hi);
    CHECK(std::any_of(fine.begin(), fine.end(), [&](const Bracket& x) { return x.lo <= mid && mid <= x.hi; }));
  }
  CHECK(scan_candidates(Polarization::TM, kSmall, 39, 1.3, 1.3 + 1e-12, 3).empty());
  CHECK_THROWS_AS(scan_candidates(Polarization::TM, kSmall, 39, 1.2, 1.0, 11), DomainError);
}

TEST_CASE("order numbers count from the lowest root") {
  const auto band = order_number(Polarization::TM, kSmall, 39, 0.85, 1.2);
  REQUIRE(band.size() == 3);
  for (std::size_t i = 0; i < band.size(); ++i) {
    CHECK(band[i].id.l == static_cast<int>(i) + 1);
    if (i) CHECK(band[i].omega_c > band[i - 1].omega_c);
  }
  // A band that starts above the first root still labels from the bottom.
  const auto upper = order_number(Polarization::TM, kSmall, 39, 1.05, 1.2);
  REQUIRE(upper.size() == 2);
  CHECK(upper[0].id.l == 2);
  CHECK(upper[0].omega_c == band[1].omega_c);
  // Nothing below the interior size-parameter floor.
  CHECK(order_number(Polarization::TM, kSmall, 39, 0.1, root_floor(kSmall, 39)).empty());
  // Q falls with order number.
  CHECK(band[0].q_factor > band[1].q_factor);
  CHECK(band[1].q_factor > band[2].q_factor);
}

TEST_CASE("TE roots sit near but not on the TM roots") {
  const auto te = order_number(Polarization::TE, kSmall, 39, 0.85, 1.2);
  REQUIRE(!te.empty());
  const auto tm = order_number(Polarization::TM, kSmall, 39, 0.85, 1.2);
  CHECK(te[0].omega_c < tm[0].omega_c);
  for (const auto& r : te) CHECK(std::abs(denominator(Polarization::TE, kSmall, 39, r.root())) < 1e-8);
}

TEST_CASE("secular function changes sign at the resonances") {
  const auto r = find_mode_near(Polarization::TM, kSmall, 39, 1.0968);
  const double h = 0.2 * r.kappa;
  CHECK(secular(Polarization::TM, kSmall, 39, r.omega_c - h) * secular(Polarization::TM, kSmall, 39, r.omega_c + h) <
        0.0);
}

TEST_CASE("TM 2312 l = 167 on the 200 um sphere") {
  const auto r = find_mode(Polarization::TM, kLarge, 2312, 167);
  CHECK(r.id.l == 167);
  CHECK(std::abs(r.omega_c - oracle::root_tm2312_a200.real()) <= 1e-13 * r.omega_c);
  CHECK(r.kappa == Approx(-oracle::root_tm2312_a200.imag()).epsilon(1e-6));
  CHECK(r.q_factor == Approx(1.2086e9).epsilon(1e-3));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(find_mode(Polarization::TM, kSmall, 0, 1), DomainError);
  CHECK_THROWS_AS(find_mode(Polarization::TM, kSmall, 39, 0), DomainError);
  CHECK_THROWS_AS(refine_resonance(Polarization::TM, kSmall, 39, -1.0), DomainError);
  CHECK_THROWS_AS(order_number(Polarization::TM, SphereSystem{5.0, 0.5}, 39, 1.0, 1.1), DomainError);
}
