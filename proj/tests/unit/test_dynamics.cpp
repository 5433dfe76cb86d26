#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wgm/dynamics.hpp"
#include "wgm/error.hpp"

using namespace wgm;
using doctest::Approx;

namespace {

const SphereSystem kSmall{5.0, 1.46 * 1.46};
const cplx kI(0.0, 1.0);

}  // namespace

TEST_CASE("decoupled decay") {
  const double g = 0.8;
  const EnvelopeSystem sys{-g, -g, 0.0};
  const auto tr = evolve(sys, {0.0, 1.0, 0.0}, 5.0, max_stable_step(sys));
  for (const auto& s : tr) {
    CHECK(std::abs(std::abs(s.p_a) - std::exp(-g * s.t)) <= 1e-8);
    CHECK(s.p_b == cplx(0.0, 0.0));
  }
  CHECK(!transfer_metrics(tr).period);
}

TEST_CASE("lossless transfer") {
  const double v = 2.2;
  const EnvelopeSystem sys{0.0, 0.0, kI * v};
  const auto tr = evolve(sys, {0.0, 1.0, 0.0}, 10.0 * std::numbers::pi / v, 0.5 * max_stable_step(sys));
  for (std::size_t i = 0; i < tr.size(); i += 97) {
    CHECK(std::norm(tr[i].p_b) == Approx(std::pow(std::sin(v * tr[i].t), 2)).epsilon(1e-8).scale(1.0));
  }
  const auto m = transfer_metrics(tr);
  REQUIRE(m.period);
  CHECK(std::abs(*m.period - std::numbers::pi / v) <= 1e-6 * std::numbers::pi / v);
  CHECK(m.max_pb2 == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("equal decay leaves the transfer period unchanged") {
  const double v = 2.2, g = 0.05;
  const EnvelopeSystem lossy{-g, -g, kI * v};
  const double t_end = 10.0 * std::numbers::pi / v;
  const auto tr = evolve(lossy, {0.0, 1.0, 0.0}, t_end, 0.5 * max_stable_step(lossy));
  for (std::size_t i = 0; i < tr.size(); i += 97) {
    const double t = tr[i].t;
    CHECK(std::norm(tr[i].p_b) == Approx(std::exp(-2 * g * t) * std::pow(std::sin(v * t), 2)).scale(1.0).epsilon(1e-9));
  }
  // The decaying envelope shifts the peaks of |p_b|^2 slightly; compare the
  // period of the envelope-normalized signal.
  std::vector<EnvelopeState> norm = tr;
  for (auto& s : norm) s.p_b *= std::exp(g * s.t);
  const auto m = transfer_metrics(norm);
  REQUIRE(m.period);
  CHECK(std::abs(*m.period - std::numbers::pi / v) <= 1e-6 * std::numbers::pi / v);
}

TEST_CASE("norm is conserved for a Hermitian generator") {
  const double a = 0.3, v = 1.1;
  const EnvelopeSystem sys{kI * a, kI * a, kI * v};
  const double period = std::numbers::pi / v;
  const auto tr = evolve(sys, {0.0, 1.0, 0.0}, 100.0 * period, max_stable_step(sys));
  double worst = 0.0;
  for (const auto& s : tr) worst = std::max(worst, std::abs(std::norm(s.p_a) + std::norm(s.p_b) - 1.0));
  CHECK(worst <= 1e-9);
}

TEST_CASE("RK4 converges at fourth order") {
  const double v = 1.3;
  const EnvelopeSystem sys{-0.1, -0.1, kI * v};
  const double t_end = 10.0 / v;
  auto err = [&](double dt) {
    const auto last = evolve(sys, {0.0, 1.0, 0.0}, t_end, dt).back();
    const double decay = std::exp(-0.1 * last.t);
    return std::abs(last.p_a - decay * std::cos(v * last.t)) + std::abs(last.p_b - decay * kI * std::sin(v * last.t));
  };
  const double h = max_stable_step(sys);
  CHECK(std::log2(err(h) / err(h / 2)) == Approx(4.0).epsilon(0.05));
}

TEST_CASE("generator eigenvalues") {
  const EnvelopeSystem sys{cplx(-0.4, 0.2), cplx(-0.4, 0.2), cplx(-0.15, 0.6)};
  const auto ev = generator_eigenvalues(sys);
  const cplx sym = sys.self_a + sys.cross, anti = sys.self_a - sys.cross;
  const bool direct = std::abs(ev[0] - sym) <= 1e-12 && std::abs(ev[1] - anti) <= 1e-12;
  const bool swapped = std::abs(ev[0] - anti) <= 1e-12 && std::abs(ev[1] - sym) <= 1e-12;
  CHECK((direct || swapped));

  // The symmetric combination evolves as exp((self + cross) t).
  const auto tr = evolve(sys, {0.0, 1.0, 1.0}, 20.0, max_stable_step(sys));
  const cplx phase = tr.back().p_a / std::exp(sym * tr.back().t);
  CHECK(std::abs(phase - 1.0) <= 1e-6);
  CHECK(std::abs(tr.back().p_b - tr.back().p_a) <= 1e-12 * std::abs(tr.back().p_a));

  const EnvelopeSystem asym{cplx(-1.0, 0.0), cplx(-0.2, 0.5), cplx(0.3, 0.0)};
  for (const cplx l : generator_eigenvalues(asym)) {
    // det(M - l) = 0
    CHECK(std::abs((asym.self_a - l) * (asym.self_b - l) - asym.cross * asym.cross) <= 1e-12);
  }
}

TEST_CASE("step guard and argument checks") {
  const EnvelopeSystem sys{-1.0, -1.0, 2.0};
  CHECK(max_stable_step(sys) == Approx(0.005));
  CHECK_THROWS_AS(evolve(sys, {0.0, 1.0, 0.0}, 1.0, 0.006), StabilityError);
  CHECK_THROWS_AS(evolve(sys, {0.0, 1.0, 0.0}, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(evolve(sys, {2.0, 1.0, 0.0}, 1.0, 0.001), DomainError);
  CHECK_THROWS_AS(transfer_metrics({}), DomainError);
  CHECK(evolve(sys, {0.0, 1.0, 0.0}, 0.0, 0.001).size() == 1);
}

TEST_CASE("envelope system from the coupling module") {
  const double w = 1.05;
  const double r = 5.0 + 0.1 / w;
  const AxialDipolePair pair{kSmall, r, r, false, w};
  const auto sys = build_envelope_system(pair);
  CHECK(std::abs(sys.self_a - sys.self_b) <= 1e-12 * std::abs(sys.self_a));
  const auto s = single_dipole_response(kSmall, w, r);
  CHECK(std::abs(sys.self_a + cplx(s.gamma_ratio, s.omega_shift)) <= 1e-12 * std::abs(sys.self_a));
  CHECK(std::abs(sys.cross + pair_coupling(pair).z()) <= 1e-12 * std::abs(sys.cross));

  // Vacuum, far apart: the cross term is negligible next to the decay.
  const AxialDipolePair far{SphereSystem{1.0, 1.0}, 1.5, 1.5 + 200.0, true, 1.0};
  const auto fs = build_envelope_system(far);
  CHECK(std::abs(fs.cross) < 1e-3 * std::abs(fs.self_a.real()));
  CHECK(fs.self_a.real() == Approx(-1.0).epsilon(1e-10));
  // A dipole on the surface has no finite self shift.
  CHECK_THROWS_AS(build_envelope_system(AxialDipolePair{kSmall, 5.0, 6.0, false, w}), DomainError);
}
