#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rkb/boundary.hpp"
#include "rkb/classical.hpp"
#include "rkb/errors.hpp"
#include "rkb/zoo.hpp"

using namespace rkb;

namespace {

std::vector<Point> stolz(double theta, int N) {
  return make_sequence({SeqKind::Nontangential, theta}, boundary_point(zoo::szego(), 1.0), N);
}

}  // namespace

TEST_CASE("difference quotient identities") {
  for (auto z : test::random_disk(20, 41, 0.99)) {
    for (double a : {0.3, 0.5, 1.0})
      CHECK(std::abs(weighted_difference_quotient(zoo::hartz(a, 1.0), 1.0, 1.0, a, z) - 1.0) < 1e-12);
    CHECK(std::abs(weighted_difference_quotient(zoo::identity(), 1.0, 1.0, 1.0, z) - 1.0) < 1e-12);
    CHECK(std::abs(weighted_difference_quotient(zoo::halfway(), 1.0, 1.0, 1.0, z) - 0.5) < 1e-12);
  }
}

TEST_CASE("numeric derivative against analytic derivatives") {
  CHECK(std::abs(numeric_derivative(zoo::identity(), cplx(0.2, 0.1)) - 1.0) < 1e-9);
  CHECK(std::abs(numeric_derivative(zoo::square(), 0.3) - 0.6) < 1e-8);
  const cplx hz = numeric_derivative(zoo::hartz(0.5, 1.0), 0.9);
  CHECK(std::abs(hz - 0.5 * std::pow(0.1, -0.5)) < 1e-7 * std::abs(hz));
  const cplx a(0.5, 0.0);
  for (auto z : test::random_disk(30, 43, 0.99)) {
    CHECK(std::abs(numeric_derivative(zoo::square(), z) - 2.0 * z) < 1e-7 * std::abs(2.0 * z) + 1e-12);
    CHECK(std::abs(numeric_derivative(zoo::halfway(), z) - 0.5) < 1e-7 * 0.5);
    cplx dm = (std::norm(a) - 1.0) / std::pow(1.0 - std::conj(a) * z, 2);
    CHECK(std::abs(numeric_derivative(zoo::mobius(a), z) - dm) < 1e-7 * std::abs(dm));
    for (double al : {0.3, 0.5}) {
      cplx dh = al * std::pow(1.0 - z, al - 1.0);
      CHECK(std::abs(numeric_derivative(zoo::hartz(al, 1.0), z) - dh) < 1e-7 * std::abs(dh));
    }
  }
  CHECK_THROWS_AS(numeric_derivative(zoo::square(), 0.5, 0.6), StencilError);
}

TEST_CASE("weighted derivative equivalence on Stolz sequences") {
  for (double theta : {0.0, 0.5, 1.0}) {
    auto seq = stolz(theta, 20);
    for (double a : {0.3, 0.5, 1.0}) {
      auto r = weighted_derivative_check(zoo::hartz(a, 1.0), 1.0, 1.0, a, seq);
      CHECK(r.dq_converged);
      CHECK(r.wd_converged);
      CHECK(std::abs(r.dq_trace.back() - 1.0) < 1e-3);
      CHECK(std::abs(r.wd_trace.back() - a) < 1e-3);
      CHECK(r.passed);
    }
    auto h = weighted_derivative_check(zoo::halfway(), 1.0, 1.0, 1.0, seq);
    CHECK(std::abs(h.dq_trace.back() - 0.5) < 1e-3);
    CHECK(std::abs(h.wd_trace.back() - 0.5) < 1e-3);
    CHECK(h.passed);
    // psi_{1/2}: 1 -> -1 with phi'(1) = -3, so the quotient tends to 3
    auto m = weighted_derivative_check(zoo::mobius(0.5), 1.0, -1.0, 1.0, seq);
    CHECK(std::abs(m.dq_trace.back() - 3.0) < 1e-3);
    CHECK(std::abs(m.wd_trace.back() + 3.0) < 1e-3);
    CHECK(m.passed);
    // both sides blow up
    auto d = weighted_derivative_check(zoo::hartz(0.1, 1.0), 1.0, 1.0, 0.3, seq);
    CHECK_FALSE(d.dq_converged);
    CHECK_FALSE(d.wd_converged);
    CHECK(d.passed);
  }
}

TEST_CASE("tail Cauchy test") {
  std::vector<cplx> flat(20, cplx(2.0));
  CHECK(tail_converges(flat));
  std::vector<cplx> grow;
  for (int n = 0; n < 20; ++n) grow.emplace_back(std::pow(2.0, n));
  CHECK_FALSE(tail_converges(grow));
}

TEST_CASE("ball quotient reduces to the disk") {
  auto pts = test::random_disk(50, 47, 0.99);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double a = 0.2 + 0.8 * static_cast<double>(i) / 50.0;
    auto phi = zoo::hartz(0.5, 1.0);
    cplx lam = std::polar(1.0, 0.3 * static_cast<double>(i));
    cplx zeta = std::polar(1.0, -0.1 * static_cast<double>(i));
    cplx disk = weighted_difference_quotient(phi, lam, zeta, a, pts[i]);
    cplx ball = ball_quotient([phi](const Point& z) { return phi(z).z(); }, lam, Point(zeta), a, Point(pts[i]));
    CHECK(std::abs(disk - ball) < 1e-12 * std::max(1.0, std::abs(disk)));
  }
}

TEST_CASE("ball-hartz quotient and gradient") {
  const double s = 1.0 / std::sqrt(2.0);
  Point zeta{cplx(s), cplx(0.0, s)};
  for (double a : {0.5, 1.0}) {
    auto bh = zoo::ball_hartz(zeta, a);
    auto f = [bh](const Point& z) { return bh(z).z(); };
    for (int i = 0; i < 10; ++i) {
      auto c = test::random_disk(2, 50 + i, 0.6);
      Point z{c[0], c[1]};
      CHECK(std::abs(ball_quotient(f, 1.0, zeta, a, z) - 1.0) < 1e-12);
      cplx w = 1.0 - inner(z, zeta);
      auto g = numeric_gradient(f, z);
      for (int j = 0; j < 2; ++j) {
        cplx exact = a * std::pow(w, a - 1.0) * std::conj(zeta[j]);
        CHECK(std::abs(g[j] - exact) < 1e-6);
      }
    }
    Point zero{cplx(0.0), cplx(0.0)};
    CHECK(std::abs(ball_quotient(f, 1.0, zeta, a, zero) - (1.0 - f(zero))) < 1e-15);
  }
  RowFn row = [](const Point& z) { return std::vector<cplx>{0.5 * z[0], 0.5 * z[1]}; };
  Point z{cplx(0.2), cplx(0.1)};
  cplx expect = (1.0 - (0.5 * z[0] * s + 0.5 * z[1] * s)) / (1.0 - inner(z, Point{cplx(s), cplx(s)}));
  CHECK(std::abs(ball_quotient_row(row, {cplx(s), cplx(s)}, Point{cplx(s), cplx(s)}, 1.0, z) - expect) < 1e-14);
  RowFn wide = [](const Point&) { return std::vector<cplx>(17, cplx(0.0)); };
  CHECK_THROWS_AS(ball_quotient_row(wide, std::vector<cplx>(17, cplx(0.0)), Point{cplx(1.0), cplx(0.0)}, 1.0, z),
                  Error);
}

TEST_CASE("Koranyi sequences") {
  Point e1{cplx(1.0), cplx(0.0), cplx(0.0)};
  auto r = koranyi_sequence(e1, KoranyiKind::RestrictedRadial, 3);
  CHECK(std::abs(r[0][0] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(r[1][0] - cplx(0.75)) < 1e-15);
  CHECK(std::abs(r[2][0] - cplx(0.875)) < 1e-15);
  CHECK(r[2][1] == cplx(0.0));
  for (double M : {1.0, 2.0, 5.0}) {
    auto seq = koranyi_sequence(e1, KoranyiKind::Koranyi, 30, M);
    bool drifted = false;
    for (const auto& z : seq) {
      CHECK(koranyi_level(e1, z) <= M + 1e-12);
      if (std::abs(z[1]) > 0.0 || std::abs(z[2]) > 0.0) drifted = true;
      for (double a : {0.5, 1.0}) {
        auto xi = boundary_point(zoo::da_pow(3, a), e1);
        CHECK(gamma_member(xi, std::pow(M, a) * (1.0 + 1e-9), z));
      }
    }
    CHECK(drifted);
  }
  auto d1 = koranyi_sequence(Point{cplx(1.0)}, KoranyiKind::Koranyi, 20, 2.0);
  for (const auto& z : d1) CHECK(koranyi_level(Point{cplx(1.0)}, z) <= 2.0 + 1e-12);
  CHECK_THROWS_AS(koranyi_sequence(e1, KoranyiKind::Koranyi, 10, 0.4), NotApproaching);
  auto t = koranyi_sequence(e1, KoranyiKind::TangentialInSphere, 30);
  CHECK(koranyi_level(e1, t.back()) > koranyi_level(e1, t[5]));
}
