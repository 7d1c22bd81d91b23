#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rkb/errors.hpp"
#include "rkb/zeta.hpp"
#include "rkb/zoo.hpp"

using namespace rkb;

namespace {

// Partial sum with an Euler-Maclaurin tail.
cplx zeta_direct(cplx s, int N = 2000) {
  cplx sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
  const double x = N;
  cplx tail = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) + s * std::pow(x, -s - 1.0) / 12.0 -
              s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0) / 720.0 +
              s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(x, -s - 5.0) / 30240.0;
  return sum + tail;
}

}  // namespace

TEST_CASE("zeta against direct summation") {
  CHECK(std::abs(zeta_eval(2.0) - zeta_direct(2.0)) < 1e-12);
  CHECK(std::abs(zeta_eval(2.0).real() - M_PI * M_PI / 6.0) < 1e-12);
  CHECK(std::abs(zeta_eval(4.0).real() - std::pow(M_PI, 4) / 90.0) < 1e-12);
  CHECK(std::abs(zeta_eval(3.0).real() - 1.2020569031595942) < 1e-12);
  for (cplx s : {cplx(0.6), cplx(1.5, 2.0), cplx(0.75, 20.0), cplx(3.0, -1.0)})
    CHECK(std::abs(zeta_eval(s) - zeta_direct(s)) < 1e-9 * std::max(1.0, std::abs(zeta_direct(s))));
}

TEST_CASE("zeta domain guards") {
  CHECK_THROWS_AS(zeta_eval(1.0 + 1e-7), PoleError);
  CHECK_THROWS_AS(zeta_eval(0.3), DomainError);
}

TEST_CASE("zeta_halfplane kernel") {
  auto k = zoo::zeta_halfplane();
  cplx s(0.8, 1.0), w(1.2, -0.5);
  CHECK(std::abs(k(s, w) - zeta_direct(s + std::conj(w))) < 1e-9);
  CHECK_THROWS_AS(k(0.4, 0.8), DomainError);
}

TEST_CASE("nat_matrix leading minors are positive") {
  for (int n = 1; n <= 6; ++n) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? i + 1 : 1;
    CHECK(m.determinant() > 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(zoo::nat_matrix_eval(i + 1, j + 1) == m(i, j));
  }
  auto k = zoo::nat_matrix();
  CHECK(k(3.0, 3.0).real() == 3.0);
  CHECK(k(2.0, 5.0).real() == 1.0);
  CHECK_THROWS_AS(k(0.5, 1.0), DomainError);
}

TEST_CASE("de Branges-Rovnyak kernel") {
  auto pts = test::random_disk(5, 21);
  for (auto z : pts)
    for (auto w : pts) {
      cplx bz = (z + 1.0) / 2.0, bw = (w + 1.0) / 2.0;
      cplx expect = (1.0 - bz * std::conj(bw)) / (1.0 - z * std::conj(w));
      CHECK(std::abs(zoo::db_rovnyak_eval(z, w) - expect) < 1e-14);
    }
  CHECK(std::abs(zoo::dbr_half()(0.0, 0.0) - cplx(0.75)) < 1e-15);
}

TEST_CASE("ball and polydisk kernels") {
  Point z{cplx(0.3, 0.1), cplx(-0.2, 0.4)}, w{cplx(0.1, 0.0), cplx(0.5, -0.3)};
  cplx ip = z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]);
  CHECK(std::abs(zoo::drury_arveson(2)(z, w) - 1.0 / (1.0 - ip)) < 1e-15);
  CHECK(std::abs(zoo::da_pow(2, 0.5)(z, w) - std::pow(1.0 - ip, -0.5)) < 1e-14);
  cplx pd = 1.0 / ((1.0 - z[0] * std::conj(w[0])) * (1.0 - z[1] * std::conj(w[1])));
  CHECK(std::abs(zoo::polydisk_hardy(2)(z, w) - pd) < 1e-14);
  CHECK(std::abs(zoo::min_ray()(2.0, 5.0).real() - 2.0) == 0.0);
  auto l = zoo::dirichlet_log();
  CHECK(std::abs(l(0.0, 0.4) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(l(0.5, 0.5) - cplx(std::log(1.0 / 0.75) / 0.25)) < 1e-13);
}

TEST_CASE("mobius is an involution swapping a and 0") {
  cplx a(0.5, 0.0);
  auto m = zoo::mobius(a);
  CHECK(std::abs(m(a).z()) < 1e-15);
  CHECK(std::abs(m(0.0).z() - a) < 1e-15);
  for (auto z : test::random_disk(8, 5)) CHECK(std::abs(m(m(z)).z() - z) < 1e-13);
}

TEST_CASE("halfway iterates have a closed form") {
  auto h = zoo::halfway();
  for (cplx z0 : {cplx(0.0), cplx(-0.5), cplx(0.2, 0.6)}) {
    Point x = z0;
    for (int n = 1; n <= 12; ++n) {
      x = h(x);
      CHECK(std::abs(x.z() - (1.0 - (1.0 - z0) / std::pow(2.0, n))) < 1e-14);
      CHECK(std::abs(x.z() - zoo::halfway_iterate(z0, n)) < 1e-14);
    }
  }
}

TEST_CASE("hartz maps land in the disk") {
  for (double a : {0.1, 0.3, 0.5, 1.0}) {
    auto m = zoo::hartz(a, 1.0);
    for (auto z : test::random_disk(50, 7, 0.999)) {
      cplx v = m(z).z();
      CHECK(std::abs(v) < 1.0);
      CHECK(std::abs(v - (1.0 - std::pow(1.0 - z, a))) < 1e-14);
    }
  }
  CHECK_THROWS_AS(zoo::hartz(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(zoo::hartz(0.5, 0.9), DomainError);
}

TEST_CASE("polydisk product and coord_dup") {
  auto p = zoo::map_from_label("polydisk_product:square;halfway|1,0");
  Point z{cplx(0.5), cplx(0.2)};
  Point v = p(z);
  CHECK(std::abs(v[0] - cplx(0.6)) < 1e-15);
  CHECK(std::abs(v[1] - cplx(0.25)) < 1e-15);
  Point d = zoo::coord_dup()(z);
  CHECK(d[0] == d[1]);
}

TEST_CASE("label parsing") {
  CHECK(zoo::parse_complex("1-2i") == cplx(1.0, -2.0));
  CHECK(zoo::parse_complex("-1.5-0.25i") == cplx(-1.5, -0.25));
  CHECK(zoo::parse_complex("2i") == cplx(0.0, 2.0));
  CHECK(zoo::parse_complex("0.5") == cplx(0.5, 0.0));
  CHECK_THROWS_AS(zoo::parse_complex("1+x"), ParseError);
  Point p = zoo::parse_point("1+0i,0+0i");
  CHECK(p.size() == 2);
  CHECK(zoo::kernel_from_label("da_pow:2:0.5").domain().kind == DomainKind::UnitBall);
  CHECK(zoo::kernel_from_label("exp_of:szego").label().find("szego") != std::string::npos);
  CHECK_THROWS_AS(zoo::kernel_from_label("zzz"), ParseError);
  CHECK_THROWS_AS(zoo::kernel_from_label("szego_pow"), ParseError);
  CHECK_THROWS_AS(zoo::map_from_label("nope"), ParseError);
  for (const auto& l : zoo::kernel_labels()) CHECK_FALSE(l.empty());
  CHECK(std::abs(zoo::map_from_label("mobius:0.5")(0.0).z() - cplx(0.5)) < 1e-15);
}
