#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rkb/boundary.hpp"
#include "rkb/errors.hpp"
#include "rkb/zoo.hpp"

using namespace rkb;

TEST_CASE("boundary point anchors") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  CHECK(std::abs(xi.limit(0.5) - cplx(2.0)) < 1e-15);
  CHECK_THROWS_AS(boundary_point(zoo::szego(), 0.5), DomainError);
  auto c = xi.canonical(3);
  CHECK(std::abs(c[0].z() - cplx(0.5)) < 1e-15);
  CHECK(std::abs(c[2].z() - cplx(0.875)) < 1e-15);
  auto r = boundary_point(zoo::min_ray(), infinity_point());
  CHECK(std::abs(r.limit(3.0) - cplx(3.0)) < 1e-15);
}

TEST_CASE("gamma and E membership examples") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  CHECK(gamma_member(xi, 1.0, 0.0));
  // 1/0.19 = 5.26 against |1/(1-0.9)| = 10
  CHECK(gamma_member(xi, 1.0, 0.9));
  CHECK(gamma_level(xi, 0.9) == doctest::Approx((1.0 / 0.19) / 10.0));
  CHECK(e_member(xi, 1.0, 0.9));
  CHECK(e_member(xi, 50.0, 0.99));
  CHECK_FALSE(e_member(xi, 1.0, cplx(0.0, 0.9)));
  ApproachRegion g{RegionKind::Gamma, 1.0, xi};
  CHECK(g.contains(0.9));
}

TEST_CASE("szego regions are Stolz sectors and horocycles") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  auto pts = test::random_disk(200, 17, 0.99);
  for (double M : {0.5, 1.0, 3.0}) {
    for (auto z : pts) {
      const double lhs = std::norm(1.0 - z), rhs = M * (1.0 - std::norm(z));
      if (std::abs(lhs - rhs) > 1e-9) CHECK(e_member(xi, M, z) == (lhs <= rhs));
      const double glhs = std::abs(1.0 - z);
      if (std::abs(glhs - rhs) > 1e-9) CHECK(gamma_member(xi, M, z) == (glhs <= rhs));
    }
  }
}

TEST_CASE("region nesting") {
  auto xi = boundary_point(zoo::szego_pow(0.5), 1.0);
  auto pts = test::random_disk(200, 23, 0.99);
  for (auto z : pts)
    for (double M : {0.5, 1.0, 2.0}) {
      if (gamma_member(xi, M, z)) CHECK(gamma_member(xi, 2.0 * M, z));
      if (e_member(xi, M, z)) CHECK(e_member(xi, 2.0 * M, z));
    }
}

TEST_CASE("dirichlet region against the logarithmic form") {
  auto xi = boundary_point(zoo::dirichlet_log(), 1.0);
  // |1 - z| <= (1 - |z|^2)^{1/M} on both sides of the boundary
  CHECK(gamma_member(xi, 2.0, 0.5));
  CHECK(std::abs(1.0 - 0.5) <= std::pow(0.75, 0.5));
  CHECK_FALSE(gamma_member(xi, 1.0, -0.5));
  CHECK_FALSE(std::abs(1.0 + 0.5) <= std::pow(0.75, 1.0));
}

TEST_CASE("sequences") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  auto r = make_sequence({SeqKind::Radial, 0.0}, xi, 3);
  CHECK(std::abs(r[0].z() - cplx(0.5)) < 1e-15);
  CHECK(std::abs(r[1].z() - cplx(0.75)) < 1e-15);
  CHECK(std::abs(r[2].z() - cplx(0.875)) < 1e-15);
  auto nt = make_sequence({SeqKind::Nontangential, 0.0}, xi, 10);
  auto rr = make_sequence({SeqKind::Radial, 0.0}, xi, 10);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(nt[i].z() - rr[i].z()) < 1e-15);
  auto h = make_sequence({SeqKind::Horocyclic, 1.0}, xi, 30);
  for (const auto& p : h) CHECK(e_member(xi, 1.0 + 1e-9, p));
  CHECK(probe_residual(xi, h.back(), probe_sample(Domain::disk())) <
        probe_residual(xi, h.front(), probe_sample(Domain::disk())));
  auto nat = boundary_point(zoo::nat_matrix(), infinity_point());
  auto ns = make_sequence({SeqKind::Radial, 0.0}, nat, 5);
  CHECK(ns[4].z().real() == 5.0);
  CHECK_THROWS_AS(make_sequence({SeqKind::Horocyclic, -1.0}, xi, 10), NotApproaching);
}

TEST_CASE("tangential approach leaves every horocycle") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  std::vector<double> levels;
  for (int n = 10; n <= 2000; n *= 2) {
    cplx z = (1.0 - std::pow(n, -3.0)) * std::polar(1.0, 1.0 / n);
    levels.push_back(e_level(xi, z));
  }
  CHECK(levels.back() > 100.0);
  for (double M : {1.0, 10.0, 100.0}) {
    cplx z = (1.0 - std::pow(2000.0, -3.0)) * std::polar(1.0, 1.0 / 2000.0);
    CHECK_FALSE(e_member(xi, M, z));
  }
  // with 1 - |z| ~ n^-2 the level settles near 1/2 instead
  cplx z = (1.0 - std::pow(2000.0, -2.0)) * std::polar(1.0, 1.0 / 2000.0);
  CHECK(e_level(xi, z) == doctest::Approx(0.5).epsilon(1e-2));
  auto tseq = make_sequence({SeqKind::Tangential, 1.0 / 3.0}, xi, 40);
  CHECK(e_level(xi, tseq.back()) > e_level(xi, tseq[10]));
}

TEST_CASE("gamma tail lies in E") {
  for (auto label : {"szego", "szego_pow:0.5", "dirichlet_log"}) {
    auto xi = boundary_point(zoo::kernel_from_label(label), 1.0);
    const double M = 3.0;
    for (auto spec : {SequenceSpec{SeqKind::Radial, 0.0}, SequenceSpec{SeqKind::Nontangential, 0.5}}) {
      for (const auto& x : make_sequence(spec, xi, 30)) {
        if (!gamma_member(xi, M, x)) continue;
        if (xi.kernel.diag(x) > M) CHECK(e_member(xi, M, x));
      }
    }
  }
}

TEST_CASE("diagonal growth along generators") {
  auto xi = boundary_point(zoo::szego(), 1.0);
  double prev = 0.0;
  for (int n = 5; n <= 25; ++n) {
    double d = xi.kernel.diag(xi.generator(n));
    CHECK(d > prev);
    prev = d;
  }
  CHECK(prev > 1e6);
  auto half = boundary_point(zoo::szego_pow(0.5), 1.0);
  CHECK(half.kernel.diag(half.generator(25)) > 1e3);
}

TEST_CASE("trichotomy") {
  ClassifyOptions opt;
  {
    auto k = zoo::szego();
    auto seq = make_sequence({SeqKind::Radial, 0.0}, boundary_point(k, 1.0), 40);
    auto t = classify_limit(k, seq, default_nested_samples(k, seq, 20), opt);
    CHECK(t.verdict == TrichotomyVerdict::Boundary);
  }
  {
    auto k = zoo::dbr_half();
    auto seq = make_sequence({SeqKind::Radial, 0.0}, boundary_point(k, 1.0), 40);
    auto t = classify_limit(k, seq, default_nested_samples(k, seq, 20), opt);
    CHECK(t.verdict == TrichotomyVerdict::InteriorFunction);
    for (auto v : t.limit_on_probes) CHECK(std::abs(v - 0.5) < 1e-6);
  }
  {
    auto k = zoo::nat_matrix();
    auto seq = make_sequence({SeqKind::Radial, 0.0}, boundary_point(k, infinity_point()), 40);
    auto t = classify_limit(k, seq, default_nested_samples(k, seq, 20), opt);
    CHECK(t.verdict == TrichotomyVerdict::InteriorPointMatch);
    REQUIRE(t.match);
    CHECK(t.match->z().real() == 1.0);
  }
}

TEST_CASE("growth restriction") {
  auto k = zoo::szego();
  auto seq = make_sequence({SeqKind::Radial, 0.0}, boundary_point(k, 1.0), 30);
  auto one = growth_restriction_check(k, [](const Point&) { return cplx(1.0); }, seq);
  CHECK(one.passed);
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(std::abs(one.values[i] - std::sqrt(1.0 - std::norm(seq[i].z()))) < 1e-12);
  const Point x0 = cplx(0.3, 0.2);
  auto sec = growth_restriction_check(k, [k, x0](const Point& y) { return k(y, x0); }, seq);
  CHECK(sec.passed);
  std::vector<Point> ray;
  for (int n = 1; n <= 40; ++n) ray.emplace_back(std::pow(2.0, n));
  auto m = growth_restriction_check(zoo::min_ray(), [](const Point& x) { return cplx(std::min(x.z().real(), 1.0)); }, ray);
  CHECK(m.passed);
  CHECK(std::abs(m.values.back() - std::pow(2.0, -20.0)) < 1e-15);
}

TEST_CASE("regularity constants") {
  auto t = zoo::szego();
  auto lam = boundary_point(t, 1.0);
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    auto s = quasi_random_sample(Domain::disk(), 64, seed, 0.99);
    auto r = regularity_check(t, lam, s, {make_sequence({SeqKind::Radial, 0.0}, lam, 30)});
    CHECK(r.a_hat <= 2.0 + 1e-9);
    CHECK(r.b_hat > 0.5);
    REQUIRE(r.sequences.size() == 1);
    CHECK(r.sequences[0].boundary_divergent);
    CHECK(r.sequences[0].converges_to_lambda);
  }
  auto d = regularity_check(zoo::dirichlet_log(), boundary_point(zoo::dirichlet_log(), 1.0),
                            quasi_random_sample(Domain::disk(), 32), {});
  CHECK(d.b_hat > 0.0);
}

TEST_CASE("anchor matching") {
  auto k = zoo::szego();
  auto seq = make_sequence({SeqKind::Radial, 0.0}, boundary_point(k, cplx(0.0, 1.0)), 40);
  double res = 0.0;
  auto a = match_anchor(k, seq, 1e-4, &res);
  REQUIRE(a);
  CHECK(std::abs(a->z() - cplx(0.0, 1.0)) < 1e-6);
}

TEST_CASE("sequence and region grammar") {
  auto s = parse_sequence("nontangential:0.5@1+0i");
  CHECK(s.spec.kind == SeqKind::Nontangential);
  CHECK(s.spec.param == 0.5);
  CHECK(s.anchor.z() == cplx(1.0));
  auto r = parse_region("e:M=2@0+1i");
  CHECK(r.kind == RegionKind::E);
  CHECK(r.M == 2.0);
  CHECK(r.anchor.z() == cplx(0.0, 1.0));
  CHECK_THROWS_AS(parse_sequence("spiral@1"), ParseError);
  CHECK(to_string(SequenceSpec{SeqKind::Horocyclic, 1.0}) == "horocyclic:1");
}
