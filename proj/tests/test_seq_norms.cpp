#include "doctest.h"

#include <cmath>
#include <random>

#include "strongfact/error.hpp"
#include "strongfact/seq_norms.hpp"

using namespace strongfact;

namespace {

TruncatedSeq seq(std::initializer_list<double> v) { return TruncatedSeq(std::vector<double>(v)); }

double naive_lp(const std::vector<double>& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

TEST_CASE("lp_norm examples") {
  CHECK(lp_norm(seq({1, 1, 1}), Exponent::rational(1)) == 3.0);
  CHECK(lp_norm(seq({3, 4}), Exponent::rational(2)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm(seq({-2, 1, 0}), Exponent::infinity()) == 2.0);
  CHECK(lp_norm(TruncatedSeq::zeros(5), Exponent::rational(3)) == 0.0);
}

TEST_CASE("lp_norm agrees with the naive sum and does not overflow") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(40);
    for (double& v : x) v = u(gen);
    for (double p : {1.25, 2.0, 3.5, 7.0}) {
      CHECK(lp_norm(TruncatedSeq(x), Exponent::real(p)) == doctest::Approx(naive_lp(x, p)).epsilon(1e-13));
    }
  }
  CHECK(lp_norm(seq({3e200, 4e200}), Exponent::rational(2)) == doctest::Approx(5e200).epsilon(1e-14));
}

TEST_CASE("weighted norm") {
  CHECK(weighted_lp_norm(seq({1, 1}), Exponent::rational(1), seq({2, 3})) == 5.0);
  const TruncatedSeq x = seq({0.3, -2, 5, 1});
  CHECK(weighted_lp_norm(x, Exponent::rational(3), TruncatedSeq::constant(4, 1.0)) ==
        doctest::Approx(lp_norm(x, Exponent::rational(3))).epsilon(1e-15));
  CHECK(weighted_lp_norm(x, Exponent::infinity(), seq({9, 9, 9, 9})) == 5.0);
  CHECK_THROWS_AS(weighted_lp_norm(x, Exponent::rational(2), seq({1, 1})), Error);
}

TEST_CASE("weighted norm of a unit vector with the Hardy-Littlewood weight") {
  for (double p : {4.0 / 3.0, 1.5}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      std::vector<double> W(10);
      for (std::size_t k = 0; k < 10; ++k) W[k] = 1.0 / std::pow(static_cast<double>(k + 2), 2.0 - p);
      const double got = weighted_lp_norm(TruncatedSeq::unit(10, n), Exponent::real(p), TruncatedSeq(W));
      CHECK(got == doctest::Approx(std::pow(1.0 / (n + 1.0), (2.0 - p) / p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("weights must be positive") {
  CHECK_THROWS_AS(SeqSpaceSpec::weighted(Exponent::rational(2), seq({1, 0})), Error);
}

TEST_CASE("kellogg blocks partition the window") {
  const auto blocks = kellogg_blocks(10);
  // -10..-9, -8..-5, -4..-3, -2..-1, 0, 1..2, 3..4, 5..8, 9..10
  REQUIRE(blocks.size() == 9);
  long next = -10;
  for (const auto& b : blocks) {
    CHECK(b.first == next);
    next = b.last + 1;
  }
  CHECK(next == 11);
  CHECK(blocks[4].m == 0);
  CHECK(blocks[5].first == 1);
  CHECK(blocks[5].last == 2);
  CHECK(blocks[7].first == 5);
  CHECK(blocks[7].last == 8);
}

TEST_CASE("kellogg norm examples") {
  const Exponent p = Exponent::rational(3), q = Exponent::rational(2);
  TruncatedSeq e0 = TruncatedSeq(std::vector<double>{0, 0, 0, 0, -7, 0, 0, 0, 0}, IndexDomain::ZSym);
  CHECK(kellogg_norm(e0, p, q) == 7.0);

  // support {1, 2} with values (a, b): one block
  const TruncatedSeq ab(std::vector<double>{0, 0, 0, 0, 0, 0.6, -1.7, 0, 0}, IndexDomain::ZSym);
  CHECK(kellogg_norm(ab, p, q) == doctest::Approx(std::cbrt(std::pow(0.6, 3) + std::pow(1.7, 3))).epsilon(1e-14));

  // support {2, 3}: two blocks combine in l^q
  const TruncatedSeq split(std::vector<double>{0, 0, 0, 0, 0, 0, 1.0, 2.0, 0}, IndexDomain::ZSym);
  CHECK(kellogg_norm(split, p, q) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> v(2 * 37 + 1);
  for (double& x : v) x = u(gen);
  const TruncatedSeq lam(v, IndexDomain::ZSym);
  CHECK(kellogg_norm(lam, p, p) == doctest::Approx(lp_norm(lam, p)).epsilon(1e-13));
  CHECK(kellogg_norm(lam, Exponent::infinity(), Exponent::infinity()) == lp_norm(lam, Exponent::infinity()));

  CHECK_THROWS_AS(kellogg_norm(seq({1, 2, 3}), p, q), Error);
}

TEST_CASE("kellogg L^{p',2} dominates l^{p'}") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t M = 1 + gen() % 64;
    std::vector<double> v(2 * M + 1);
    for (double& x : v) x = u(gen);
    const TruncatedSeq lam(v, IndexDomain::ZSym);
    const Exponent pd = Exponent::real(2.0 + 4.0 * (u(gen) + 1.0));
    CHECK(lp_norm(lam, pd) <= kellogg_norm(lam, pd, Exponent::rational(2)) * (1 + 1e-12));
  }
}

TEST_CASE("dual norm examples") {
  auto r = dual_norm(seq({1, 0, 0}), Exponent::rational(2));
  CHECK(r.value == 1.0);
  CHECK(r.extremizer.vec() == std::vector<double>{1, 0, 0});

  r = dual_norm(seq({1, 1}), Exponent::rational(1));
  CHECK(r.value == 1.0);
  CHECK(r.extremizer.vec() == std::vector<double>{1, 0});

  r = dual_norm(seq({3, 4}), Exponent::rational(2));
  CHECK(r.value == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(r.extremizer[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(r.extremizer[1] == doctest::Approx(0.8).epsilon(1e-15));

  r = dual_norm(TruncatedSeq::zeros(3), Exponent::rational(3));
  CHECK(r.value == 0.0);
  CHECK(r.extremizer.all_zero());
}

TEST_CASE("dual norm extremizer properties") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double s : {1.0, 1.3, 2.0, 4.0, 1e300}) {
    const Exponent e = s > 1e299 ? Exponent::infinity() : Exponent::real(s);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> c(17);
      for (double& v : c) v = u(gen);
      const TruncatedSeq cs(c);
      const auto r = dual_norm(cs, e);
      CHECK(r.value == lp_norm(cs, conjugate(e)));
      CHECK(lp_norm(r.extremizer, e) == doctest::Approx(1.0).epsilon(1e-12));
      double pairing = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) pairing += c[i] * r.extremizer[i];
      CHECK(pairing == doctest::Approx(r.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("norms are homogeneous and monotone") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(21), y(21);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = u(gen);
      y[k] = x[k] * (1.0 + std::abs(u(gen)));
    }
    const double c = 3.0 * u(gen);
    const Exponent p = Exponent::rational(5, 2);
    const TruncatedSeq xs(x, IndexDomain::ZSym), ys(y, IndexDomain::ZSym);
    CHECK(lp_norm(xs.scaled(c), p) == doctest::Approx(std::abs(c) * lp_norm(xs, p)).epsilon(1e-13));
    CHECK(lp_norm(xs, p) <= lp_norm(ys, p));
    CHECK(kellogg_norm(xs.scaled(c), p, Exponent::rational(2)) ==
          doctest::Approx(std::abs(c) * kellogg_norm(xs, p, Exponent::rational(2))).epsilon(1e-13));
    CHECK(kellogg_norm(xs, p, Exponent::rational(2)) <= kellogg_norm(ys, p, Exponent::rational(2)));
  }
}

TEST_CASE("sequence invariants") {
  CHECK_THROWS_AS(TruncatedSeq(std::vector<double>{1, 2}, IndexDomain::ZSym), Error);
  CHECK_THROWS_AS(TruncatedSeq(std::vector<double>{1, NAN}), Error);
  CHECK_THROWS_AS(TruncatedSeq(std::vector<double>{INFINITY}), Error);
  const TruncatedSeq z(std::vector<double>{1, 2, 3, 4, 5}, IndexDomain::ZSym);
  CHECK(z.half_width() == 2);
  CHECK(z.at_z(-2) == 1);
  CHECK(z.at_z(0) == 3);
  CHECK(TruncatedSeq::unit(4, 3).at1(3) == 1.0);
}

TEST_CASE("Holder with the multiplier exponent") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t dp = 1 + gen() % 4, dq = 1 + gen() % 4;
    const Exponent p = Exponent::rational(dp + gen() % 12, dp);
    const Exponent q = Exponent::rational(dq + gen() % 12, dq);
    std::vector<double> h(64), f(64);
    for (std::size_t k = 0; k < 64; ++k) {
      h[k] = u(gen);
      f[k] = u(gen);
    }
    const TruncatedSeq hs(h), fs(f);
    const double lhs = lp_norm(hs.times(fs), q);
    const double rhs = lp_norm(hs, multiplier_exponent(p, q)) * lp_norm(fs, p);
    CHECK(lhs <= rhs * (1 + 1e-12));
  }
}
