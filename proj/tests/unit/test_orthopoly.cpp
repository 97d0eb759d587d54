#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "loctrig/errors.hpp"
#include "loctrig/filter.hpp"
#include "loctrig/orthopoly.hpp"
#include "oracles.hpp"

using namespace loctrig;
using oracle::pi;

namespace {

// int_{-1}^{1} f(x) (1-x)^a (1+x)^b dx written over theta = arccos x so the
// endpoint singularities disappear for the half-integer and integer cases.
double weighted_integral(const oracle::GaussRule& rule, double a, double b,
                         const std::function<double(double)>& f) {
  return oracle::integrate(rule, [&](double th) {
    const double s = std::sin(th / 2), c = std::cos(th / 2);
    return f(std::cos(th)) * std::pow(2.0, a + b + 1.0) * std::pow(s, 2 * a + 1) *
           std::pow(c, 2 * b + 1);
  });
}

// Closed form of p_{q,n}(1).
double ultraspherical_one_formula(int q, int n) {
  return std::pow(2.0, 0.5 - 0.5 * q) / std::tgamma(0.5 * q) *
         std::sqrt(std::tgamma(n + q - 1.0) * (2.0 * n + q - 1.0) / std::tgamma(n + 1.0));
}

// Closed form of the orthonormal p_l^{(a,b)}(1) via factorials as Gamma values.
double jacobi_one_formula(double a, double b, int l) {
  const double fact = std::tgamma(l + 1.0) * std::tgamma(l + a + b + 1.0) /
                      (std::tgamma(l + a + 1.0) * std::tgamma(l + b + 1.0));
  const double norm = (2.0 * l + a + b + 1.0) / std::pow(2.0, a + b + 1.0) * fact;
  return std::sqrt(norm) * std::tgamma(l + a + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(l + 1.0));
}

double direct_sum(const std::vector<double>& c, const std::vector<double>& p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * p[k];
  return acc;
}

}  // namespace

TEST(SphereVolume, KnownValues) {
  EXPECT_NEAR(sphere_volume(0), 2.0, 1e-14);
  EXPECT_NEAR(sphere_volume(1), 2 * pi, 1e-14);
  EXPECT_NEAR(sphere_volume(2), 4 * pi, 1e-13);
  EXPECT_NEAR(sphere_volume(3), 2 * pi * pi, 1e-13);
  for (int q = 1; q <= 8; ++q) {
    EXPECT_NEAR(sphere_volume_ratio(q), sphere_volume(q) / sphere_volume(q - 1), 1e-12);
  }
  EXPECT_NEAR(sphere_volume_ratio(1), pi, 1e-14);
  EXPECT_NEAR(sphere_volume_ratio(2), 2.0, 1e-14);
  EXPECT_THROW(sphere_volume(-1), InvalidArgument);
  EXPECT_THROW(sphere_volume_ratio(0), InvalidArgument);
}

TEST(Ultraspherical, ConstantTermAndFirstSlope) {
  const UltrasphericalSystem s2(2), s3(3);
  EXPECT_NEAR(s2.values(0, 0.3)[0], 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s3.values(0, -0.8)[0], std::sqrt(2.0 / pi), 1e-14);
  EXPECT_NEAR(s2.values(1, 1.0)[1], std::sqrt(1.5), 1e-14);
}

TEST(Ultraspherical, ValueAtOneMatchesClosedForm) {
  for (int q = 1; q <= 5; ++q) {
    const UltrasphericalSystem s(q);
    const auto at_one = s.values(50, 1.0);
    for (int n = (q == 1 ? 1 : 0); n <= 50; ++n) {
      const double ref = ultraspherical_one_formula(q, n);
      EXPECT_NEAR(ultraspherical_at_one(q, n), ref, 1e-10 * ref) << q << " " << n;
      EXPECT_NEAR(at_one[n], ref, 1e-10 * ref) << q << " " << n;
    }
  }
  // q = 1, n = 0: the constant 1/sqrt(pi) (limit of the closed form)
  EXPECT_NEAR(ultraspherical_at_one(1, 0), 1.0 / std::sqrt(pi), 1e-14);
}

TEST(Ultraspherical, ValueAtOnePositiveAndNondecreasing) {
  for (int q = 1; q <= 4; ++q) {
    for (int n = 1; n <= 60; ++n) {
      EXPECT_GT(ultraspherical_at_one(q, n), 0.0);
      if (n < 2) continue;
      // on the circle every p_{1,n}(1) with n >= 1 equals sqrt(2/pi), up to lgamma rounding
      if (q == 1) EXPECT_NEAR(ultraspherical_at_one(q, n), std::sqrt(2 / pi), 1e-13);
      else EXPECT_GT(ultraspherical_at_one(q, n), ultraspherical_at_one(q, n - 1));
    }
  }
}

TEST(Ultraspherical, GramMatrixIsIdentity) {
  const auto rule = oracle::gauss_legendre(80, 0.0, pi);
  for (int q = 1; q <= 4; ++q) {
    const UltrasphericalSystem s(q);
    const double w = 0.5 * q - 1.0;
    for (int m = 0; m <= 20; ++m) {
      for (int n = m; n <= 20; ++n) {
        const double g = weighted_integral(rule, w, w, [&](double x) {
          const auto p = s.values(20, x);
          return p[m] * p[n];
        });
        EXPECT_NEAR(g, m == n ? 1.0 : 0.0, 1e-8) << "q=" << q << " " << m << "," << n;
      }
    }
  }
}

TEST(Ultraspherical, ErrorsAndFreeFunction) {
  EXPECT_THROW(UltrasphericalSystem(0), InvalidArgument);
  const UltrasphericalSystem s(2);
  EXPECT_THROW(s.values(-1, 0.0), InvalidArgument);
  EXPECT_EQ(ultraspherical_values(s, 6, 0.25), s.values(6, 0.25));
  EXPECT_EQ(s.backward_coeff(0), 0.0);
}

TEST(Jacobi, NormalizationConstant) {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, -0.5}, {1.5, -0.5}, {1.0, 1.0}, {-0.5, -0.5}}) {
    const JacobiSystem s(a, b);
    const double ref =
        1.0 / std::sqrt(std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                        std::tgamma(a + b + 2));
    EXPECT_NEAR(s.p0(), ref, 1e-14 * ref);
    EXPECT_NEAR(s.values(0, 0.1)[0], ref, 1e-14 * ref);
  }
}

TEST(Jacobi, ReducesToUltrasphericalForQ2) {
  const JacobiSystem j(0.0, 0.0);
  const UltrasphericalSystem u(2);
  for (double x : {-1.0, -0.6, 0.0, 0.33, 0.9, 1.0}) {
    const auto pj = j.values(10, x);
    const auto pu = u.values(10, x);
    for (int n = 0; n <= 10; ++n) EXPECT_NEAR(pj[n], pu[n], 1e-10) << n << " " << x;
  }
}

TEST(Jacobi, ValueAtOneMatchesClosedForm) {
  const JacobiSystem s(0.5, -0.5);
  const auto v = s.values(10, 1.0);
  for (int l = 0; l <= 10; ++l) {
    const double ref = jacobi_one_formula(0.5, -0.5, l);
    EXPECT_NEAR(v[l], ref, 1e-8) << l;
    EXPECT_NEAR(jacobi_at_one(0.5, -0.5, l), ref, 1e-8) << l;
  }
}

TEST(Jacobi, MatchesClassicalRecurrenceAfterNormalization) {
  for (auto [a, b] : {std::pair{0.5, -0.5}, {1.5, -0.5}, {1.0, 1.0}, {2.5, 0.5}}) {
    const JacobiSystem s(a, b);
    for (double x : {-0.95, -0.3, 0.2, 0.77}) {
      const auto got = s.values(25, x);
      const auto ref = oracle::jacobi_orthonormal(a, b, 25, x);
      for (int n = 0; n <= 25; ++n) EXPECT_NEAR(got[n], ref[n], 1e-10 * (1 + std::fabs(ref[n])));
    }
  }
}

TEST(Jacobi, GramMatrixIsIdentity) {
  const auto rule = oracle::gauss_legendre(80, 0.0, pi);
  for (auto [a, b] : {std::pair{0.5, -0.5}, {1.5, -0.5}, {1.0, 1.0}}) {
    const JacobiSystem s(a, b);
    for (int m = 0; m <= 20; ++m) {
      for (int n = m; n <= 20; ++n) {
        const double g = weighted_integral(rule, a, b, [&](double x) {
          const auto p = s.values(20, x);
          return p[m] * p[n];
        });
        EXPECT_NEAR(g, m == n ? 1.0 : 0.0, 1e-8) << a << "," << b << " " << m << "," << n;
      }
    }
  }
}

TEST(Jacobi, RejectsParametersBelowMinusHalf) {
  EXPECT_THROW(JacobiSystem(-0.6, 0.0), InvalidArgument);
  EXPECT_THROW(JacobiSystem(0.0, -0.51), InvalidArgument);
  EXPECT_THROW(jacobi_at_one(-1.0, 0.0, 2), InvalidArgument);
  const JacobiSystem s(0.0, 0.0);
  EXPECT_THROW(s.values(-1, 0.0), InvalidArgument);
}

TEST(Jacobi, ValuesIntoMatchesValues) {
  const JacobiSystem s(1.5, -0.5);
  std::vector<double> buf(13);
  s.values_into(0.4, buf);
  EXPECT_EQ(buf, s.values(12, 0.4));
  EXPECT_EQ(jacobi_values(s, 12, 0.4), s.values(12, 0.4));
}

TEST(Clenshaw, SingleTerm) {
  const std::vector<double> a{0.0, 3.0}, b{0.0, 0.0};
  const std::vector<double> c{2.5};
  EXPECT_DOUBLE_EQ(clenshaw_eval(c, a, b, 0.4, 0.9), 2.5 * 0.4);
}

TEST(Clenshaw, ChebyshevDegreeOne) {
  const std::vector<double> a{0.0, 1.0, 2.0, 2.0}, b{0.0, 0.0, -1.0, -1.0};
  const std::vector<double> c{0.0, 1.0};
  EXPECT_DOUBLE_EQ(clenshaw_eval(c, a, b, 1.0, 0.5), 0.5);
  // T_3(0.5) = 4 * 0.125 - 3 * 0.5 = -1
  const std::vector<double> c3{0.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(clenshaw_eval(c3, a, b, 1.0, 0.5), -1.0, 1e-15);
}

TEST(Clenshaw, EmptyAndMismatched) {
  const std::vector<double> a{0.0, 1.0}, b{0.0, 0.0};
  EXPECT_EQ(clenshaw_eval({}, a, b, 1.0, 0.3), 0.0);
  const std::vector<double> c{1.0, 2.0, 3.0};
  EXPECT_THROW(clenshaw_eval(c, a, b, 1.0, 0.3), InvalidArgument);
  const std::vector<double> b_short{0.0};
  EXPECT_THROW(clenshaw_eval(std::vector<double>{1.0}, a, b_short, 1.0, 0.3), InvalidArgument);
}

TEST(Clenshaw, AgreesWithDirectSummation) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), xs(-1.0, 1.0);
  for (int q = 1; q <= 3; ++q) {
    const UltrasphericalSystem s(q);
    for (int trial = 0; trial < 100; ++trial) {
      const int terms = 1 + static_cast<int>(rng() % 40);
      std::vector<double> c(terms);
      for (auto& v : c) v = coef(rng);
      const auto rec = s.clenshaw_form(terms);
      for (int i = 0; i < 10; ++i) {
        const double x = xs(rng);
        const double ref = direct_sum(c, s.values(terms - 1, x));
        EXPECT_NEAR(clenshaw_eval(c, rec, x), ref, 1e-10 * std::fabs(ref))
            << "q=" << q << " terms=" << terms << " x=" << x;
      }
    }
  }
}

TEST(Clenshaw, FixedPointForQ2) {
  const UltrasphericalSystem s(2);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> c(25);
  for (auto& v : c) v = coef(rng);
  const double ref = direct_sum(c, s.values(24, 0.37));
  EXPECT_NEAR(clenshaw_eval(c, s.clenshaw_form(25), 0.37), ref, 1e-10 * std::fabs(ref));
}

TEST(SphericalKernel, DegreeOneIsConstant) {
  const SphericalKernel k(1, 2);
  for (double t : {-1.0, -0.2, 0.5, 1.0}) EXPECT_NEAR(spherical_kernel_eval(k, t), 1.0, 1e-14);
}

TEST(SphericalKernel, CoefficientsAndDirectPath) {
  const int n = 32, q = 3;
  const SphericalKernel k(n, q);
  const UltrasphericalSystem s(q);
  const auto p1 = s.values(n, 1.0);
  const auto pt = s.values(n, -0.2);
  double ref = 0.0;
  for (int l = 0; l <= n; ++l) ref += oracle::filter(static_cast<double>(l) / n) * p1[l] * pt[l];
  ref *= sphere_volume(q) / sphere_volume(q - 1);
  EXPECT_NEAR(k(-0.2), ref, 1e-10 * std::fabs(ref));
  const auto c = k.coefficients();
  for (std::size_t l = 0; l < c.size(); ++l) {
    EXPECT_NEAR(c[l], sphere_volume_ratio(q) * eval_filter(static_cast<double>(l) / n) * p1[l],
                1e-12 * std::fabs(c[l]) + 1e-300);
  }
}

TEST(SphericalKernel, CircleCaseIsTrigKernel) {
  // q = 1: the kernel at cos(t) is 1 + 2 sum h(l/n) cos(l t)
  const int n = 20;
  const SphericalKernel k(n, 1);
  for (double t : {0.0, 0.3, 1.1, 2.9}) {
    EXPECT_NEAR(k(std::cos(t)), oracle::trig_kernel(n, t), 1e-11 * n);
  }
}

TEST(SphericalKernel, Localized) {
  const SphericalKernel k(50, 1);
  EXPECT_LE(std::fabs(k(std::cos(1.0))), 1e-2 * k(1.0));
}

TEST(SphericalKernel, ArgumentRange) {
  const SphericalKernel k(10, 2);
  EXPECT_NO_THROW(k(1.0 + 1e-13));
  EXPECT_NEAR(k(1.0 + 1e-13), k(1.0), 1e-12);
  EXPECT_NO_THROW(k(-1.0 - 1e-13));
  EXPECT_THROW(k(1.0 + 1e-9), InvalidArgument);
  EXPECT_THROW(k(-1.1), InvalidArgument);
  EXPECT_THROW(SphericalKernel(0, 2), InvalidArgument);
}

// sigma_n on the circle, discretized on 4n equispaced nodes, reproduces
// cos(k theta) and sin(k theta) for k < n/2.
TEST(SphericalKernel, CircleReproduction) {
  const int n = 64;
  const SphericalKernel k(n, 1);
  const int nodes = 4 * n;
  for (int freq = 0; freq < n / 2; ++freq) {
    double worst = 0.0;
    for (int i = 0; i < 97; ++i) {
      const double x = -pi + 2 * pi * (i + 0.31) / 97.0;
      double c = 0.0, s = 0.0;
      for (int j = 0; j < nodes; ++j) {
        const double y = 2 * pi * j / nodes;
        const double w = k(std::cos(x - y)) / nodes;
        c += w * std::cos(freq * y);
        s += w * std::sin(freq * y);
      }
      worst = std::max({worst, std::fabs(c - std::cos(freq * x)), std::fabs(s - std::sin(freq * x))});
    }
    EXPECT_LE(worst, 1e-8) << "k=" << freq;
  }
}
