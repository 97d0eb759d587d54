#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <vector>

#include "loctrig/datasets.hpp"
#include "loctrig/errors.hpp"
#include "loctrig/sphere_regress.hpp"
#include "oracles.hpp"

using namespace loctrig;
using oracle::pi;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("loctrig_test_" + name);
}

}  // namespace

TEST(CircleEllipse, NoiselessGeometry) {
  const auto d = gen_circle_ellipse(3, 200, 0.0);
  ASSERT_EQ(d.features.rows(), 400u);
  const double e = 0.79;
  const double b = 1.0, a = b / std::sqrt(1 - e * e);
  for (std::size_t i = 0; i < 400; ++i) {
    const double x = d.features(i, 0), y = d.features(i, 1);
    if (i < 200) {
      EXPECT_EQ(d.labels[i], 0);
      EXPECT_NEAR(std::hypot(x, y), 1.0, 1e-10);
    } else {
      EXPECT_EQ(d.labels[i], 1);
      EXPECT_NEAR(x * x / (a * a) + y * y / (b * b), 1.0, 1e-10);
    }
  }
}

TEST(CircleEllipse, DeterministicAndNoisy) {
  const auto a = gen_circle_ellipse(17, 300, 0.05);
  const auto b = gen_circle_ellipse(17, 300, 0.05);
  EXPECT_EQ(a.features, b.features);
  EXPECT_EQ(a.labels, b.labels);
  const auto c = gen_circle_ellipse(18, 300, 0.05);
  EXPECT_NE(a.features, c.features);
  // radial residual on the circle has roughly the requested spread
  double ss = 0.0;
  for (std::size_t i = 0; i < 300; ++i) {
    const double r = std::hypot(a.features(i, 0), a.features(i, 1)) - 1.0;
    ss += r * r;
  }
  EXPECT_NEAR(std::sqrt(ss / 300), 0.05, 0.01);
  EXPECT_THROW(gen_circle_ellipse(1, 10, -1.0), InvalidArgument);
}

TEST(CircleEllipse, ArclengthUniform) {
  // share of samples with |cos t| > 1/2 against the arclength of those arcs
  std::mt19937_64 rng(4);
  const double a = 4.0, b = 1.0;
  const auto t = ellipse_arclength_parameters(rng, a, b, 200000);
  const auto rule = oracle::gauss_legendre(200, 0.0, pi / 2);
  auto arc = [&](double lo, double hi) {
    const auto r = oracle::gauss_legendre(200, lo, hi);
    return oracle::integrate(r, [&](double s) { return std::hypot(a * std::sin(s), b * std::cos(s)); });
  };
  const double quarter = oracle::integrate(rule, [&](double s) { return std::hypot(a * std::sin(s), b * std::cos(s)); });
  const double share = arc(0.0, pi / 3) / quarter;  // |x| > a/2 <=> |cos t| > 1/2
  std::size_t hits = 0;
  for (double s : t) hits += std::fabs(std::cos(s)) > 0.5;
  EXPECT_NEAR(double(hits) / t.size(), share, 0.005);
}

TEST(TwoMoons, NoiselessShapes) {
  const auto d = gen_two_moons(2, 100, 0.0);
  for (std::size_t i = 0; i < 200; ++i) {
    const double x = d.features(i, 0), y = d.features(i, 1);
    if (d.labels[i] == 0) {
      EXPECT_NEAR(std::hypot(x, y), 1.0, 1e-12);
      EXPECT_GE(y, 0.0);
    } else {
      EXPECT_NEAR(std::hypot(x - 1.0, y - 0.5), 1.0, 1e-12);
      EXPECT_LE(y, 0.5);
    }
  }
}

TEST(TwoArcs, LayoutAndFlags) {
  const auto d = gen_two_arcs(5, 500, 0.01);
  ASSERT_EQ(d.data.features.rows(), 1010u);
  ASSERT_EQ(d.on_support.size(), 1010u);
  for (std::size_t i = 0; i < 1010; ++i) {
    const double x = d.data.features(i, 0), y = d.data.features(i, 1);
    if (i < 1000) {
      EXPECT_EQ(d.on_support[i], 1);
      EXPECT_NEAR(std::hypot(x, y), 1.0, 1e-12);
      const double t = std::atan2(y, x);
      EXPECT_EQ(d.data.labels[i], i < 500 ? 0 : 1);
      if (i < 500) EXPECT_TRUE(t >= 0.2 - 1e-12 && t <= 2.6 + 1e-12);
    } else {
      EXPECT_EQ(d.on_support[i], 0);
      EXPECT_EQ(d.data.labels[i], 2);
      EXPECT_LE(std::fabs(x), 1.5);
      EXPECT_LE(std::fabs(y), 1.5);
    }
  }
}

TEST(NoiseAtSnr, HitsTargetExactly) {
  std::mt19937_64 rng(6);
  const auto sig = biexp_signal(0.3, 1.4);
  for (double snr : {0.0, 20.0, 60.0, 80.0}) {
    const auto n = noise_at_snr(rng, sig, snr);
    EXPECT_NEAR(snr_db(sig, n), snr, 1e-9);
  }
  const auto none = noise_at_snr(rng, sig, std::numeric_limits<double>::infinity());
  EXPECT_EQ(none, std::vector<double>(sig.size(), 0.0));
  EXPECT_THROW(noise_at_snr(rng, sig, std::nan("")), InvalidArgument);
}

TEST(Ellipse, TargetAndProjection) {
  // sqrt|cos| turns the rounding of cos(pi/2) into an O(1e-8) offset
  EXPECT_NEAR(ellipse_target(pi / 2), 1.0, 1e-8);
  EXPECT_NEAR(ellipse_target(0.0), 1.0 + std::sin(1.0) / 2, 1e-15);
  for (double t : {-3.0, -1.2, 0.0, 0.7, 2.5, pi}) {
    EXPECT_NEAR(ellipse_theta(ellipse_plane_point(t)), t, 1e-14);
    EXPECT_NEAR(norm2(ellipse_sphere_point(t)), 1.0, 1e-15);
  }
}

TEST(Ellipse, ExactDensityIsInverseSpeed) {
  for (double t : {-2.0, -0.4, 0.3, 1.5, 2.9}) {
    const double h = 1e-6;
    const auto a = ellipse_sphere_point(t + h), b = ellipse_sphere_point(t - h);
    double speed2 = 0.0;
    for (int i = 0; i < 3; ++i) speed2 += std::pow((a[i] - b[i]) / (2 * h), 2);
    EXPECT_NEAR(ellipse_exact_density(t), 1.0 / std::sqrt(speed2), 1e-6 * ellipse_exact_density(t));
  }
}

TEST(Ellipse, SplitsAndNoise) {
  const auto train = gen_ellipse(1, 1000, 40.0, Split::Train);
  const auto test = gen_ellipse(1, 1000, 40.0, Split::Test);
  ASSERT_EQ(train.achieved_snr_db.size(), 1u);
  EXPECT_NEAR(train.achieved_snr_db[0], 40.0, 1e-9);
  EXPECT_TRUE(test.achieved_snr_db.empty());
  for (std::size_t i = 0; i < test.raw.rows(); ++i) {
    EXPECT_DOUBLE_EQ(test.targets(i, 0), ellipse_target(ellipse_theta(test.raw.row(i))));
  }
  EXPECT_NE(train.raw, test.raw);
  const auto emb = ellipse_embed(train.raw);
  EXPECT_EQ(emb.cols(), 3u);
  for (std::size_t i = 0; i < emb.rows(); ++i) EXPECT_NEAR(norm2(emb.row(i)), 1.0, 1e-14);
}

TEST(Biexp, SignalFormulaAndEmbedding) {
  const auto s = biexp_signal(0.1, 1.1);
  ASSERT_EQ(s.size(), 100u);
  EXPECT_DOUBLE_EQ(s[0], 0.7 * std::exp(-0.1) + 0.3 * std::exp(-1.1));
  EXPECT_DOUBLE_EQ(s[9], 0.7 * std::exp(-1.0) + 0.3 * std::exp(-11.0));
  const auto d = gen_biexp(3, 50, std::numeric_limits<double>::infinity(), Split::Train);
  for (std::size_t i = 0; i < 50; ++i) {
    const double l1 = d.targets(i, 0), l2 = d.targets(i, 1);
    EXPECT_TRUE(l1 >= 0.1 && l1 <= 0.7);
    EXPECT_TRUE(l2 >= 1.1 && l2 <= 1.7);
    const auto ref = biexp_signal(l1, l2);
    for (std::size_t k = 0; k < 100; ++k) EXPECT_EQ(d.raw(i, k), ref[k]);
  }
  const auto e = biexp_embed(d.raw);
  EXPECT_EQ(e.cols(), 101u);
  // first coordinate before normalization is 1000 y_1 - 380, last is 100
  for (std::size_t i = 0; i < e.rows(); ++i) {
    EXPECT_NEAR(norm2(e.row(i)), 1.0, 1e-14);
    EXPECT_NEAR(e(i, 0) / e(i, 100), (1000 * d.raw(i, 0) - 380) / 100, 1e-12);
    EXPECT_NEAR(e(i, 3) / e(i, 100), 1000 * d.raw(i, 3) / 100, 1e-12);
  }
}

TEST(Biexp, PerSampleSnr) {
  const auto d = gen_biexp(8, 40, 60.0, Split::Test);
  ASSERT_EQ(d.achieved_snr_db.size(), 40u);
  for (double v : d.achieved_snr_db) EXPECT_NEAR(v, 60.0, 0.5);
  EXPECT_THROW(gen_biexp(1, 0, 10.0, Split::Train), InvalidArgument);
}

TEST(Darcy, BoundaryConditions) {
  for (double p : {0.1, 0.17, 0.25}) {
    for (double s : {1.5, 2.0, 2.5}) {
      EXPECT_NEAR(darcy_solution(p, s, 0.0), 1.0, 1e-10);
      EXPECT_NEAR(darcy_solution(p, s, 1.0), 0.0, 1e-10);
    }
  }
}

TEST(Darcy, MatchesFiniteDifferences) {
  const int cells = 10000;
  for (auto [p, s] : {std::pair{0.1, 1.5}, {0.25, 2.5}, {0.18, 2.1}}) {
    const auto y = oracle::darcy_fd(p, s, cells);
    double worst = 0.0;
    for (int i = 0; i <= cells; ++i) {
      worst = std::max(worst, std::fabs(y[i] - darcy_solution(p, s, double(i) / cells)));
    }
    EXPECT_LE(worst, 1e-6) << p << " " << s;
  }
}

TEST(Darcy, DesignAndGenerator) {
  const auto t = darcy_design(9);
  ASSERT_EQ(t.size(), 100u);
  EXPECT_EQ(t, darcy_design(9));
  for (double v : t) EXPECT_TRUE(v >= 0.0 && v < 1.0);
  const auto d = gen_darcy(9, 30, std::numeric_limits<double>::infinity(), Split::Train, t);
  for (std::size_t i = 0; i < 30; ++i) {
    const double p = d.targets(i, 0), s = d.targets(i, 1);
    EXPECT_TRUE(p >= 0.1 && p <= 0.25);
    EXPECT_TRUE(s >= 1.5 && s <= 2.5);
    for (std::size_t k = 0; k < 100; ++k) EXPECT_EQ(d.raw(i, k), darcy_solution(p, s, t[k]));
  }
  const auto again = gen_darcy(9, 30, std::numeric_limits<double>::infinity(), Split::Train, t);
  EXPECT_EQ(d.raw, again.raw);
}

TEST(Csv, RoundTripIsExact) {
  const auto d = gen_biexp(2, 20, 30.0, Split::Train);
  const auto path = temp_file("biexp.csv");
  write_csv(path, to_table(d));
  const auto table = read_csv(path);
  EXPECT_EQ(table.header.size(), 102u);
  const auto back = regression_from_table(table, 100);
  EXPECT_EQ(back.raw, d.raw);
  EXPECT_EQ(back.targets, d.targets);

  const auto l = gen_circle_ellipse(3, 50, 0.05);
  write_csv(path, to_table(l));
  const auto lb = labeled_from_table(read_csv(path));
  EXPECT_EQ(lb.features, l.features);
  EXPECT_EQ(lb.labels, l.labels);
  std::filesystem::remove(path);
}

TEST(Csv, MalformedInput) {
  const auto path = temp_file("bad.csv");
  {
    std::ofstream(path) << "a,b\n1,2\n3\n";
  }
  EXPECT_THROW(read_csv(path), DataFormatError);
  {
    std::ofstream(path) << "a,b\n1,x\n";
  }
  EXPECT_THROW(read_csv(path), DataFormatError);
  {
    std::ofstream(path) << "";
  }
  EXPECT_THROW(read_csv(path), DataFormatError);
  {
    std::ofstream(path) << "x,label\n0.5,1.5\n";
  }
  EXPECT_THROW(labeled_from_table(read_csv(path)), DataFormatError);
  {
    std::ofstream(path) << "x,y\n0.5,1.5\n";
  }
  EXPECT_THROW(regression_from_table(read_csv(path), 2), DataFormatError);
  std::filesystem::remove(path);
  EXPECT_THROW(read_csv(temp_file("missing.csv")), DataFormatError);
}

TEST(Rng, StagesAreIndependentStreams) {
  auto a = stage_rng(5, Stage::TrainParameters);
  auto b = stage_rng(5, Stage::TrainNoise);
  auto c = stage_rng(5, Stage::TrainParameters);
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_EQ(x, c());
  auto hi = stage_rng(5ull + (1ull << 32), Stage::TrainParameters);
  EXPECT_NE(x, hi());
}
