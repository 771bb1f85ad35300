#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diastat/errors.hpp"
#include "diastat/geometry.hpp"

using namespace diastat;
using geometry::Complex;
using geometry::DomainModel;
using geometry::Point;

namespace {

constexpr double kPi = std::numbers::pi;

Point scalar_point(Complex z) {
  Point p(1);
  p[0] = z;
  return p;
}

Point random_point(const DomainModel& model, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point z(model.dim());
  for (int i = 0; i < model.dim(); ++i) z[i] = Complex(gauss(rng), gauss(rng));
  const double target = 0.95 * std::sqrt(unit(rng));
  const double radius = model.boundary_radius(z);
  if (radius > 0.0) z *= target / radius;
  return z;
}

}  // namespace

TEST_CASE("potential closed forms") {
  const auto disk = DomainModel::disk();
  CHECK(disk.potential(scalar_point(0.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(disk.potential(scalar_point(0.5)) ==
        doctest::Approx(-std::log(0.75)).epsilon(1e-14));

  const auto block = DomainModel::type_i(2, 2);
  Point diag(4);
  diag << 0.5, 0.0, 0.0, 0.5;
  CHECK(block.potential(diag) ==
        doctest::Approx(-std::log(0.75 * 0.75)).epsilon(1e-13));

  CHECK_THROWS_AS(disk.potential(scalar_point(1.0)), PointOutsideDomainError);
  CHECK_THROWS_AS(block.potential(Point(2)), DimensionMismatchError);
}

TEST_CASE("diastasis closed forms and scale linearity") {
  const auto disk = DomainModel::disk();
  CHECK(disk.diastasis(scalar_point(0.0), scalar_point(0.5)) ==
        doctest::Approx(-std::log(0.75)).epsilon(1e-14));
  CHECK(disk.diastasis(scalar_point(0.5), scalar_point(0.5)) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const auto scaled = DomainModel::disk(2.0);
  CHECK(scaled.diastasis(scalar_point(0.0), scalar_point(0.5)) ==
        doctest::Approx(-2.0 * std::log(0.75)).epsilon(1e-14));
}

TEST_CASE("volume density closed forms") {
  const auto disk = DomainModel::disk();
  CHECK(disk.volume_density(scalar_point(0.0)) == doctest::Approx(1.0));
  CHECK(disk.volume_density(scalar_point(0.5)) ==
        doctest::Approx(std::pow(0.75, -2.0)).epsilon(1e-14));

  const auto ball2 = DomainModel::ball(2);
  Point z(2);
  z << 0.5, 0.0;
  CHECK(ball2.volume_density(z) == doctest::Approx(std::pow(0.75, -3.0)).epsilon(1e-14));

  // Scale covariance mu^n.
  const auto scaled = DomainModel::ball(2, 3.0);
  CHECK(scaled.volume_density(z) ==
        doctest::Approx(9.0 * std::pow(0.75, -3.0)).epsilon(1e-14));
}

TEST_CASE("closed form kernel on the disk") {
  const auto disk = DomainModel::disk();
  CHECK(disk.closed_form_kernel(2.0, scalar_point(0.0), scalar_point(0.0)).real() ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(disk.closed_form_kernel(2.0, scalar_point(0.5), scalar_point(0.0)).real() ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(disk.closed_form_kernel(2.0, scalar_point(0.5), scalar_point(0.5)).real() ==
        doctest::Approx(std::pow(0.75, -2.0) / kPi).epsilon(1e-14));

  CHECK_THROWS_AS(disk.closed_form_kernel(1.0, scalar_point(0.0), scalar_point(0.0)),
                  DivergentNormError);
  CHECK_THROWS_AS(
      DomainModel::type_i(2, 2).closed_form_kernel(5.0, Point::Zero(4), Point::Zero(4)),
      UnsupportedError);
}

TEST_CASE("property: diastasis symmetry, vanishing and nonnegativity") {
  std::mt19937 rng(7041776);
  const std::vector<DomainModel> models = {
      DomainModel::disk(), DomainModel::ball(2), DomainModel::polydisk(2),
      DomainModel::type_i(2, 2), DomainModel::ball(3, 2.5)};
  for (const auto& model : models) {
    CAPTURE(model.describe());
    for (int trial = 0; trial < 1000; ++trial) {
      const Point w = random_point(model, rng);
      const Point z = random_point(model, rng);
      const double forward = model.diastasis(w, z);
      const double backward = model.diastasis(z, w);
      CHECK(std::abs(forward - backward) <= 1e-12 * (1.0 + std::abs(forward)));
      CHECK(forward >= -1e-12);
      CHECK(model.diastasis(z, z) == doctest::Approx(0.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("property: one-dimensional kinds agree pointwise") {
  std::mt19937 rng(58);
  const auto disk = DomainModel::disk();
  const std::vector<DomainModel> aliases = {
      DomainModel::ball(1), DomainModel::polydisk(1), DomainModel::type_i(1, 1)};
  for (int trial = 0; trial < 200; ++trial) {
    const Point z = random_point(disk, rng);
    const Point w = random_point(disk, rng);
    const double pot = disk.potential(z);
    const double dia = disk.diastasis(w, z);
    const double vol = disk.volume_density(z);
    const Complex ker = disk.closed_form_kernel(2.0, z, w);
    for (const auto& alias : aliases) {
      CAPTURE(alias.describe());
      CHECK(alias.potential(z) == doctest::Approx(pot).epsilon(1e-12));
      CHECK(alias.diastasis(w, z) == doctest::Approx(dia).epsilon(1e-12));
      CHECK(alias.volume_density(z) == doctest::Approx(vol).epsilon(1e-12));
      const Complex alias_ker = alias.closed_form_kernel(2.0, z, w);
      CHECK(std::abs(alias_ker - ker) <= 1e-12 * std::abs(ker));
    }
  }
}

TEST_CASE("property: potential and diastasis are linear in mu") {
  std::mt19937 rng(99);
  const auto base = DomainModel::ball(2);
  const auto scaled = DomainModel::ball(2, 3.5);
  for (int trial = 0; trial < 200; ++trial) {
    const Point z = random_point(base, rng);
    const Point w = random_point(base, rng);
    CHECK(scaled.potential(z) == doctest::Approx(3.5 * base.potential(z)).epsilon(1e-12));
    CHECK(scaled.diastasis(w, z) ==
          doctest::Approx(3.5 * base.diastasis(w, z)).epsilon(1e-12));
  }
}

TEST_CASE("property: kernel is Hermitian with PSD Gram matrices") {
  std::mt19937 rng(314159);
  const std::vector<DomainModel> models = {DomainModel::disk(), DomainModel::ball(2),
                                           DomainModel::polydisk(2)};
  for (const auto& model : models) {
    CAPTURE(model.describe());
    const double lambda = model.lambda_threshold() + 1.5;
    std::vector<Point> points;
    for (int i = 0; i < 12; ++i) points.push_back(random_point(model, rng));

    Eigen::MatrixXcd gram(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < points.size(); ++j) {
        gram(i, j) = model.closed_form_kernel(lambda, points[i], points[j]);
      }
    }
    const double scale = gram.cwiseAbs().maxCoeff();
    CHECK((gram - gram.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * scale);
  }
}

TEST_CASE("typeI boundary radius is the top singular value") {
  const auto block = DomainModel::type_i(2, 2);
  Point z(4);
  z << 0.6, 0.0, 0.0, 0.3;
  CHECK(block.boundary_radius(z) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(block.contains(z));
  z << 0.8, 0.8, 0.0, 0.0;  // row norm sqrt(1.28) > 1
  CHECK_FALSE(block.contains(z));
}

TEST_CASE("complex literal parsing") {
  CHECK(geometry::parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(geometry::parse_complex("-0.2-0.1i") == Complex(-0.2, -0.1));
  CHECK(geometry::parse_complex("0.3i") == Complex(0.0, 0.3));
  CHECK(geometry::parse_complex("1+i") == Complex(1.0, 1.0));
  CHECK(geometry::parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(geometry::parse_complex("1e-3+2e-4i") == Complex(1e-3, 2e-4));
  CHECK_THROWS_AS(geometry::parse_complex("banana"), InvalidParameterError);
  CHECK_THROWS_AS(geometry::parse_complex(""), InvalidParameterError);

  const Point p = geometry::parse_point("0.4+0i,0.1-0.2i");
  CHECK(p.size() == 2);
  CHECK(p[1] == Complex(0.1, -0.2));
}
