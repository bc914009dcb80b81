#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "wbeuler/quadrature.hpp"

using namespace wbeuler;

TEST(Gauss, WeightsSumToOne) {
  for (int n = 1; n <= 6; ++n) {
    const GaussRule& r = gauss_legendre(n);
    double s = 0.0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, 1.0, 1e-15) << n;
  }
}

TEST(Gauss, ExactUpToDegree) {
  for (int n = 1; n <= 6; ++n) {
    const GaussRule& r = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double q = 0.0;
      for (int i = 0; i < r.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 ? 0.0 : std::pow(0.5, k) / (k + 1);
      EXPECT_NEAR(q, exact, 1e-15) << n << " " << k;
    }
  }
}

TEST(Gauss, NodesForOrder) {
  EXPECT_EQ(gauss_nodes_for_order(1), 1);
  EXPECT_EQ(gauss_nodes_for_order(3), 2);
  EXPECT_EQ(gauss_nodes_for_order(5), 3);
  EXPECT_EQ(gauss_nodes_for_order(7), 4);
}

TEST(Gauss, CompositeAgainstKronrod) {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
  const double ref = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, -1.0, 2.0, 10, 1e-15);
  EXPECT_NEAR(composite_gauss(f, -1.0, 2.0, 32, 4), ref, 1e-13);
}
