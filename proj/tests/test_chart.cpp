#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "p1inv/chart.hpp"

using namespace p1inv;

namespace {

Configuration limit(int m) {
  std::vector<ProjectivePoint> pts;
  for (int a = 0; a < m; ++a) pts.push_back(ProjectivePoint::affine(0));
  for (int a = 0; a < m; ++a) pts.push_back(ProjectivePoint::infinity());
  return Configuration(std::move(pts));
}

}  // namespace

TEST_CASE("good completions") {
  const auto g = good_completions(4, 2, 5);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == std::vector<Edge>{{3, 6}, {4, 7}});
  CHECK(g[1] == std::vector<Edge>{{3, 7}, {4, 6}});
  CHECK(good_completions(5, 3, 8).size() == 6);
  CHECK(good_completions(3, 2, 4).size() == 1);
}

TEST_CASE("chart at the semistable limit") {
  for (int m : {2, 3, 4, 5}) {
    const ChartPoint p = chart_coordinates(limit(m));
    for (std::size_t r = 0; r < p.W.rows(); ++r) {
      for (std::size_t c = 0; c < p.W.cols(); ++c) {
        CHECK(p.W.at(r, c) == 0);
        CHECK(p.Z.at(r, c) == -1);
      }
    }
    const auto report = verify_chart(p);
    CHECK(report.ok());
    CHECK(report.skipped.empty());
  }
}

TEST_CASE("W and Z by hand on six points") {
  // m = 3, entry (i, j) = (2, 4): W = [1,2][4,6] / ([1,4][2,6]).
  const auto c = Configuration::parse_affine_list("0,1,2,5,7,11");
  const ChartPoint p = chart_coordinates(c);
  CHECK(p.W.at(0, 0) == Rational(3, 25));
  // Z = [1,4][2,6] / ([1,6][4,2])
  CHECK(p.Z.at(0, 0) == Rational(-25, 22));
}

TEST_CASE("chart identities at random configurations") {
  std::mt19937 rng(17);
  for (int n : {8, 10}) {
    for (int t = 0; t < 50; ++t) {
      const auto c = testing::to_config(oracle::random_points(n, rng));
      const auto report = verify_chart(c);
      CHECK(report.rank_one);
      CHECK(report.z_identity);
      CHECK(report.entries_checked == static_cast<std::size_t>((n / 2 - 1) * (n / 2 - 1)));
      CHECK(completion_independent(c, 3));
    }
  }
}

TEST_CASE("coincidences within one half stay in the chart") {
  const auto c = Configuration::parse_affine_list("0,0,3,5,7,7,9,inf");
  CHECK(in_chart(c));
  CHECK(verify_chart(c).ok());
}

TEST_CASE("not in chart") {
  const auto c = Configuration::parse_affine_list("0,1,2,3,4,5,6,0");
  CHECK_FALSE(in_chart(c));
  CHECK_ERROR_KIND(chart_coordinates(c), ErrorKind::NotInChart);
  CHECK_ERROR_KIND(verify_chart(c), ErrorKind::NotInChart);
  CHECK_ERROR_KIND(chart_coordinates(Configuration::parse_affine_list("0,1,2")), ErrorKind::OddVertexCount);
}

TEST_CASE("a matrix with a failing minor is reported") {
  ChartPoint p{3, RationalMatrix(2, 2), RationalMatrix(2, 2)};
  p.W.at(0, 0) = 1;
  p.W.at(1, 1) = 1;
  p.Z.at(0, 0) = 5;
  const auto report = verify_chart(p);
  CHECK_FALSE(report.rank_one);
  CHECK_FALSE(report.z_identity);
  CHECK(report.skipped.size() == 3);
}
