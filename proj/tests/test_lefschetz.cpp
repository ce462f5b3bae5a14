#include <gtest/gtest.h>

#include "lefschetz/lefschetz.hpp"

using namespace lefschetz;

namespace {

std::vector<Failure> F(std::initializer_list<Failure> f) { return f; }

}  // namespace

TEST(ClosedFormHilbert, FourFormsMatchComputation) {
  for (int k = 3; k <= 12; ++k) {
    auto closed = closed_form_hilbert_r4(k);
    EXPECT_EQ(closed(k), ring_dim(k) - 4);
    EXPECT_EQ(closed(2 * k - 3), 3 * k - 3);
    EXPECT_EQ(closed(2 * k - 2), k);
    EXPECT_EQ(closed, hilbert_function(QuotientSpec::uniform(k, 4))) << "k=" << k;
  }
}

TEST(ClosedFormHilbert, CompleteIntersection) {
  EXPECT_EQ(closed_form_hilbert_ci(2).values, (std::vector<std::int64_t>{1, 3, 3, 1}));
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(closed_form_hilbert_ci(k), hilbert_function(QuotientSpec::uniform(k, 3)));
}

TEST(CriticalDegrees, ClosedFormExamples) {
  // k=7, j=5 gives a = 10 < j + k - 1, so the closed form refuses and the scan supplies (10, 11)
  EXPECT_THROW(critical_degrees_closed_form(7, 5), OutOfRange);
  EXPECT_EQ(critical_degrees_scan(hilbert_function(QuotientSpec::uniform(7, 4)), 5), (CriticalDegrees{10, 11}));
  for (int k0 = 2; k0 <= 6; ++k0) EXPECT_EQ(critical_degrees_closed_form(3 * k0, 3), (CriticalDegrees{4 * k0, 4 * k0}));
  for (int k0 = 2; k0 <= 6; ++k0)
    EXPECT_EQ(critical_degrees_closed_form(3 * k0 + 2, 4), (CriticalDegrees{4 * k0 + 3, 4 * k0 + 4}));
  EXPECT_THROW(critical_degrees_closed_form(3, 3), OutOfRange);  // a = 4 < j + k - 1 = 5
  EXPECT_THROW(critical_degrees_closed_form(2, 3), PreconditionViolation);
}

TEST(CriticalDegrees, ScanExamples) {
  HilbertFunction h{{1, 3, 6, 6, 3}};
  EXPECT_EQ(critical_degrees_scan(h, 3), (CriticalDegrees{4, 4}));
  EXPECT_EQ(critical_degrees_scan(h, 2), (CriticalDegrees{3, 4}));
  EXPECT_EQ(critical_degrees_scan(h, 9), (CriticalDegrees{4, 5}));
}

TEST(CriticalDegrees, ClosedFormMatchesScanWhereDefined) {
  int compared = 0;
  for (int k = 3; k <= 30; ++k) {
    auto h = k <= 12 ? hilbert_function(QuotientSpec::uniform(k, 4)) : closed_form_hilbert_r4(k);
    for (int j = 2; j <= 5; ++j) {
      try {
        auto closed = critical_degrees_closed_form(k, j);
        EXPECT_EQ(closed, critical_degrees_scan(h, j)) << "k=" << k << " j=" << j;
        ++compared;
      } catch (const OutOfRange&) {
      }
    }
  }
  EXPECT_GT(compared, 90);
}

TEST(C1C2, Examples) {
  for (int k = 3; k <= 10; ++k)
    for (int d = k + 1; d <= 2 * k - 2; ++d) EXPECT_EQ(c1c2(k, 2, d).difference, 6 * d - 8 * k + 3);
  EXPECT_EQ(c1c2(6, 5, 9).difference, 0);
  EXPECT_EQ(c1c2(3, 3, 4).difference, 0);
  EXPECT_EQ(c1c2(6, 5, 9).which, C1C2Case::SmallDegree);  // 9 < j + k - 1
  EXPECT_EQ(c1c2(6, 5, 10).which, C1C2Case::LargeDegree);
  EXPECT_EQ(c1c2(6, 5, 10).difference, 15 * 10 - 20 * 6 - 15);
  EXPECT_THROW(c1c2(6, 2, 5), OutOfRange);
  EXPECT_THROW(c1c2(6, 2, 11), OutOfRange);
}

TEST(C1C2, DifferenceMatchesHilbertFunctionInBothCases) {
  bool saw_small = false, saw_large = false;
  for (int k = 3; k <= 12; ++k) {
    auto h = hilbert_function(QuotientSpec::uniform(k, 4));
    for (int j = 1; j <= 5; ++j) {
      for (int d = k; d <= 2 * k - 2; ++d) {
        auto c = c1c2(k, j, d);
        EXPECT_EQ(c.difference, h(d - j) - h(d)) << "k=" << k << " j=" << j << " d=" << d;
        EXPECT_EQ(c.c1 - c.c2, c.difference) << "k=" << k << " j=" << j << " d=" << d;
        (c.which == C1C2Case::SmallDegree ? saw_small : saw_large) = true;
      }
    }
  }
  EXPECT_TRUE(saw_small);
  EXPECT_TRUE(saw_large);
}

TEST(Peaks, Examples) {
  auto a = peaks(5, 3);
  EXPECT_EQ(a.peak_case, 1);
  EXPECT_EQ(a.peaks, std::vector<int>{2});
  auto b = peaks(5, 7);
  EXPECT_EQ(b.peak_case, 2);
  EXPECT_EQ(b.peaks, std::vector<int>{7});
  auto c = peaks(5, 4);
  EXPECT_EQ(c.peak_case, 3);
  EXPECT_EQ(c.peaks, (std::vector<int>{3, 4}));
  EXPECT_THROW(peaks(4, 3), PreconditionViolation);
}

TEST(Peaks, MatchArgmaxOfComputedHilbertFunction) {
  for (int r = 5; r <= 8; ++r)
    for (int k = 2; k <= 12; ++k)
      EXPECT_EQ(peaks(r, k).peaks, argmax_degrees(hilbert_function(QuotientSpec::uniform(k, r))))
          << "r=" << r << " k=" << k;
}

TEST(Predict, Examples) {
  EXPECT_EQ(predict(9, 4, 3), F({{12, 1}}));
  EXPECT_EQ(predict(7, 4, 4), F({{10, 1}}));
  EXPECT_EQ(predict(8, 4, 5), F({{12, 1}}));
  EXPECT_EQ(predict(6, 4, 5), F({{9, 3}}));
  EXPECT_TRUE(predict(5, 4, 3).empty());
  EXPECT_TRUE(predict(10, 7, 2).empty());
  EXPECT_THROW(predict(12, 4, 6), UnsupportedParameters);
  EXPECT_THROW(predict(9, 5, 3), UnsupportedParameters);
  EXPECT_THROW(predict(3, 4, 5), UnsupportedParameters);
}

TEST(Scan, Examples) {
  auto a = scan(QuotientSpec::uniform(3, 4), 3);
  EXPECT_EQ(a.failures, F({{4, 1}}));
  EXPECT_EQ(a.agreement, true);

  auto b = scan(QuotientSpec::uniform(4, 4), 5);
  EXPECT_EQ(b.failures, F({{6, 1}}));
  auto v = std::find_if(b.verdicts.begin(), b.verdicts.end(), [](const RankVerdict& x) { return x.degree == 6; });
  EXPECT_LT(v->dim_source, v->dim_target);  // injectivity fails

  auto c = scan(QuotientSpec::uniform(5, 4), 3);
  EXPECT_TRUE(c.failures.empty());
  EXPECT_EQ(c.agreement, true);

  auto d = scan(QuotientSpec::uniform(4, 4), 4);
  EXPECT_EQ(d.failures, F({{6, 1}}));
  auto w = std::find_if(d.verdicts.begin(), d.verdicts.end(), [](const RankVerdict& x) { return x.degree == 6; });
  EXPECT_GT(w->dim_source, w->dim_target);  // surjectivity fails
}

TEST(Scan, FourFormsAgreeWithPredictionAndFailInOneDegreeAtMost) {
  for (int k = 3; k <= 12; ++k) {
    auto reports = scan_powers(QuotientSpec::uniform(k, 4), {2, 3, 4, 5});
    for (const auto& rep : reports) {
      if (rep.power == 5 && k == 3) {
        EXPECT_FALSE(rep.prediction.has_value());
        EXPECT_TRUE(rep.failures.empty());
        continue;
      }
      ASSERT_TRUE(rep.agreement.has_value());
      EXPECT_TRUE(*rep.agreement) << "k=" << k << " j=" << rep.power;
      EXPECT_LE(rep.failures.size(), 1u);
      EXPECT_TRUE(rep.monotone_surjectivity);
    }
  }
}

TEST(Scan, SquareHasMaximalRankForFiveToSevenForms) {
  for (int r = 5; r <= 7; ++r) {
    for (int k = 3; k <= 10; ++k) {
      auto rep = scan(QuotientSpec::uniform(k, r), 2);
      EXPECT_TRUE(rep.failures.empty()) << "r=" << r << " k=" << k;
      EXPECT_TRUE(rep.monotone_surjectivity);
    }
  }
}

TEST(Scan, PointsEngineMatchesAlgebra) {
  for (int r = 4; r <= 6; ++r) {
    for (int k = 3; k <= 9; ++k) {
      auto spec = QuotientSpec::uniform(k, r);
      auto alg = scan_powers(spec, {2, 3, 4, 5, 6});
      auto pts = scan_powers(spec, {2, 3, 4, 5, 6}, {{}, ScanMode::Full, Engine::Points});
      for (std::size_t i = 0; i < alg.size(); ++i) {
        EXPECT_EQ(alg[i].failures, pts[i].failures) << "r=" << r << " k=" << k << " j=" << alg[i].power;
        EXPECT_EQ(alg[i].hilbert, pts[i].hilbert);
      }
    }
  }
}

TEST(Scan, TwoDegreeModeCertifiesExactlyWhenFullScanIsClean) {
  for (int k = 3; k <= 12; ++k) {
    for (int j = 2; j <= 6; ++j) {
      auto spec = QuotientSpec::uniform(k, 4);
      auto full = scan(spec, j);
      auto fast = scan(spec, j, {{}, ScanMode::TwoDegree, Engine::Algebra});
      ASSERT_TRUE(fast.two_degree_certificate.has_value());
      EXPECT_EQ(*fast.two_degree_certificate, full.failures.empty()) << "k=" << k << " j=" << j;
    }
  }
  EXPECT_THROW(scan(QuotientSpec::uniform(4, 5), 2, {{}, ScanMode::TwoDegree, Engine::Algebra}),
               UnsupportedParameters);
}

TEST(Scan, DegenerateLargePowerHasNoFailures) {
  auto rep = scan(QuotientSpec::uniform(3, 4), 9);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.critical, (CriticalDegrees{4, 5}));
}

TEST(Scan, MixedExponentsHaveNoPrediction) {
  auto rep = scan({{2, 3, 3, 4}}, 2);
  EXPECT_FALSE(rep.prediction.has_value());
  EXPECT_FALSE(rep.agreement.has_value());
  EXPECT_THROW(scan({{2, 3, 3, 4}}, 2, {{}, ScanMode::Full, Engine::Points}), UnsupportedParameters);
  EXPECT_THROW(scan(QuotientSpec::uniform(3, 4), 0), PreconditionViolation);
}

TEST(ExperimentTable, SixFormsSmallRange) {
  auto rows = experiment_table(6, 3, 6, 3, 15);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (TableRow{3, {5, 10, 15}}));
  EXPECT_EQ(rows[1], (TableRow{4, {7, 8, 12, 13}}));
  EXPECT_EQ(rows[2], (TableRow{5, {9, 10, 11, 14, 15}}));
  EXPECT_EQ(rows[3], (TableRow{6, {9, 11, 12, 13, 14}}));
}

TEST(ExperimentTable, SixFormsFullRangeViaPoints) {
  auto rows = experiment_table(6, 3, 5, 3, 30, 0, Prime{}, {{}, ScanMode::Full, Engine::Points});
  EXPECT_EQ(rows[0].k_values, (std::vector<int>{5, 10, 15, 20, 25, 30}));
  EXPECT_EQ(rows[1].k_values, (std::vector<int>{7, 8, 12, 13, 17, 18, 22, 23, 27, 28}));
  std::vector<int> five(rows[2].k_values.begin(), std::find_if(rows[2].k_values.begin(), rows[2].k_values.end(),
                                                                [](int k) { return k > 16; }));
  EXPECT_EQ(five, (std::vector<int>{9, 10, 11, 14, 15, 16}));
}

TEST(ExperimentTable, FourFormsMatchPredictions) {
  auto rows = experiment_table(4, 3, 5, 3, 12);
  for (const auto& row : rows) {
    std::vector<int> expected;
    for (int k = 3; k <= 12; ++k)
      if (prediction_in_scope(k, 4, row.j) && !predict(k, 4, row.j).empty()) expected.push_back(k);
    EXPECT_EQ(row.k_values, expected) << "j=" << row.j;
  }
  EXPECT_THROW(experiment_table(4, 5, 3, 3, 12), PreconditionViolation);
}

TEST(FourPointPowerDim, SmallValues) {
  EXPECT_EQ(four_point_power_dim(1, 2), 2);  // conics through four points
  EXPECT_EQ(four_point_power_dim(2, 4), 3);
}
