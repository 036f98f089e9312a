// SPDX-License-Identifier: Apache-2.0

#include "agsq/schedule.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

using namespace agsq;

namespace {

// Independent oracle: closed-form time at which the local schedule reaches s.
// Inverse of schedule_continuous by construction.
double time_of_schedule(double s, double n, double eps1) {
  const double root = std::sqrt(n - 1.0);
  return n / (2.0 * eps1 * root) * (std::atan(root * (2.0 * s - 1.0)) + std::atan(root));
}

}  // namespace

TEST(TotalTime, SmallCasesByHand) {
  EXPECT_NEAR(total_time(2.0, 1.0), M_PI / 2.0, 1e-15);
  EXPECT_NEAR(total_time(4.0, 0.5), (8.0 / std::sqrt(3.0)) * (M_PI / 3.0), 1e-13);
}

TEST(TotalTime, ApproachesAsymptoticForm) {
  const double n = static_cast<double>(1 << 20);
  const double eps1 = 0.1;
  const double asymptotic = M_PI * std::sqrt(n) / (2.0 * eps1);
  EXPECT_NEAR(total_time(n, eps1) / asymptotic, 1.0, 0.01);
}

TEST(TotalTime, RejectsBadDomain) {
  EXPECT_THROW(total_time(1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(total_time(4.0, 0.0), std::invalid_argument);
  EXPECT_THROW(total_time(4.0, -0.2), std::invalid_argument);
  EXPECT_THROW(total_time(4.0, 1.5), std::invalid_argument);
}

TEST(ScheduleContinuous, Boundaries) {
  const double n = 64.0, eps1 = 0.1;
  const double T = total_time(n, eps1);
  EXPECT_DOUBLE_EQ(schedule_continuous(0.0, n, eps1), 0.0);
  EXPECT_NEAR(schedule_continuous(T / 2.0, n, eps1), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(schedule_continuous(T, n, eps1), 1.0);
}

TEST(ScheduleContinuous, StrictlyIncreasing) {
  const double n = 1024.0, eps1 = 0.1;
  const double T = total_time(n, eps1);
  double prev = -1.0;
  for (int i = 0; i <= 2000; ++i) {
    const double s = schedule_continuous(T * i / 2000.0, n, eps1);
    EXPECT_GT(s, prev);
    prev = s;
  }
}

TEST(ScheduleContinuous, RoundTripAgainstClosedFormTime) {
  for (double n : {16.0, 1024.0, 1048576.0}) {
    const double eps1 = 0.1;
    const double T = total_time(n, eps1);
    for (int i = 1; i < 1000; ++i) {
      const double t = T * i / 1000.0;
      const double s = schedule_continuous(t, n, eps1);
      EXPECT_NEAR(time_of_schedule(s, n, eps1) / t, 1.0, 1e-9);
    }
  }
}

TEST(ScheduleContinuous, RejectsOutOfRangeTime) {
  const double n = 16.0, eps1 = 0.1;
  const double T = total_time(n, eps1);
  EXPECT_THROW(schedule_continuous(-1e-9 * T, n, eps1), std::invalid_argument);
  EXPECT_THROW(schedule_continuous(T * (1.0 + 1e-6), n, eps1), std::invalid_argument);
  EXPECT_NO_THROW(schedule_continuous(T * (1.0 + 1e-10), n, eps1));
}

TEST(ScheduleDiscrete, PaperLiteralEndpointAnomalyPreserved) {
  const Schedule sched =
      schedule_discrete(ScheduleSpec{Variant::PaperLiteral, 4, 0.1}, 16.0);
  ASSERT_EQ(sched.steps(), 4);
  EXPECT_NEAR(sched.s[0], 0.4, 1e-14);
  EXPECT_DOUBLE_EQ(sched.s[1], 0.5);
  EXPECT_NEAR(sched.s[2], 2.0 / 3.0, 1e-14);
  EXPECT_DOUBLE_EQ(sched.s[3], 0.0);  // tan(pi) = 0, not the adiabatic endpoint
  EXPECT_FALSE(sched.out_of_range);
}

TEST(ScheduleDiscrete, PaperLiteralMidpointStepIsExactlyHalf) {
  for (int steps : {2, 4, 10, 64}) {
    const Schedule sched =
        schedule_discrete(ScheduleSpec{Variant::PaperLiteral, steps, 0.1}, 256.0);
    EXPECT_DOUBLE_EQ(sched.s[steps / 2 - 1], 0.5);
  }
}

TEST(ScheduleDiscrete, PaperLiteralFlagsOutOfRangeValues) {
  // Steps landing just past the pole of the closed form go far outside [0,1].
  const Schedule sched =
      schedule_discrete(ScheduleSpec{Variant::PaperLiteral, 21, 0.1}, 4.0);
  EXPECT_TRUE(sched.out_of_range);
  bool outside = false;
  for (double s : sched.s) {
    ASSERT_TRUE(std::isfinite(s));
    if (s < 0.0 || s > 1.0) outside = true;
  }
  EXPECT_TRUE(outside);
}

TEST(ScheduleDiscrete, RegularizedEndsAtOneAndIsMonotone) {
  for (double n : {4.0, 16.0, 1024.0}) {
    for (int steps : {1, 4, 33, 256}) {
      const Schedule sched =
          schedule_discrete(ScheduleSpec{Variant::Regularized, steps, 0.1}, n);
      EXPECT_DOUBLE_EQ(sched.s.back(), 1.0);
      for (int l = 0; l < steps; ++l) {
        EXPECT_GE(sched.s[l], 0.0);
        EXPECT_LE(sched.s[l], 1.0);
        if (l > 0) EXPECT_GE(sched.s[l], sched.s[l - 1]);
      }
    }
  }
}

TEST(ScheduleDiscrete, ExactInversionMatchesContinuousAndEndsAtOne) {
  const double n = 64.0, eps1 = 0.2;
  const Schedule sched = schedule_discrete(ScheduleSpec{Variant::ExactInversion, 16, eps1}, n);
  EXPECT_DOUBLE_EQ(sched.s.back(), 1.0);
  for (int l = 1; l <= 16; ++l) {
    EXPECT_DOUBLE_EQ(sched.s[l - 1], schedule_continuous(sched.T * (l / 16.0), n, eps1));
    if (l > 1) EXPECT_GT(sched.s[l - 1], sched.s[l - 2]);
  }
}

TEST(ScheduleDiscrete, TauTimesStepsIsTotalTime) {
  for (Variant v : {Variant::PaperLiteral, Variant::Regularized, Variant::ExactInversion}) {
    const Schedule sched = schedule_discrete(ScheduleSpec{v, 7, 0.1}, 32.0);
    EXPECT_NEAR(sched.tau * sched.steps() / sched.T, 1.0, 1e-12);
  }
}

TEST(ScheduleDiscrete, RejectsBadSpec) {
  EXPECT_THROW(schedule_discrete(ScheduleSpec{Variant::ExactInversion, 0, 0.1}, 16.0),
               std::invalid_argument);
  EXPECT_THROW(schedule_discrete(ScheduleSpec{Variant::ExactInversion, 4, 0.0}, 16.0),
               std::invalid_argument);
  EXPECT_THROW(schedule_discrete(ScheduleSpec{Variant::ExactInversion, 4, 0.1}, 1.0),
               std::invalid_argument);
}

TEST(ScheduleDiscrete, PaperLiteralApproachesExactInversionForLargeN) {
  // Away from the endpoints the large-N angle grid agrees with the exact
  // inverse to within 5/sqrt(N).
  const double n = 65536.0, eps1 = 0.1;
  const int steps = 64;
  const Schedule paper = schedule_discrete(ScheduleSpec{Variant::PaperLiteral, steps, eps1}, n);
  const Schedule exact =
      schedule_discrete(ScheduleSpec{Variant::ExactInversion, steps, eps1}, n);
  for (int l = steps / 10; l <= steps - steps / 10; ++l) {
    EXPECT_LE(std::abs(paper.s[l - 1] - exact.s[l - 1]), 5.0 / std::sqrt(n));
  }
}

TEST(SynthParams, SingleStep) {
  Schedule sched;
  sched.spec = ScheduleSpec{Variant::ExactInversion, 1, 0.1};
  sched.search_size = 16.0;
  sched.s = {0.3};
  sched.tau = 2.5;
  sched.T = 2.5;
  const QaoaParams params = synth_qaoa_params(sched);
  ASSERT_EQ(params.depth(), 1);
  EXPECT_DOUBLE_EQ(params.gamma[0], 2.5 * 0.3);
  EXPECT_DOUBLE_EQ(params.beta[0], 2.5 * (1.0 - 0.3) / 2.0);
}

TEST(SynthParams, ConstantSchedule) {
  const double c = 0.4, tau = 1.25;
  const int steps = 6;
  Schedule sched;
  sched.spec = ScheduleSpec{Variant::ExactInversion, steps, 0.1};
  sched.search_size = 16.0;
  sched.s.assign(steps, c);
  sched.tau = tau;
  sched.T = tau * steps;
  const QaoaParams params = synth_qaoa_params(sched);
  for (int l = 0; l < steps; ++l) {
    EXPECT_DOUBLE_EQ(params.gamma[l], tau * c);
    if (l + 1 < steps) {
      EXPECT_DOUBLE_EQ(params.beta[l], tau * (1.0 - c));
    } else {
      EXPECT_DOUBLE_EQ(params.beta[l], tau * (1.0 - c) / 2.0);
    }
  }
}

TEST(SynthParams, AngleSumIdentity) {
  // sum(gamma) + sum(beta) telescopes to tau R - (tau/2)(1 - s_1).
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> pick_n(1, 16);
  std::uniform_int_distribution<int> pick_steps(1, 1024);
  for (Variant v : {Variant::PaperLiteral, Variant::Regularized, Variant::ExactInversion}) {
    for (int trial = 0; trial < 50; ++trial) {
      const double n = std::pow(2.0, pick_n(rng));
      const int steps = pick_steps(rng);
      const Schedule sched = schedule_discrete(ScheduleSpec{v, steps, 0.1}, n);
      const QaoaParams params = synth_qaoa_params(sched);
      double sum = 0.0;
      for (double g : params.gamma) sum += g;
      for (double b : params.beta) sum += b;
      const double expected = sched.tau * steps - 0.5 * sched.tau * (1.0 - sched.s[0]);
      EXPECT_NEAR(sum, expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(SynthParams, AnglesFiniteIncludingTangentSingularity) {
  for (int steps : {2, 6, 100}) {
    const Schedule sched =
        schedule_discrete(ScheduleSpec{Variant::PaperLiteral, steps, 0.1}, 1024.0);
    const QaoaParams params = synth_qaoa_params(sched);
    for (double g : params.gamma) EXPECT_TRUE(std::isfinite(g));
    for (double b : params.beta) EXPECT_TRUE(std::isfinite(b));
  }
}

TEST(Serialization, JsonSchema) {
  const Schedule sched = schedule_discrete(ScheduleSpec{Variant::Regularized, 4, 0.2}, 16.0);
  const QaoaParams params = synth_qaoa_params(sched);
  const nlohmann::json j = to_json(sched, params);
  EXPECT_EQ(j.at("variant"), "regularized");
  EXPECT_EQ(j.at("N"), 16);
  EXPECT_EQ(j.at("R"), 4);
  EXPECT_DOUBLE_EQ(j.at("eps1"), 0.2);
  EXPECT_DOUBLE_EQ(j.at("tau").get<double>() * 4, j.at("T").get<double>());
  EXPECT_EQ(j.at("s").size(), 4u);
  EXPECT_EQ(j.at("gamma").size(), 4u);
  EXPECT_EQ(j.at("beta").size(), 4u);
}

TEST(Serialization, CsvColumns) {
  const Schedule sched = schedule_discrete(ScheduleSpec{Variant::ExactInversion, 3, 0.1}, 8.0);
  const QaoaParams params = synth_qaoa_params(sched);
  std::ostringstream os;
  write_schedule_csv(os, sched, params);
  std::istringstream is(os.str());
  std::string line;
  ASSERT_TRUE(std::getline(is, line));
  EXPECT_EQ(line, "l,s,gamma,beta");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(VariantNames, RoundTrip) {
  for (Variant v : {Variant::PaperLiteral, Variant::Regularized, Variant::ExactInversion}) {
    EXPECT_EQ(variant_from_string(to_string(v)), v);
  }
  EXPECT_THROW(variant_from_string("bogus"), std::invalid_argument);
}

TEST(Instance, Validation) {
  EXPECT_THROW(SearchInstance(0, 0), std::invalid_argument);
  EXPECT_THROW(SearchInstance(2, 4), std::invalid_argument);
  const SearchInstance ok(3, 7);
  EXPECT_EQ(ok.size(), 8u);
}
