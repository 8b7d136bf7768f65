#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sridge/bench.hpp"
#include "sridge/core.hpp"

using namespace sridge;
using namespace sridge::bench;

TEST(Bench, LogLogSlope) {
  std::vector<double> x{16, 32, 64, 128}, y;
  for (double v : x) y.push_back(3 * v * v);
  EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-14);
  EXPECT_THROW(loglog_slope({1}, {1}), DomainError);
  EXPECT_THROW(loglog_slope({1, 2}, {1, 0}), DomainError);
  EXPECT_THROW(loglog_slope({2, 2}, {1, 3}), DomainError);
}

TEST(Bench, Validation) {
  BenchOptions o;
  o.min_L = 8;
  EXPECT_THROW(validate(o), DomainError);
  o.min_L = 48;
  EXPECT_THROW(validate(o), DomainError);
  o.min_L = 64;
  o.max_L = 32;
  EXPECT_THROW(validate(o), DomainError);
  o.min_L = 16;
  o.max_L = 2048;
  EXPECT_THROW(validate(o), DomainError);
  o.max_L = 32;
  o.trials = 0;
  EXPECT_THROW(validate(o), DomainError);
  o.trials = 1;
  EXPECT_NO_THROW(validate(o));
}

TEST(Bench, SweepAndCsvRoundTrip) {
  BenchOptions o;
  o.min_L = 16;
  o.max_L = 64;
  o.trials = 2;
  const auto records = run_ridgelet_bench(o);
  ASSERT_EQ(records.size(), 3u);
  for (const auto& r : records) {
    EXPECT_LT(r.max_abs_error, 1e-12);
    EXPECT_GT(r.wall_seconds, 0.0);
    EXPECT_EQ(r.trials, 2);
  }
  EXPECT_EQ(run_ridgelet_bench(o)[1].max_abs_error, records[1].max_abs_error);

  std::stringstream csv;
  write_csv(csv, records);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "L,max_abs_error,wall_seconds,trials");
  const auto back = read_csv(csv);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].L, records[i].L);
    EXPECT_EQ(back[i].max_abs_error, records[i].max_abs_error);
    EXPECT_EQ(back[i].wall_seconds, records[i].wall_seconds);
  }
  const auto a = fit_slopes(records), b = fit_slopes(back);
  EXPECT_EQ(a.error, b.error);
  EXPECT_EQ(a.time, b.time);
}

TEST(Bench, MalformedCsv) {
  std::istringstream no_header("16,1e-14,0.1,2\n");
  EXPECT_THROW(read_csv(no_header), FormatError);
  std::istringstream bad_row("L,max_abs_error,wall_seconds,trials\n16;1e-14;0.1;2\n");
  EXPECT_THROW(read_csv(bad_row), FormatError);
  std::istringstream extra("L,max_abs_error,wall_seconds,trials\n16,1e-14,0.1,2,9\n");
  EXPECT_THROW(read_csv(extra), FormatError);
}
