#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "deepzero/deep_zero.hpp"
#include "deepzero/errors.hpp"
#include "deepzero/parallel.hpp"
#include "deepzero/serialize.hpp"
#include "deepzero/sweep.hpp"
#include "generators.hpp"

namespace deepzero {
namespace {

TEST(Json, FockVectorRoundTrip) {
  testing::Gen gen(71);
  const FockVector v = gen.fock(7);
  const nlohmann::json j = to_json(v);
  EXPECT_EQ(j.at("degree"), 7);
  EXPECT_EQ(j.at("re").size(), 7u);
  EXPECT_EQ(j.at("im")[3].get<double>(), v[3].imag());
  const FockVector back = fock_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.coeffs(), v.coeffs());
}

TEST(Json, OperatorMatrixRowMajor) {
  const OperatorMatrix d = displacement_matrix({0.5, 0.25}, 5, 3);
  const nlohmann::json j = to_json(d);
  EXPECT_EQ(j.at("rows"), 5);
  EXPECT_EQ(j.at("cols"), 3);
  EXPECT_EQ(j.at("re")[1 * 3 + 2].get<double>(), d.entries(1, 2).real());
  EXPECT_EQ(j.at("im")[4 * 3 + 0].get<double>(), d.entries(4, 0).imag());
  EXPECT_EQ(j.at("tail_leak").get<double>(), d.tail_leak);
  const OperatorMatrix back = operator_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.entries, d.entries);
  EXPECT_EQ(back.tail_leak, d.tail_leak);
}

TEST(Json, MalformedInputThrows) {
  EXPECT_ANY_THROW(fock_from_json(nlohmann::json{{"degree", 2}, {"re", {1.0}}, {"im", {0.0}}}));
  EXPECT_ANY_THROW(operator_from_json(nlohmann::json{{"rows", 2}, {"cols", 2}, {"re", {1.0}}, {"im", {1.0}}}));
}

TEST(Json, SeminormFormKeys) {
  const SeminormForm form = seminorm_gram(IndexSet::odd(), 1.0, 4);
  const nlohmann::json j = to_json(form);
  EXPECT_EQ(j.at("E"), "odd");
  EXPECT_EQ(j.at("beta"), 1.0);
  EXPECT_EQ(j.at("degree"), 4);
  EXPECT_EQ(j.at("pad"), form.pad);
  EXPECT_EQ(j.at("matrix").at("rows"), 4);
  EXPECT_EQ(operator_from_json(j.at("matrix")).entries, form.matrix);
}

TEST(Csv, L2Function) {
  const GridPtr grid = uniform_grid(0.5, 1, false);
  const L2Function f(grid, Eigen::Vector3cd(Complex(1, 2), Complex(0.25, 0), Complex(-1, -0.5)));
  std::ostringstream os;
  write_csv(os, f);
  EXPECT_EQ(os.str(), "t,re,im,weight\n-0.5,1,2,0.25\n0,0.25,0,0.5\n0.5,-1,-0.5,0.25\n");
}

TEST(Csv, FormatNumber) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(std::stod(format_number(M_PI)), M_PI);
}

TEST(Csv, SweepRows) {
  SweepRecord rec;
  rec.set("theta", 0.5).set("ratio", 0.125);
  EXPECT_TRUE(rec.ok());
  EXPECT_EQ(rec.at("theta"), 0.5);
  EXPECT_FALSE(rec.get("beta").has_value());
  EXPECT_THROW(rec.at("beta"), std::out_of_range);
  rec.set("theta", 0.75);
  EXPECT_EQ(rec.fields().size(), 2u);
  EXPECT_EQ(rec.at("theta"), 0.75);

  std::ostringstream os;
  write_csv_row(os, rec, {"theta", "beta", "ratio"});
  EXPECT_EQ(os.str(), "0.75,nan,0.125\n");

  rec.set_error("quadrature not converged (last value 3, relative change 0.5)");
  std::ostringstream err;
  write_csv_row(err, rec, {"theta"}, true);
  EXPECT_EQ(err.str(), "0.75,\"quadrature not converged (last value 3, relative change 0.5)\"\n");
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
}

TEST(Parallel, OrderedResults) {
  const auto out = parallel_map(100, [](std::size_t i) { return i * i; });
  ASSERT_EQ(out.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_TRUE(parallel_map(0, [](std::size_t i) { return i; }).empty());
}

TEST(Parallel, FirstErrorByIndexIsRethrown) {
  std::atomic<int> calls{0};
  try {
    parallel_map(20, [&](std::size_t i) -> int {
      ++calls;
      if (i == 7) throw std::runtime_error("seven");
      if (i == 12) throw std::runtime_error("twelve");
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "seven");
  }
  EXPECT_EQ(calls.load(), 20);
}

TEST(Parallel, ThreadBudgetFromEnvironment) {
  ::setenv("DEEPZERO_THREADS", "3", 1);
  EXPECT_EQ(thread_budget(), 3u);
  ::setenv("DEEPZERO_THREADS", "zero", 1);
  EXPECT_GE(thread_budget(), 1u);
  ::unsetenv("DEEPZERO_THREADS");
  EXPECT_GE(thread_budget(), 1u);
}

}  // namespace
}  // namespace deepzero
