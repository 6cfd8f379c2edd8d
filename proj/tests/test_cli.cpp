#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "revivals/cli.hpp"
#include "revivals/moments.hpp"
#include "revivals/output.hpp"

using namespace revivals;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("revlab_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "revlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::main_entry(static_cast<int>(argv.size()), argv.data());
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  static CsvTable table(const std::string& p) {
    std::ifstream in(p);
    return read_csv(in);
  }

  static std::string meta(const CsvTable& t, const std::string& key) {
    for (const auto& [k, v] : t.metadata) {
      if (k == key) return v;
    }
    return {};
  }

  fs::path dir_;
};

}  // namespace

TEST(FormatDouble, RoundTripsExactly) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, (i % 40) - 20);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Csv, WriteReadRoundTrip) {
  CsvTable t;
  t.metadata = {{"command", "test"}, {"T_rev", "0.5"}};
  t.columns = {"a", "b"};
  t.rows = {{0.1, 1.0 / 3.0}, {-2e-300, 6.02214076e23}};
  std::stringstream ss;
  write_csv(ss, t);
  const CsvTable back = read_csv(ss);
  EXPECT_EQ(back.metadata, t.metadata);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(Csv, RejectsRaggedRows) {
  std::stringstream ss("a,b\n1,2\n3\n");
  EXPECT_THROW(read_csv(ss), std::runtime_error);
}

TEST_F(CliTest, AutocorrStartsAtOneAndRoundTrips) {
  ASSERT_EQ(invoke({"autocorr", "--p", "1", "--q", "1", "--chi", "3.1831", "--t-max", "1",
                    "--samples", "10000", "-o", path("a.csv")}),
            0);
  const CsvTable t = table(path("a.csv"));
  ASSERT_EQ(t.columns, (std::vector<std::string>{"t", "chi_t_over_pi", "re", "im", "abs2"}));
  ASSERT_EQ(t.rows.size(), 10000u);
  EXPECT_DOUBLE_EQ(t.rows[0][4], 1.0);
  EXPECT_EQ(meta(t, "command"), "autocorr");
  EXPECT_FALSE(meta(t, "T_rev").empty());
  // Parsed values equal the in-memory computation bit for bit.
  const auto times = linspace(0.0, 1.0, 10000);
  const auto spectrum = Spectrum::kerr(3.1831);
  for (std::size_t i = 0; i < times.size(); i += 997) {
    const Complex a = autocorrelation({1.0, 1.0}, spectrum, times[i]);
    EXPECT_EQ(t.rows[i][0], times[i]);
    EXPECT_EQ(t.rows[i][2], a.real());
    EXPECT_EQ(t.rows[i][3], a.imag());
    EXPECT_EQ(t.rows[i][1], 3.1831 * times[i] / std::numbers::pi);
  }
}

TEST_F(CliTest, NumberMomentIsConstant) {
  ASSERT_EQ(invoke({"moment", "--r", "1", "--s", "0", "--p", "3", "--q", "1", "--samples", "50",
                    "-o", path("m.csv")}),
            0);
  for (const auto& row : table(path("m.csv")).rows) EXPECT_DOUBLE_EQ(row[2], 5.0);
}

TEST_F(CliTest, PendulumSnapshotReportsWaves) {
  ASSERT_EQ(invoke({"pendulum", "--count", "100", "--at", "0.5", "-o", path("p.csv")}), 0);
  const CsvTable t = table(path("p.csv"));
  EXPECT_EQ(meta(t, "waves"), "2");
  EXPECT_EQ(meta(t, "strength"), "50");
  EXPECT_EQ(t.rows.size(), 100u);
}

TEST_F(CliTest, XpTraceWithBursts) {
  ASSERT_EQ(invoke({"xptrace", "--p", "10", "--q", "10", "--chi", "1", "--samples", "20001", "-o",
                    path("x.csv"), "--bursts", path("b.csv")}),
            0);
  const CsvTable trace = table(path("x.csv"));
  EXPECT_NEAR(trace.rows.front()[8], 0.5, 1e-12);
  const CsvTable bursts = table(path("b.csv"));
  // observable 0 is <x>: only the full revival fires.
  for (const auto& row : bursts.rows) {
    if (row[0] != 0.0) continue;
    EXPECT_EQ(row[6], (row[1] == 1.0 && row[2] == 1.0) ? 1.0 : 0.0);
  }
}

TEST_F(CliTest, LxWithOracleColumn) {
  ASSERT_EQ(invoke({"lx", "--p2", "1", "--q2", "2", "--p3", "0.5", "--q3", "-1", "--n", "3",
                    "--oracle", "--samples", "7", "-o", path("l.csv")}),
            0);
  for (const auto& row : table(path("l.csv")).rows) EXPECT_NEAR(row[2], row[3], 1e-8);
}

TEST_F(CliTest, CarpetPgmHeaderAndScaling) {
  ASSERT_EQ(invoke({"carpet", "--p", "4.242640687119285", "--nx", "64", "--nt", "16", "--format",
                    "pgm", "-o", path("c.pgm")}),
            0);
  const std::string bytes = slurp(path("c.pgm"));
  const std::string header = "P5\n64 16\n255\n";
  ASSERT_EQ(bytes.substr(0, header.size()), header);
  ASSERT_EQ(bytes.size(), header.size() + 64 * 16);
  unsigned char peak = 0;
  for (std::size_t i = header.size(); i < bytes.size(); ++i) {
    peak = std::max(peak, static_cast<unsigned char>(bytes[i]));
  }
  EXPECT_EQ(peak, 255);
}

TEST_F(CliTest, CarpetCsvLayout) {
  ASSERT_EQ(invoke({"carpet", "--p", "1", "--nx", "10", "--nt", "4", "-o", path("c.csv")}), 0);
  const CsvTable t = table(path("c.csv"));
  EXPECT_EQ(t.columns.size(), 12u);
  EXPECT_EQ(t.columns[0], "t");
  EXPECT_EQ(t.columns[1], "chi_t_over_pi");
  EXPECT_EQ(t.rows.size(), 4u);
  EXPECT_DOUBLE_EQ(t.rows.back()[1], 1.0);
}

TEST_F(CliTest, TalbotAndCat) {
  ASSERT_EQ(invoke({"talbot", "--wavelength", "0.6", "--period", "1", "-o", path("t.csv")}), 0);
  EXPECT_NEAR(table(path("t.csv")).rows[0][2], 3.0, 1e-15);
  ASSERT_EQ(invoke({"cat", "--p", "2", "--q", "2", "--m", "3", "-o", path("k.csv")}), 0);
  const CsvTable cat = table(path("k.csv"));
  EXPECT_EQ(cat.rows.size(), 3u);
  EXPECT_GE(std::stod(meta(cat, "fidelity")), 1.0 - 1e-9);
}

TEST_F(CliTest, IdenticalRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"autocorr", "--p", "2", "--q", "-1", "--samples", "300"},
      {"xptrace", "--p", "3", "--q", "1", "--samples", "300"},
      {"lx", "--p2", "1", "--q2", "1", "--p3", "2", "--q3", "0", "--n", "4", "--samples", "100"},
      {"carpet", "--p", "2", "--nx", "50", "--nt", "20", "--format", "pgm"},
      {"pendulum", "--at", "0.3"},
      {"cat", "--p", "1", "--q", "1", "--m", "5"}};
  int i = 0;
  for (const auto& cmd : commands) {
    const std::string a = path("run_a" + std::to_string(i));
    const std::string b = path("run_b" + std::to_string(i++));
    auto with_a = cmd;
    with_a.insert(with_a.end(), {"-o", a});
    auto with_b = cmd;
    with_b.insert(with_b.end(), {"-o", b});
    ASSERT_EQ(invoke(with_a), 0) << cmd[0];
    ASSERT_EQ(invoke(with_b), 0) << cmd[0];
    EXPECT_EQ(slurp(a), slurp(b)) << cmd[0];
    EXPECT_FALSE(slurp(a).empty());
  }
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"autocorr", "--no-such-flag"}), 2);
  EXPECT_EQ(invoke({}), 2);
  EXPECT_EQ(invoke({"frobnicate"}), 2);
  EXPECT_EQ(invoke({"autocorr", "--samples", "1"}), 2);
  EXPECT_EQ(invoke({"autocorr", "--chi", "-1"}), 2);
  EXPECT_EQ(invoke({"autocorr", "--samples", "abc"}), 2);
  EXPECT_EQ(invoke({"lx", "--n", "7"}), 2);
  EXPECT_EQ(invoke({"carpet", "--format", "png"}), 2);
  EXPECT_EQ(invoke({"autocorr", "-o", path("missing/dir/file.csv")}), 2);
}

TEST_F(CliTest, NumericGuardsExitOne) {
  // Two-mode oracle beyond the 4e6-state memory guard.
  EXPECT_EQ(invoke({"lx", "--oracle", "--truncation", "2500", "--samples", "2", "-o",
                    path("g.csv")}),
            1);
  EXPECT_FALSE(fs::exists(path("g.csv")));
  EXPECT_EQ(invoke({"talbot", "--wavelength", "2", "--period", "1"}), 1);
}
