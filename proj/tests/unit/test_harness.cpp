#include "rsld/error.hpp"
#include "rsld/harness.hpp"
#include "rsld/random.hpp"
#include "rsld/rs.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace rsld;
using namespace rsld::harness;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

ExperimentConfig base(std::string field, std::size_t k, std::size_t n, Rational r, std::size_t L,
                      std::size_t trials, std::uint64_t seed = 1) {
  ExperimentConfig c;
  c.field = std::move(field);
  c.k = k;
  c.n = n;
  c.r = r;
  c.L = L;
  c.trials = trials;
  c.seed = seed;
  return c;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rsld_test_" + name)).string();
}

// Oracle: largest ball population of a code over every center in [q]^n.
std::size_t max_ball(const codes::Code& code, std::size_t t) {
  std::size_t best = 0;
  codes::Codeword beta(code.m(), 0);
  while (true) {
    std::size_t count = 0;
    for (const auto& w : code.words()) count += codes::agreement(w, beta) >= t;
    best = std::max(best, count);
    std::size_t i = 0;
    while (i < beta.size() && ++beta[i] == code.q()) beta[i++] = 0;
    if (i == beta.size()) return best;
  }
}

}  // namespace

TEST(Harness, SplittingRule) {
  EXPECT_EQ(trial_seed(42, 7), splitmix64(42 ^ 7));
  const auto cfg = base("7", 2, 4, Rational(1, 2), 2, 6, 99);
  const auto run = run_mc(cfg);
  for (const auto& rec : run.records)
    EXPECT_EQ(rec.plan, codes::sample_puncturing(7, 4, trial_seed(99, rec.trial)).positions());
}

TEST(Harness, ListLargerThanCodeNeverFails) {
  for (auto r : {Rational(1, 5), Rational(1, 2), Rational(4, 5)}) {
    const auto run = run_mc(base("5", 2, 4, r, 25, 10));
    EXPECT_EQ(run.failures, 0u);
    EXPECT_EQ(run.decodables, 10u);
  }
}

TEST(Harness, VerdictsMatchBruteForceOracle) {
  const auto cfg = base("7", 1, 4, Rational(3, 4), 3, 50, 5);
  const auto run = run_mc(cfg);
  const auto full = rs::materialize(rs::RSCode::full(gf::FieldCtx::create(7, 1), 1));
  const std::size_t t = codes::agreement_threshold(cfg.r, cfg.n);
  for (const auto& rec : run.records) {
    const auto punctured = codes::puncture(full, codes::PuncturingPlan(7, rec.plan)).code;
    const bool decodable = max_ball(punctured, t) <= cfg.L;
    ASSERT_EQ(rec.verdict, decodable ? Verdict::Decodable : Verdict::Witness) << rec.trial;
  }
  ASSERT_TRUE(run.fraction_failed());
  EXPECT_GE(*run.fraction_failed(), 0);
  EXPECT_LE(*run.fraction_failed(), 1);
  EXPECT_EQ(to_json(run_mc(cfg)), to_json(run));
}

TEST(Harness, WitnessSummariesAreConsistent) {
  const auto run = run_mc(base("7", 2, 5, Rational(3, 5), 2, 10, 3));
  for (const auto& rec : run.records) {
    if (rec.verdict != Verdict::Witness) continue;
    ASSERT_TRUE(rec.witness);
    EXPECT_EQ(rec.witness->members.size(), 3u);
    for (const auto& w : rec.witness->member_words)
      EXPECT_GE(codes::agreement(w, rec.witness->center), codes::agreement_threshold(Rational(3, 5), 5));
  }
}

TEST(Harness, DeterministicAcrossThreadCounts) {
  auto cfg = base("7", 2, 5, Rational(3, 5), 3, 24, 11);
  std::string reference;
  for (unsigned threads : {1u, 2u, 4u}) {
    cfg.threads = threads;
    const auto json = to_json(run_mc(cfg));
    if (reference.empty()) reference = json;
    EXPECT_EQ(json, reference) << threads;
  }
  cfg.mode = DeciderMode::Witness;
  cfg.threads = 1;
  const auto w1 = run_mc(cfg);
  cfg.threads = 3;
  EXPECT_EQ(to_json(run_mc(cfg)), to_json(w1));
}

TEST(Harness, AggregatesAndUndecided) {
  auto cfg = base("7", 2, 5, Rational(1, 2), 2, 12);
  cfg.budget.max_nodes = 10;
  const auto run = run_mc(cfg);
  EXPECT_EQ(run.failures + run.decodables + run.undecided, cfg.trials);
  EXPECT_GT(run.undecided, 0u);
  for (const auto& rec : run.records)
    if (rec.verdict == Verdict::Undecided) EXPECT_FALSE(rec.note.empty());
  if (run.failures + run.decodables == 0) EXPECT_FALSE(run.fraction_failed());
}

TEST(Harness, Validation) {
  EXPECT_EQ(code_of([] { validate(base("7", 2, 5, Rational(1, 2), 1, 0)); }), Errc::ConfigInvalid);
  EXPECT_EQ(code_of([] { validate(base("7", 7, 5, Rational(1, 2), 1, 1)); }), Errc::ConfigInvalid);
  EXPECT_EQ(code_of([] { validate(base("7", 2, 8, Rational(1, 2), 1, 1)); }), Errc::ConfigInvalid);
  EXPECT_EQ(code_of([] { validate(base("6", 2, 5, Rational(1, 2), 1, 1)); }), Errc::ConfigInvalid);
  EXPECT_EQ(code_of([] { validate(base("7", 2, 5, Rational(1), 1, 1)); }), Errc::ConfigInvalid);
  EXPECT_EQ(code_of([] { run_mc(base("7", 2, 5, Rational(1, 2), 0, 1)); }), Errc::ConfigInvalid);
}

TEST(Harness, ConfigHash) {
  auto a = base("7", 2, 5, Rational(1, 2), 1, 3);
  auto b = a;
  b.threads = 8;
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  b.seed = 2;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Harness, SweepTable) {
  EXPECT_EQ(to_csv(sweep({})), std::string(kSweepCsvHeader) + "\n");
  std::vector<ExperimentConfig> grid;
  for (std::size_t L = 1; L <= 4; ++L) grid.push_back(base("5", 2, 4, Rational(1, 2), L, 20, 7));
  grid.push_back(base("5", 2, 9, Rational(1, 2), 1, 1));
  const auto rows = sweep(grid);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 1; i < 4; ++i)
    EXPECT_LE(*rows[i].result->fraction_failed(), *rows[i - 1].result->fraction_failed());
  EXPECT_FALSE(rows[4].result);
  EXPECT_NE(rows[4].error.find("ConfigInvalid"), std::string::npos);
  ASSERT_TRUE(rows[0].bounds);
  EXPECT_EQ(rows[0].bounds->rate, Rational(1, 2));
  EXPECT_EQ(rows[0].bounds->johnson_list_size, 80);
  EXPECT_EQ(rows[0].bounds->singleton_gap, 0);
  const auto csv = to_csv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Harness, MonotoneInRadius) {
  std::vector<ExperimentConfig> grid;
  for (auto r : {Rational(1, 4), Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(3, 4)})
    grid.push_back(base("5", 2, 4, r, 2, 30, 4));
  const auto rows = sweep(grid);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_GE(*rows[i].result->fraction_failed(), *rows[i - 1].result->fraction_failed());
}

TEST(Harness, PersistRoundTrip) {
  const auto run = run_mc(base("7", 2, 5, Rational(3, 5), 2, 3));
  const auto path = temp_path("roundtrip.json");
  persist(run, path);
  EXPECT_EQ(load(path), run);
  std::filesystem::remove(path);
  EXPECT_EQ(run_from_json(to_json(run)), run);
}

TEST(Harness, CorruptedFilesAreRejected) {
  const auto run = run_mc(base("7", 2, 5, Rational(3, 5), 2, 3));
  const auto text = to_json(run);
  EXPECT_EQ(code_of([&] { run_from_json(text.substr(0, text.size() / 2)); }), Errc::ParseError);
  auto bumped = text;
  bumped.replace(bumped.find("\"schema_version\": 1"), 19, "\"schema_version\": 2");
  EXPECT_EQ(code_of([&] { run_from_json(bumped); }), Errc::SchemaVersionMismatch);
  auto tampered = text;
  tampered.replace(tampered.find("\"trials\": 3"), 11, "\"trials\": 4");
  EXPECT_EQ(code_of([&] { run_from_json(tampered); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { run_from_json("[]"); }), Errc::SchemaVersionMismatch);
  EXPECT_EQ(code_of([] { load("/nonexistent/dir/run.json"); }), Errc::IoError);
  EXPECT_EQ(code_of([&] { persist(run, "/nonexistent/dir/run.json"); }), Errc::IoError);
}

TEST(Harness, RunCsv) {
  const auto run = run_mc(base("7", 2, 5, Rational(3, 5), 2, 4));
  const auto csv = to_csv(run);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kRunCsvHeader);
  EXPECT_EQ(std::string(kRunCsvHeader),
            "config_hash,field,k,n,r,L,trials,seed,mode,failures,decodables,undecided,fraction_failed");
  EXPECT_EQ(csv.find(run.hash), csv.find('\n') + 1);
}
