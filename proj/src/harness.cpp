#include "rsld/harness.hpp"

#include "rsld/bounds.hpp"
#include "rsld/codes.hpp"
#include "rsld/error.hpp"
#include "rsld/gf.hpp"
#include "rsld/random.hpp"
#include "rsld/rs.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace rsld::harness {

using nlohmann::json;

std::string to_string(DeciderMode mode) { return mode == DeciderMode::Exhaustive ? "exhaustive" : "witness"; }

DeciderMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return DeciderMode::Exhaustive;
  if (text == "witness") return DeciderMode::Witness;
  throw Error(Errc::ConfigInvalid, "unknown decider mode '" + text + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Decodable: return "decodable";
    case Verdict::Witness: return "witness";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

Verdict parse_verdict(const std::string& text) {
  if (text == "decodable") return Verdict::Decodable;
  if (text == "witness") return Verdict::Witness;
  if (text == "undecided") return Verdict::Undecided;
  throw Error(Errc::ParseError, "unknown verdict '" + text + "'");
}

json config_json(const ExperimentConfig& c) {
  return json{{"field", c.field},
              {"k", c.k},
              {"n", c.n},
              {"r", rsld::to_string(c.r)},
              {"L", c.L},
              {"trials", c.trials},
              {"seed", c.seed},
              {"mode", to_string(c.mode)},
              {"budget",
               {{"max_nodes", c.budget.max_nodes},
                {"max_subsets", c.budget.max_subsets},
                {"center_space_cap", c.budget.center_space_cap}}}};
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.field = j.at("field").get<std::string>();
  c.k = j.at("k").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
  c.r = parse_rational(j.at("r").get<std::string>());
  c.L = j.at("L").get<std::size_t>();
  c.trials = j.at("trials").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.mode = parse_mode(j.at("mode").get<std::string>());
  const auto& b = j.at("budget");
  c.budget.max_nodes = b.at("max_nodes").get<std::uint64_t>();
  c.budget.max_subsets = b.at("max_subsets").get<std::uint64_t>();
  c.budget.center_space_cap = b.at("center_space_cap").get<std::uint64_t>();
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fraction_text(const std::optional<Rational>& f) {
  if (!f) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", f->convert_to<double>());
  return buf;
}

}  // namespace

std::string config_hash(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config_json(config).dump())));
  return buf;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return splitmix64(seed ^ trial); }

std::optional<Rational> RunResult::fraction_failed() const {
  const std::size_t decided = failures + decodables;
  if (decided == 0) return std::nullopt;
  return Rational(failures, decided);
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return config_json(a) == config_json(b);
}

bool operator==(const RunResult& a, const RunResult& b) {
  return a.config == b.config && a.hash == b.hash && a.failures == b.failures && a.decodables == b.decodables &&
         a.undecided == b.undecided && a.records == b.records;
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& why) { throw Error(Errc::ConfigInvalid, why); };
  std::uint32_t q = 0;
  try {
    q = gf::FieldCtx::parse(c.field).q();
  } catch (const Error& e) {
    fail(std::string("field: ") + e.what());
  }
  if (c.trials < 1) fail("trials must be at least 1");
  if (c.k < 1 || c.k >= q) fail("need 1 <= k < q");
  if (c.n < 1 || c.n > q) fail("need 1 <= n <= q");
  if (c.L < 1) fail("L must be at least 1");
  if (c.r <= 0 || c.r >= 1) fail("radius must lie strictly between 0 and 1");
}

RunResult run_mc(const ExperimentConfig& config) {
  validate(config);
  const auto field = gf::FieldCtx::parse(config.field);
  const codes::Code full = rs::materialize(rs::RSCode::full(field, config.k));
  const auto params = listdec::ListDecParams::make(config.r, config.L, config.n);

  RunResult out;
  out.config = config;
  out.hash = config_hash(config);
  out.records.resize(config.trials);

  auto run_trial = [&](std::size_t i) {
    TrialRecord rec;
    rec.trial = i;
    Rng rng(trial_seed(config.seed, i));
    const auto plan = codes::sample_puncturing(full.m(), config.n, rng);
    rec.plan = plan.positions();
    auto punctured = codes::puncture(full, plan);
    rec.collapsed = punctured.collapsed;
    try {
      const auto decision = config.mode == DeciderMode::Exhaustive
                                ? listdec::decide_exhaustive(punctured.code, params, config.budget)
                                : listdec::decide_witness_search(punctured.code, params, config.budget);
      rec.nodes = decision.stats.nodes;
      rec.subsets = decision.stats.subsets;
      if (decision.decodable) {
        rec.verdict = Verdict::Decodable;
      } else {
        rec.verdict = Verdict::Witness;
        WitnessSummary w;
        w.center = decision.witness->center;
        w.members = decision.witness->members;
        for (auto m : w.members) w.member_words.push_back(punctured.code.word(m));
        rec.witness = std::move(w);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded && e.code() != Errc::SearchSpaceTooLarge) throw;
      rec.verdict = Verdict::Undecided;
      rec.note = e.what();
    }
    out.records[i] = std::move(rec);
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  if (workers == 1) {
    for (std::size_t i = 0; i < config.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
          try {
            run_trial(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (const auto& rec : out.records) {
    switch (rec.verdict) {
      case Verdict::Decodable: ++out.decodables; break;
      case Verdict::Witness: ++out.failures; break;
      case Verdict::Undecided: ++out.undecided; break;
    }
  }
  return out;
}

PointBounds point_bounds(const ExperimentConfig& c) {
  const auto field = gf::FieldCtx::parse(c.field);
  const BigInt q = field.q();
  PointBounds b;
  b.rate = Rational(c.k, c.n);
  b.epsilon = Rational(1) - c.r;
  const auto johnson = bounds::johnson_profile(b.epsilon, c.n, q);
  b.johnson_rate_ok = b.rate <= johnson.rate_threshold;
  b.johnson_list_size = johnson.list_size;
  b.johnson_guarantee = b.johnson_rate_ok && BigInt(c.L) >= johnson.list_size;
  b.capacity_ratio = b.rate / b.epsilon;
  // A puncturing to n < k positions is the whole space GF(q)^n.
  const std::size_t dim = std::min(c.k, c.n);
  b.singleton_gap = bounds::singleton_gap(c.n, ipow(q, dim), q, c.n - dim + 1).gap;
  return b;
}

std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& configs) {
  std::vector<SweepRow> rows;
  rows.reserve(configs.size());
  for (const auto& c : configs) {
    SweepRow row;
    row.config = c;
    row.hash = config_hash(c);
    try {
      auto result = run_mc(c);
      result.records.clear();
      row.result = std::move(result);
      row.bounds = point_bounds(c);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_json(const RunResult& run) {
  json records = json::array();
  for (const auto& r : run.records) {
    json w = nullptr;
    if (r.witness) {
      w = json{{"center", r.witness->center}, {"members", r.witness->members}, {"member_words", r.witness->member_words}};
    }
    records.push_back(json{{"trial", r.trial},
                           {"plan", r.plan},
                           {"collapsed", r.collapsed},
                           {"verdict", to_string(r.verdict)},
                           {"witness", w},
                           {"nodes", r.nodes},
                           {"subsets", r.subsets},
                           {"note", r.note}});
  }
  const auto frac = run.fraction_failed();
  json j{{"schema_version", kSchemaVersion},
         {"config_hash", run.hash},
         {"config", config_json(run.config)},
         {"aggregates",
          {{"trials", run.records.size()},
           {"failures", run.failures},
           {"decodables", run.decodables},
           {"undecided", run.undecided},
           {"fraction_failed", frac ? json(rsld::to_string(*frac)) : json(nullptr)}}},
         {"records", records}};
  return j.dump(2) + "\n";
}

RunResult run_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("run file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion) {
    throw Error(Errc::SchemaVersionMismatch, "expected schema_version " + std::to_string(kSchemaVersion));
  }
  try {
    RunResult run;
    run.config = config_from_json(j.at("config"));
    run.hash = j.at("config_hash").get<std::string>();
    if (run.hash != config_hash(run.config)) throw Error(Errc::ParseError, "config hash does not match config");
    for (const auto& r : j.at("records")) {
      TrialRecord rec;
      rec.trial = r.at("trial").get<std::size_t>();
      rec.plan = r.at("plan").get<std::vector<std::size_t>>();
      rec.collapsed = r.at("collapsed").get<bool>();
      rec.verdict = parse_verdict(r.at("verdict").get<std::string>());
      if (!r.at("witness").is_null()) {
        const auto& w = r.at("witness");
        rec.witness = WitnessSummary{w.at("center").get<std::vector<std::uint32_t>>(),
                                     w.at("members").get<std::vector<std::size_t>>(),
                                     w.at("member_words").get<std::vector<std::vector<std::uint32_t>>>()};
      }
      rec.nodes = r.at("nodes").get<std::uint64_t>();
      rec.subsets = r.at("subsets").get<std::uint64_t>();
      rec.note = r.at("note").get<std::string>();
      switch (rec.verdict) {
        case Verdict::Decodable: ++run.decodables; break;
        case Verdict::Witness: ++run.failures; break;
        case Verdict::Undecided: ++run.undecided; break;
      }
      run.records.push_back(std::move(rec));
    }
    const auto& agg = j.at("aggregates");
    if (agg.at("failures").get<std::size_t>() != run.failures ||
        agg.at("decodables").get<std::size_t>() != run.decodables ||
        agg.at("undecided").get<std::size_t>() != run.undecided || agg.at("trials").get<std::size_t>() != run.records.size() ||
        run.records.size() != run.config.trials) {
      throw Error(Errc::ParseError, "aggregates disagree with records");
    }
    return run;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("run file: ") + e.what());
  }
}

void persist(const RunResult& run, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << to_json(run);
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

RunResult load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return run_from_json(buf.str());
}

namespace {

void config_columns(std::ostream& out, const std::string& hash, const ExperimentConfig& c) {
  out << hash << ',' << c.field << ',' << c.k << ',' << c.n << ',' << rsld::to_string(c.r) << ',' << c.L << ','
      << c.trials << ',' << c.seed << ',' << to_string(c.mode);
}

}  // namespace

std::string to_csv(const RunResult& run) {
  std::ostringstream out;
  out << kRunCsvHeader << '\n';
  config_columns(out, run.hash, run.config);
  out << ',' << run.failures << ',' << run.decodables << ',' << run.undecided << ','
      << fraction_text(run.fraction_failed()) << '\n';
  return out.str();
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    config_columns(out, row.hash, row.config);
    if (row.result) {
      const auto& r = *row.result;
      out << ',' << r.failures << ',' << r.decodables << ',' << r.undecided << ','
          << fraction_text(r.fraction_failed());
    } else {
      out << ",,,,";
    }
    if (row.bounds) {
      const auto& b = *row.bounds;
      out << ',' << rsld::to_string(b.rate) << ',' << (b.johnson_rate_ok ? 1 : 0) << ',' << b.johnson_list_size
          << ',' << (b.johnson_guarantee ? 1 : 0) << ',' << rsld::to_string(b.capacity_ratio) << ','
          << b.singleton_gap;
    } else {
      out << ",,,,,,";
    }
    std::string err = row.error;
    for (auto& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << ',' << err << '\n';
  }
  return out.str();
}

}  // namespace rsld::harness
