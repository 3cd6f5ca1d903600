#pragma once

// Monte-Carlo estimation of how often a random puncturing of the full
// Reed-Solomon code fails to be (r, L)-list-decodable.
//
// Trial i samples its plan from its own generator seeded with
//     trial_seed(seed, i) = splitmix64(seed XOR i)
// so any single trial can be re-run in isolation and results do not depend on
// the number of worker threads.

#include "rsld/listdec.hpp"
#include "rsld/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsld::harness {

inline constexpr int kSchemaVersion = 1;

enum class DeciderMode { Exhaustive, Witness };

std::string to_string(DeciderMode mode);
DeciderMode parse_mode(const std::string& text);

struct ExperimentConfig {
  std::string field = "7";
  std::size_t k = 1;
  std::size_t n = 1;
  Rational r = Rational(1, 2);
  std::size_t L = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  DeciderMode mode = DeciderMode::Exhaustive;
  listdec::Budget budget;
  unsigned threads = 1;  // execution detail; not part of the config hash
};

/// FNV-1a of the canonical JSON form of the config, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

enum class Verdict { Decodable, Witness, Undecided };

std::string to_string(Verdict v);

struct WitnessSummary {
  std::vector<std::uint32_t> center;
  std::vector<std::size_t> members;  // indices into the punctured code
  std::vector<std::vector<std::uint32_t>> member_words;

  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::vector<std::size_t> plan;  // 0-based positions of the full code
  bool collapsed = false;
  Verdict verdict = Verdict::Decodable;
  std::optional<WitnessSummary> witness;
  std::uint64_t nodes = 0;
  std::uint64_t subsets = 0;
  std::string note;  // budget message for undecided trials

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct RunResult {
  ExperimentConfig config;
  std::string hash;
  std::size_t failures = 0;
  std::size_t decodables = 0;
  std::size_t undecided = 0;
  std::vector<TrialRecord> records;

  /// failures / (failures + decodables); undecided trials are excluded.
  std::optional<Rational> fraction_failed() const;
};

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
bool operator==(const RunResult& a, const RunResult& b);

/// Throws ConfigInvalid for unusable configurations.
void validate(const ExperimentConfig& config);

RunResult run_mc(const ExperimentConfig& config);

struct PointBounds {
  Rational rate;                // k/n
  Rational epsilon;             // 1 - r
  bool johnson_rate_ok = false;  // k/n <= eps^2
  BigInt johnson_list_size;     // q n^2
  bool johnson_guarantee = false;  // rate condition holds and L >= q n^2
  Rational capacity_ratio;      // rate / eps
  BigInt singleton_gap;
};

PointBounds point_bounds(const ExperimentConfig& config);

struct SweepRow {
  ExperimentConfig config;
  std::string hash;
  std::optional<RunResult> result;  // records dropped; aggregates kept
  std::optional<PointBounds> bounds;
  std::string error;  // per-cell failure
};

std::vector<SweepRow> sweep(const std::vector<ExperimentConfig>& configs);

// Persistence.
std::string to_json(const RunResult& run);
RunResult run_from_json(const std::string& text);
void persist(const RunResult& run, const std::string& path);
RunResult load(const std::string& path);

inline constexpr const char* kRunCsvHeader =
    "config_hash,field,k,n,r,L,trials,seed,mode,failures,decodables,undecided,fraction_failed";
inline constexpr const char* kSweepCsvHeader =
    "config_hash,field,k,n,r,L,trials,seed,mode,failures,decodables,undecided,fraction_failed,"
    "rate,johnson_rate_ok,johnson_list_size,johnson_guarantee,capacity_ratio,singleton_gap,error";

std::string to_csv(const RunResult& run);
std::string to_csv(const std::vector<SweepRow>& rows);

}  // namespace rsld::harness
