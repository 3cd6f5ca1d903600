#pragma once

// Bad n-tuples of positions with respect to agreement sets I_1..I_{L+1}.
//
// A tuple (a_1..a_n) of distinct positions of a length-m code is bad when some
// center beta and distinct codewords g_1..g_{L+1} satisfy g_j[a_i] = beta[a_i]
// for every j and every i in I_j. Positions and set elements are 0-based here;
// sets.json uses 1-based elements.

#include "rsld/codes.hpp"
#include "rsld/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rsld::badtuples {

using codes::Code;
using codes::WordView;

struct AgreementSystem {
  std::size_t n = 0;
  std::size_t L = 0;                          // sets.size() - 1
  std::vector<std::vector<std::size_t>> sets;  // I_1..I_{L+1}, each sorted, elements in [0, n)
  std::uint64_t c = 5;
  std::uint64_t h = 1;

  /// Validates and normalizes (sorts, rejects duplicates and out-of-range elements).
  static AgreementSystem make(std::size_t n, std::vector<std::vector<std::size_t>> sets, std::uint64_t c,
                              std::uint64_t h);

  /// The system with I_{L+1} removed. Requires L >= 1.
  AgreementSystem drop_last() const;
};

/// sum |I_j| - |union I_j|.
std::size_t overlap_weight(const AgreementSystem& sys);

/// overlap_weight(sys) > 2 c h L.
bool weight_condition(const AgreementSystem& sys);

/// Checks the defining condition for one concrete (tuple, beta, words).
/// `words` are indices into `code`; beta has length m.
bool is_bad(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code, WordView beta,
            std::span<const std::size_t> words);

/// Whether some (beta, distinct words) makes `tuple` bad. Beta is implied by
/// the chosen words on the constrained positions, so only words are searched.
bool tuple_is_bad(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code);

struct CountBudget {
  // Upper bound on m(m-1)...(m-n+1) * |C|^(L+1).
  BigInt max_work = BigInt(1) << 36;
};

struct CountResult {
  BigInt bad;
  BigInt total;  // m(m-1)...(m-n+1)
};

CountResult count_bad_tuples(const AgreementSystem& sys, const Code& code, const CountBudget& budget = {});

/// m(m-1)...(m-n+1).
BigInt falling_factorial(std::uint64_t m, std::uint64_t n);

/// Indices lying in at least two of the sets.
std::vector<std::size_t> compute_M(const AgreementSystem& sys);

struct ZSample {
  std::vector<std::size_t> Z;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kDefaultZRetries = 10'000;

/// Rejection sampling: each element of M joins Z independently with
/// probability 1/(2c-1) until verify_Z accepts. Requires |M ∩ I_t| >= 2ch for all t.
ZSample sample_Z(const AgreementSystem& sys, std::span<const std::size_t> M, std::uint64_t seed,
                 std::size_t max_retries = kDefaultZRetries);

/// |Z| <= |M|/(2c-2) and |Z ∩ I_t| > h for every t. Throws NotSubset unless Z ⊆ M.
bool verify_Z(const AgreementSystem& sys, std::span<const std::size_t> M, std::span<const std::size_t> Z);

struct ChainReport {
  bool inequality = false;  // (m^|Z| q^|Z| h^(|M|-|Z|) m^(n-|M|))^2 q^h <= m^(2n)
  bool h_small = false;     // h^c q <= m^c
  bool c_large = false;     // c >= 5
  bool z_small = false;     // |Z| (2c-2) <= |M|
  bool m_large = false;     // |M| >= 2ch
  bool hypotheses() const { return h_small && c_large && z_small && m_large; }
};

/// Exact big-integer evaluation of the counting bound for one parameter point.
/// Requires h >= 1, n >= 1 and sizeZ <= sizeM <= n <= m.
ChainReport counting_chain_check(const BigInt& m, const BigInt& q, std::uint64_t h, std::uint64_t c,
                                 std::uint64_t sizeM, std::uint64_t sizeZ, std::uint64_t n);

/// Sweep helper for a fixed (m, q, h). Dividing both sides of the inequality
/// by m^(2(n-|M|)) leaves (mq)^(2|Z|) h^(2(|M|-|Z|)) q^h <= m^(2|M|), which
/// does not involve n or c; verdicts are memoized per (|M|, |Z|).
class ChainEvaluator {
 public:
  ChainEvaluator(BigInt m, BigInt q, std::uint64_t h, std::uint64_t max_size);

  ChainReport check(std::uint64_t c, std::uint64_t sizeM, std::uint64_t sizeZ, std::uint64_t n);
  bool h_small(std::uint64_t c);

 private:
  bool reduced_inequality(std::uint64_t sizeM, std::uint64_t sizeZ);

  BigInt m_, q_;
  std::uint64_t h_;
  std::uint64_t max_size_;
  std::vector<BigInt> pow_mq_, pow_h_, pow_m_;  // squared-exponent tables
  BigInt q_pow_h_;
  std::vector<std::int8_t> memo_;
  std::vector<std::int8_t> h_small_memo_;
};

/// Whether count <= q^(-h/2) m^n, decided as count^2 q^h <= m^(2n).
bool within_headline_bound(const BigInt& count, const BigInt& q, std::uint64_t h, const BigInt& m,
                           std::uint64_t n);

/// Every tuple bad for I_1..I_{L+1} is bad for I_1..I_L. Requires L >= 1.
bool induction_monotonicity_check(const AgreementSystem& sys, const Code& code, const CountBudget& budget = {});

/// Parses sets.json: {"n":..., "L":..., "I":[[...], ...]} with 1-based elements.
AgreementSystem parse_sets_json(const std::string& text, std::uint64_t c, std::uint64_t h);

}  // namespace rsld::badtuples
