#include "rsld/badtuples.hpp"

#include "rsld/error.hpp"
#include "rsld/random.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

namespace rsld::badtuples {

AgreementSystem AgreementSystem::make(std::size_t n, std::vector<std::vector<std::size_t>> sets, std::uint64_t c,
                                      std::uint64_t h) {
  if (sets.empty()) throw Error(Errc::InvalidArgument, "an agreement system needs at least one set");
  if (c < 1) throw Error(Errc::InvalidArgument, "c must be positive");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::InvalidArgument, "agreement set lists an index twice");
    }
    if (!s.empty() && s.back() >= n) throw Error(Errc::InvalidArgument, "agreement set index outside [n]");
  }
  AgreementSystem sys;
  sys.n = n;
  sys.L = sets.size() - 1;
  sys.sets = std::move(sets);
  sys.c = c;
  sys.h = h;
  return sys;
}

AgreementSystem AgreementSystem::drop_last() const {
  if (L < 1) throw Error(Errc::InvalidArgument, "cannot drop the only set");
  auto s = sets;
  s.pop_back();
  return make(n, std::move(s), c, h);
}

std::size_t overlap_weight(const AgreementSystem& sys) {
  std::vector<bool> in_union(sys.n, false);
  std::size_t total = 0;
  std::size_t uni = 0;
  for (const auto& s : sys.sets) {
    total += s.size();
    for (auto i : s) {
      if (!in_union[i]) {
        in_union[i] = true;
        ++uni;
      }
    }
  }
  return total - uni;
}

bool weight_condition(const AgreementSystem& sys) {
  return BigInt(overlap_weight(sys)) > BigInt(2) * sys.c * sys.h * sys.L;
}

namespace {

void check_tuple(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code) {
  if (tuple.size() != sys.n) throw Error(Errc::LengthMismatch, "tuple length differs from n");
  std::vector<bool> seen(code.m(), false);
  for (auto a : tuple) {
    if (a >= code.m()) throw Error(Errc::InvalidArgument, "tuple entry outside [m]");
    if (seen[a]) throw Error(Errc::DuplicateTupleEntry, "tuple entries must be distinct");
    seen[a] = true;
  }
}

class BadSearch {
 public:
  BadSearch(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code)
      : tuple_(tuple), sys_(sys), code_(code), pin_value_(sys.n, 0), pin_count_(sys.n, 0),
        used_(code.size(), false) {
    for (std::size_t j = 0; j < sys.sets.size(); ++j) {
      if (sys.sets[j].empty()) {
        ++empty_sets_;
      } else {
        order_.push_back(j);
      }
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return sys.sets[a].size() > sys.sets[b].size(); });
  }

  bool run() { return dfs(0); }

 private:
  bool dfs(std::size_t idx) {
    if (idx == order_.size()) return code_.size() - order_.size() >= empty_sets_;
    const auto& set = sys_.sets[order_[idx]];
    for (std::size_t w = 0; w < code_.size(); ++w) {
      if (used_[w]) continue;
      const auto& word = code_.word(w);
      bool consistent = true;
      for (auto i : set) {
        if (pin_count_[i] > 0 && pin_value_[i] != word[tuple_[i]]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      used_[w] = true;
      for (auto i : set) {
        pin_value_[i] = word[tuple_[i]];
        ++pin_count_[i];
      }
      const bool hit = dfs(idx + 1);
      for (auto i : set) --pin_count_[i];
      used_[w] = false;
      if (hit) return true;
    }
    return false;
  }

  std::span<const std::size_t> tuple_;
  const AgreementSystem& sys_;
  const Code& code_;
  std::vector<codes::Symbol> pin_value_;  // beta[a_i] implied by the chosen words
  std::vector<std::size_t> pin_count_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::size_t empty_sets_ = 0;
};

// Calls fn(tuple) for every ordered n-tuple of distinct entries of [m].
template <typename Fn>
void for_each_distinct_tuple(std::size_t m, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> tuple(n);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      fn(std::span<const std::size_t>(tuple));
      return;
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (used[a]) continue;
      used[a] = true;
      tuple[depth] = a;
      self(self, depth + 1);
      used[a] = false;
    }
  };
  rec(rec, 0);
}

void check_budget(const AgreementSystem& sys, const Code& code, const CountBudget& budget) {
  if (sys.n > code.m()) throw Error(Errc::InvalidArgument, "n exceeds the code length m");
  const BigInt work = falling_factorial(code.m(), sys.n) * ipow(BigInt(code.size()), sys.L + 1);
  if (work > budget.max_work) {
    throw Error(Errc::BudgetExceeded, "bad-tuple enumeration work " + work.str() + " exceeds budget");
  }
}

}  // namespace

bool is_bad(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code, WordView beta,
            std::span<const std::size_t> words) {
  check_tuple(tuple, sys, code);
  if (beta.size() != code.m()) throw Error(Errc::LengthMismatch, "beta length differs from m");
  if (words.size() != sys.sets.size()) throw Error(Errc::InvalidArgument, "need exactly L+1 words");
  std::vector<std::size_t> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::DuplicateWord, "codewords must be distinct");
  }
  for (std::size_t j = 0; j < words.size(); ++j) {
    const auto& word = code.word(words[j]);
    for (auto i : sys.sets[j]) {
      if (word[tuple[i]] != beta[tuple[i]]) return false;
    }
  }
  return true;
}

bool tuple_is_bad(std::span<const std::size_t> tuple, const AgreementSystem& sys, const Code& code) {
  check_tuple(tuple, sys, code);
  return BadSearch(tuple, sys, code).run();
}

BigInt falling_factorial(std::uint64_t m, std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i >= m) return 0;
    out *= m - i;
  }
  return out;
}

CountResult count_bad_tuples(const AgreementSystem& sys, const Code& code, const CountBudget& budget) {
  check_budget(sys, code, budget);
  std::uint64_t bad = 0;
  for_each_distinct_tuple(code.m(), sys.n, [&](std::span<const std::size_t> tuple) {
    bad += BadSearch(tuple, sys, code).run();
  });
  return {BigInt(bad), falling_factorial(code.m(), sys.n)};
}

bool induction_monotonicity_check(const AgreementSystem& sys, const Code& code, const CountBudget& budget) {
  check_budget(sys, code, budget);
  const AgreementSystem smaller = sys.drop_last();
  bool ok = true;
  for_each_distinct_tuple(code.m(), sys.n, [&](std::span<const std::size_t> tuple) {
    if (ok && BadSearch(tuple, sys, code).run() && !BadSearch(tuple, smaller, code).run()) ok = false;
  });
  return ok;
}

std::vector<std::size_t> compute_M(const AgreementSystem& sys) {
  std::vector<std::size_t> hits(sys.n, 0);
  for (const auto& s : sys.sets) {
    for (auto i : s) ++hits[i];
  }
  std::vector<std::size_t> M;
  for (std::size_t i = 0; i < sys.n; ++i) {
    if (hits[i] >= 2) M.push_back(i);
  }
  return M;
}

namespace {

std::size_t intersection_size(std::span<const std::size_t> sorted_a, std::span<const std::size_t> sorted_b) {
  std::size_t count = 0;
  auto a = sorted_a.begin();
  auto b = sorted_b.begin();
  while (a != sorted_a.end() && b != sorted_b.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::vector<std::size_t> sorted_copy(std::span<const std::size_t> s) {
  std::vector<std::size_t> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool verify_Z(const AgreementSystem& sys, std::span<const std::size_t> M, std::span<const std::size_t> Z) {
  const auto m_sorted = sorted_copy(M);
  const auto z_sorted = sorted_copy(Z);
  if (intersection_size(m_sorted, z_sorted) != z_sorted.size() ||
      std::adjacent_find(z_sorted.begin(), z_sorted.end()) != z_sorted.end()) {
    throw Error(Errc::NotSubset, "Z must be a subset of M");
  }
  if (BigInt(z_sorted.size()) * (2 * sys.c - 2) > m_sorted.size()) return false;
  for (const auto& s : sys.sets) {
    if (intersection_size(z_sorted, s) <= sys.h) return false;
  }
  return true;
}

ZSample sample_Z(const AgreementSystem& sys, std::span<const std::size_t> M, std::uint64_t seed,
                 std::size_t max_retries) {
  const auto m_sorted = sorted_copy(M);
  for (const auto& s : sys.sets) {
    if (BigInt(intersection_size(m_sorted, s)) < BigInt(2) * sys.c * sys.h) {
      throw Error(Errc::HypothesisUnmet, "some |M ∩ I_t| is below 2ch");
    }
  }
  Rng rng(seed);
  const std::uint64_t den = 2 * sys.c - 1;
  ZSample out;
  for (std::size_t attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<std::size_t> Z;
    for (auto x : m_sorted) {
      if (rng.bernoulli(1, den)) Z.push_back(x);
    }
    if (verify_Z(sys, m_sorted, Z)) {
      out.Z = std::move(Z);
      out.attempts = attempt;
      return out;
    }
  }
  throw Error(Errc::RetriesExhausted, "no admissible Z after " + std::to_string(max_retries) + " attempts");
}

namespace {

void check_chain_pre(std::uint64_t h, std::uint64_t sizeM, std::uint64_t sizeZ, std::uint64_t n, const BigInt& m) {
  if (h < 1 || n < 1) throw Error(Errc::InvalidArgument, "counting chain needs h >= 1 and n >= 1");
  if (sizeZ > sizeM || sizeM > n || BigInt(n) > m) {
    throw Error(Errc::InvalidArgument, "counting chain needs |Z| <= |M| <= n <= m");
  }
}

}  // namespace

ChainReport counting_chain_check(const BigInt& m, const BigInt& q, std::uint64_t h, std::uint64_t c,
                                 std::uint64_t sizeM, std::uint64_t sizeZ, std::uint64_t n) {
  check_chain_pre(h, sizeM, sizeZ, n, m);
  const BigInt hb(h);
  const BigInt lhs = ipow(m, sizeZ) * ipow(q, sizeZ) * ipow(hb, sizeM - sizeZ) * ipow(m, n - sizeM);
  ChainReport r;
  r.inequality = lhs * lhs * ipow(q, h) <= ipow(m, 2 * n);
  r.h_small = ipow(hb, c) * q <= ipow(m, c);
  r.c_large = c >= 5;
  r.z_small = BigInt(sizeZ) * (2 * c - 2) <= sizeM;
  r.m_large = BigInt(sizeM) >= BigInt(2) * c * h;
  return r;
}

ChainEvaluator::ChainEvaluator(BigInt m, BigInt q, std::uint64_t h, std::uint64_t max_size)
    : m_(std::move(m)), q_(std::move(q)), h_(h), max_size_(max_size) {
  if (h_ < 1) throw Error(Errc::InvalidArgument, "counting chain needs h >= 1");
  const BigInt mq = m_ * q_;
  const BigInt mq2 = mq * mq;
  const BigInt h2 = BigInt(h_) * h_;
  const BigInt m2 = m_ * m_;
  pow_mq_.resize(max_size_ + 1);
  pow_h_.resize(max_size_ + 1);
  pow_m_.resize(max_size_ + 1);
  pow_mq_[0] = pow_h_[0] = pow_m_[0] = 1;
  for (std::uint64_t i = 1; i <= max_size_; ++i) {
    pow_mq_[i] = pow_mq_[i - 1] * mq2;
    pow_h_[i] = pow_h_[i - 1] * h2;
    pow_m_[i] = pow_m_[i - 1] * m2;
  }
  q_pow_h_ = ipow(q_, h_);
  memo_.assign((max_size_ + 1) * (max_size_ + 1), -1);
}

bool ChainEvaluator::reduced_inequality(std::uint64_t sizeM, std::uint64_t sizeZ) {
  auto& slot = memo_[sizeM * (max_size_ + 1) + sizeZ];
  if (slot < 0) slot = pow_mq_[sizeZ] * pow_h_[sizeM - sizeZ] * q_pow_h_ <= pow_m_[sizeM];
  return slot != 0;
}

bool ChainEvaluator::h_small(std::uint64_t c) {
  if (c >= h_small_memo_.size()) h_small_memo_.resize(c + 1, -1);
  auto& slot = h_small_memo_[c];
  if (slot < 0) slot = ipow(BigInt(h_), c) * q_ <= ipow(m_, c);
  return slot != 0;
}

ChainReport ChainEvaluator::check(std::uint64_t c, std::uint64_t sizeM, std::uint64_t sizeZ, std::uint64_t n) {
  check_chain_pre(h_, sizeM, sizeZ, n, m_);
  if (n > max_size_) throw Error(Errc::InvalidArgument, "n exceeds the evaluator table size");
  ChainReport r;
  r.inequality = reduced_inequality(sizeM, sizeZ);
  r.h_small = h_small(c);
  r.c_large = c >= 5;
  r.z_small = sizeZ * (2 * c - 2) <= sizeM;
  r.m_large = sizeM >= 2 * c * h_;
  return r;
}

bool within_headline_bound(const BigInt& count, const BigInt& q, std::uint64_t h, const BigInt& m,
                           std::uint64_t n) {
  return count * count * ipow(q, h) <= ipow(m, 2 * n);
}

AgreementSystem parse_sets_json(const std::string& text, std::uint64_t c, std::uint64_t h) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("sets.json: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto L = j.at("L").get<std::size_t>();
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& s : j.at("I")) {
      std::vector<std::size_t> set;
      for (const auto& e : s) {
        const auto v = e.get<std::size_t>();
        if (v < 1) throw Error(Errc::ParseError, "sets.json elements are 1-based");
        set.push_back(v - 1);
      }
      sets.push_back(std::move(set));
    }
    if (sets.size() != L + 1) throw Error(Errc::ParseError, "sets.json must list exactly L+1 sets");
    return AgreementSystem::make(n, std::move(sets), c, h);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("sets.json: ") + e.what());
  }
}

}  // namespace rsld::badtuples
