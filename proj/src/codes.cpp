#include "rsld/codes.hpp"

#include "rsld/error.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

namespace rsld::codes {

Code::Code(std::uint32_t q, std::size_t m, std::vector<Codeword> words, std::size_t cap)
    : q_(q), m_(m), words_(std::move(words)) {
  if (q_ < 1) throw Error(Errc::InvalidArgument, "alphabet size must be positive");
  if (words_.size() > cap) {
    throw Error(Errc::TooLargeToMaterialize, "code has more than " + std::to_string(cap) + " words");
  }
  for (const auto& w : words_) {
    if (w.size() != m_) throw Error(Errc::LengthMismatch, "codeword length differs from block length");
    for (auto s : w) {
      if (s >= q_) throw Error(Errc::InvalidArgument, "symbol outside alphabet");
    }
  }
  std::vector<const Codeword*> sorted(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) sorted[i] = &words_[i];
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  auto dup = std::adjacent_find(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a == *b; });
  if (dup != sorted.end()) throw Error(Errc::DuplicateWord, "code contains a repeated word");
}

std::size_t hamming_distance(WordView x, WordView y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "words of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t agreement(WordView x, WordView y) { return x.size() - hamming_distance(x, y); }

std::size_t compute_min_distance(const Code& code) {
  if (code.size() < 2) throw Error(Errc::TooFewCodewords, "minimum distance needs at least two words");
  const auto& w = code.words();
  std::size_t best = code.m();
  for (std::size_t i = 0; i < w.size() && best > 1; ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      best = std::min(best, hamming_distance(w[i], w[j]));
    }
  }
  return best;
}

std::size_t min_distance(Code& code) {
  const std::size_t d = compute_min_distance(code);
  code.cache_distance({d, code.m() - d, DistanceProvenance::Verified});
  return d;
}

std::size_t agreement_threshold(const Rational& r, std::size_t n) {
  if (r <= 0 || r >= 1) throw Error(Errc::RadiusOutOfRange, "radius must lie strictly between 0 and 1");
  const BigInt t = ceil_of((Rational(1) - r) * n);
  return t.convert_to<std::size_t>();
}

bool ball_member(WordView center, WordView word, const Rational& r) {
  const std::size_t agree = agreement(center, word);
  return agree >= agreement_threshold(r, center.size());
}

PuncturingPlan::PuncturingPlan(std::size_t m, std::vector<std::size_t> positions)
    : m_(m), positions_(std::move(positions)) {
  if (positions_.size() > m_) throw Error(Errc::NTooLarge, "plan longer than source block length");
  std::vector<bool> seen(m_, false);
  for (auto a : positions_) {
    if (a >= m_) throw Error(Errc::InvalidArgument, "plan position out of range");
    if (seen[a]) throw Error(Errc::DuplicateTupleEntry, "plan positions must be distinct");
    seen[a] = true;
  }
}

std::vector<std::size_t> PuncturingPlan::index_set() const {
  auto s = positions_;
  std::sort(s.begin(), s.end());
  return s;
}

PuncturingPlan PuncturingPlan::identity(std::size_t m) {
  std::vector<std::size_t> pos(m);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  return PuncturingPlan(m, std::move(pos));
}

PunctureResult puncture(const Code& code, const PuncturingPlan& plan) {
  if (plan.m() != code.m()) throw Error(Errc::PlanMismatch, "plan source length differs from code length");
  std::vector<Codeword> restricted;
  restricted.reserve(code.size());
  for (const auto& w : code.words()) {
    Codeword r(plan.n());
    for (std::size_t i = 0; i < plan.n(); ++i) r[i] = w[plan.positions()[i]];
    restricted.push_back(std::move(r));
  }
  // Keep the first occurrence of each restricted word, preserving source order.
  std::vector<std::size_t> order(restricted.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return restricted[a] < restricted[b]; });
  std::vector<bool> keep(restricted.size(), false);
  bool collapsed = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && restricted[order[i]] == restricted[order[i - 1]]) {
      collapsed = true;
    } else {
      keep[order[i]] = true;
    }
  }
  std::vector<Codeword> words;
  words.reserve(restricted.size());
  for (std::size_t i = 0; i < restricted.size(); ++i) {
    if (keep[i]) words.push_back(std::move(restricted[i]));
  }
  return {Code(code.q(), plan.n(), std::move(words), std::max(code.size(), kDefaultCodeCap)), collapsed};
}

PuncturingPlan sample_puncturing(std::size_t m, std::size_t n, Rng& rng) {
  if (n > m) throw Error(Errc::NTooLarge, "cannot choose more positions than the block length");
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.below(m - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return PuncturingPlan(m, std::move(pool));
}

PuncturingPlan sample_puncturing(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_puncturing(m, n, rng);
}

namespace {

template <typename T>
T read_value(std::istream& in, const char* what) {
  long long v = 0;
  if (!(in >> v)) throw Error(Errc::ParseError, std::string("expected ") + what);
  if (v < 0) throw Error(Errc::ParseError, std::string("negative ") + what);
  return static_cast<T>(v);
}

}  // namespace

void write_code(std::ostream& out, const Code& code) {
  out << code.q() << ' ' << code.m() << ' ' << code.size() << '\n';
  for (const auto& w : code.words()) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

Code read_code(std::istream& in) {
  const auto q = read_value<std::uint32_t>(in, "alphabet size q");
  const auto m = read_value<std::size_t>(in, "block length m");
  const auto count = read_value<std::size_t>(in, "word count N");
  if (count > kDefaultCodeCap) throw Error(Errc::TooLargeToMaterialize, "code file lists too many words");
  std::vector<Codeword> words(count, Codeword(m));
  for (auto& w : words) {
    for (auto& s : w) s = read_value<Symbol>(in, "symbol");
  }
  return Code(q, m, std::move(words));
}

void write_plan(std::ostream& out, const PuncturingPlan& plan) {
  out << plan.m() << ' ' << plan.n() << '\n';
  for (std::size_t i = 0; i < plan.n(); ++i) out << (i ? " " : "") << plan.positions()[i] + 1;
  out << '\n';
}

PuncturingPlan read_plan(std::istream& in) {
  const auto m = read_value<std::size_t>(in, "source length m");
  const auto n = read_value<std::size_t>(in, "plan length n");
  if (n > m) throw Error(Errc::NTooLarge, "plan longer than source block length");
  std::vector<std::size_t> pos(n);
  for (auto& a : pos) {
    a = read_value<std::size_t>(in, "position");
    if (a == 0) throw Error(Errc::ParseError, "plan positions are 1-based");
    --a;
  }
  return PuncturingPlan(m, std::move(pos));
}

}  // namespace rsld::codes
