#include "rsld/listdec.hpp"

#include "rsld/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rsld::listdec {

ListDecParams ListDecParams::make(const Rational& r, std::size_t L, std::size_t n) {
  if (L < 1) throw Error(Errc::InvalidArgument, "list size L must be at least 1");
  if (n < 1) throw Error(Errc::InvalidArgument, "block length must be positive");
  return {r, L, n, codes::agreement_threshold(r, n)};
}

namespace {

void check_params(const Code& code, const ListDecParams& params) {
  if (params.n != code.m()) throw Error(Errc::LengthMismatch, "params block length differs from code");
}

// One column of the reduced center space.
struct Column {
  std::vector<Symbol> symbols;                     // distinct symbols in the column, ascending
  std::vector<std::vector<std::uint32_t>> holders;  // word indices carrying each symbol
  std::optional<Symbol> sentinel;                  // smallest symbol absent from the column
};

std::vector<Column> build_columns(const Code& code) {
  std::vector<Column> cols(code.m());
  std::vector<std::int64_t> slot(code.q(), -1);
  for (std::size_t pos = 0; pos < code.m(); ++pos) {
    Column& col = cols[pos];
    std::fill(slot.begin(), slot.end(), -1);
    std::vector<Symbol> present;
    for (const auto& w : code.words()) {
      if (slot[w[pos]] < 0) {
        slot[w[pos]] = 0;
        present.push_back(w[pos]);
      }
    }
    std::sort(present.begin(), present.end());
    for (std::size_t i = 0; i < present.size(); ++i) slot[present[i]] = static_cast<std::int64_t>(i);
    col.symbols = present;
    col.holders.resize(present.size());
    for (std::size_t wi = 0; wi < code.size(); ++wi) {
      col.holders[slot[code.word(wi)[pos]]].push_back(static_cast<std::uint32_t>(wi));
    }
    if (present.size() < code.q()) {
      Symbol s = 0;
      while (s < present.size() && present[s] == s) ++s;
      col.sentinel = s;
    }
  }
  return cols;
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Code& code, const ListDecParams& params, const Budget& budget)
      : code_(code), params_(params), budget_(budget), cols_(build_columns(code)),
        agree_(code.size(), 0), center_(code.m(), 0) {}

  Decision run() {
    Decision out;
    if (dfs(0)) {
      out.decodable = false;
      out.witness = std::move(found_);
    }
    out.stats = stats_;
    return out;
  }

 private:
  bool dfs(std::size_t pos) {
    if (++stats_.nodes > budget_.max_nodes) throw Error(Errc::BudgetExceeded, "exhaustive search node budget");
    const std::size_t remaining = code_.m() - pos;
    std::size_t viable = 0;
    for (auto a : agree_) viable += a + remaining >= params_.t;
    if (viable <= params_.L) return false;
    if (pos == code_.m()) {
      Witness w;
      w.center = center_;
      for (std::size_t i = 0; i < agree_.size() && w.members.size() <= params_.L; ++i) {
        if (agree_[i] >= params_.t) w.members.push_back(i);
      }
      found_ = std::move(w);
      return true;
    }
    const Column& col = cols_[pos];
    for (std::size_t s = 0; s < col.symbols.size(); ++s) {
      center_[pos] = col.symbols[s];
      for (auto wi : col.holders[s]) ++agree_[wi];
      const bool hit = dfs(pos + 1);
      for (auto wi : col.holders[s]) --agree_[wi];
      if (hit) return true;
    }
    if (col.sentinel) {
      center_[pos] = *col.sentinel;
      if (dfs(pos + 1)) return true;
    }
    return false;
  }

  const Code& code_;
  const ListDecParams& params_;
  const Budget& budget_;
  std::vector<Column> cols_;
  std::vector<std::size_t> agree_;
  Codeword center_;
  SearchStats stats_;
  std::optional<Witness> found_;
};

class CenterSearch {
 public:
  CenterSearch(std::span<const WordView> words, std::size_t t, SearchStats* stats, std::uint64_t max_nodes)
      : words_(words), t_(t), n_(words.front().size()), stats_(stats), max_nodes_(max_nodes),
        credit_(words.size(), 0), center_(n_, 0) {
    struct Option {
      Symbol symbol;
      std::vector<std::uint32_t> holders;
    };
    options_.resize(n_);
    std::vector<std::size_t> top(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) {
      std::vector<Option> opts;
      for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        const Symbol s = words_[wi][pos];
        auto it = std::find_if(opts.begin(), opts.end(), [&](const Option& o) { return o.symbol == s; });
        if (it == opts.end()) {
          opts.push_back({s, {static_cast<std::uint32_t>(wi)}});
        } else {
          it->holders.push_back(static_cast<std::uint32_t>(wi));
        }
      }
      std::stable_sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) {
        if (a.holders.size() != b.holders.size()) return a.holders.size() > b.holders.size();
        return a.symbol < b.symbol;
      });
      top[pos] = opts.front().holders.size();
      for (auto& o : opts) options_[pos].emplace_back(o.symbol, std::move(o.holders));
    }
    // Most-constrained positions first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return top[a] > top[b]; });
  }

  std::optional<Codeword> run() {
    if (dfs(0)) return center_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t depth) {
    if (stats_ && ++stats_->nodes > max_nodes_) throw Error(Errc::BudgetExceeded, "center search node budget");
    const std::size_t remaining = n_ - depth;
    bool done = true;
    for (auto c : credit_) {
      if (c + remaining < t_) return false;
      done = done && c >= t_;
    }
    if (done) {
      // Remaining positions are unconstrained.
      for (std::size_t d = depth; d < n_; ++d) center_[order_[d]] = words_.front()[order_[d]];
      return true;
    }
    const std::size_t pos = order_[depth];
    // A symbol choice never lowers any credit relative to matching no word,
    // so the "no credit" branch is dominated and skipped.
    for (const auto& [symbol, holders] : options_[pos]) {
      center_[pos] = symbol;
      for (auto wi : holders) ++credit_[wi];
      const bool hit = dfs(depth + 1);
      for (auto wi : holders) --credit_[wi];
      if (hit) return true;
    }
    return false;
  }

  std::span<const WordView> words_;
  std::size_t t_;
  std::size_t n_;
  SearchStats* stats_;
  std::uint64_t max_nodes_;
  std::vector<std::size_t> credit_;
  Codeword center_;
  std::vector<std::vector<std::pair<Symbol, std::vector<std::uint32_t>>>> options_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::size_t ball_count(const Code& code, WordView center, const ListDecParams& params) {
  check_params(code, params);
  if (center.size() != code.m()) throw Error(Errc::LengthMismatch, "center length differs from code");
  std::size_t count = 0;
  for (const auto& w : code.words()) count += codes::agreement(center, w) >= params.t;
  return count;
}

BigInt reduced_center_space(const Code& code) {
  BigInt space = 1;
  for (const auto& col : build_columns(code)) space *= col.symbols.size() + (col.sentinel ? 1 : 0);
  return space;
}

Decision decide_exhaustive(const Code& code, const ListDecParams& params, const Budget& budget) {
  check_params(code, params);
  if (params.L >= code.size()) return {};
  const BigInt space = reduced_center_space(code);
  if (space > budget.center_space_cap) {
    throw Error(Errc::SearchSpaceTooLarge,
                "reduced center space " + space.str() + " exceeds cap " + std::to_string(budget.center_space_cap));
  }
  return ExhaustiveSearch(code, params, budget).run();
}

std::optional<Codeword> center_exists(std::span<const WordView> words, std::size_t t, SearchStats* stats,
                                      std::uint64_t max_nodes) {
  if (words.empty()) throw Error(Errc::InvalidArgument, "center_exists needs at least one word");
  const std::size_t n = words.front().size();
  for (const auto& w : words) {
    if (w.size() != n) throw Error(Errc::LengthMismatch, "words of different length");
  }
  if (t > n) return std::nullopt;
  return CenterSearch(words, t, stats, max_nodes).run();
}

std::optional<Codeword> center_exists(const std::vector<Codeword>& words, std::size_t t) {
  std::vector<WordView> views(words.begin(), words.end());
  return center_exists(views, t);
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const Code& code, const ListDecParams& params, const Budget& budget)
      : code_(code), params_(params), budget_(budget), n_words_(code.size()), k_(params.L + 1) {
    // Two words admit a common center iff the positions where they disagree
    // can cover both deficits: 2 * max(0, t - agree) <= n - agree.
    compat_.assign(n_words_ * n_words_, 0);
    for (std::size_t a = 0; a < n_words_; ++a) {
      for (std::size_t b = a + 1; b < n_words_; ++b) {
        const std::size_t agree = codes::agreement(code.word(a), code.word(b));
        const std::size_t need = params.t > agree ? params.t - agree : 0;
        const bool ok = 2 * need <= code.m() - agree;
        compat_[a * n_words_ + b] = compat_[b * n_words_ + a] = ok;
      }
    }
  }

  Decision run() {
    Decision out;
    if (rec(0, n_words_)) {
      out.decodable = false;
      out.witness = std::move(found_);
    }
    out.stats = stats_;
    return out;
  }

 private:
  std::optional<Codeword> feasible() {
    std::vector<WordView> views;
    views.reserve(chosen_.size());
    for (auto i : chosen_) views.emplace_back(code_.word(i));
    return center_exists(views, params_.t, &stats_, budget_.max_nodes);
  }

  // Level 0 picks the largest element; ascending loops at every level visit
  // subsets in colex order.
  bool rec(std::size_t level, std::size_t upper) {
    for (std::size_t x = k_ - 1 - level; x < upper; ++x) {
      bool ok = true;
      for (auto c : chosen_) {
        if (!compat_[x * n_words_ + c]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen_.push_back(x);
      if (level + 1 == k_) {
        if (++stats_.subsets > budget_.max_subsets) throw Error(Errc::BudgetExceeded, "subset budget");
        if (auto center = feasible()) {
          Witness w;
          w.center = std::move(*center);
          w.members = chosen_;
          std::sort(w.members.begin(), w.members.end());
          found_ = std::move(w);
          return true;
        }
      } else {
        // A prefix without a common center cannot be extended to one.
        const bool prefix_ok = chosen_.size() < 3 || feasible().has_value();
        if (prefix_ok && rec(level + 1, x)) return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  const Code& code_;
  const ListDecParams& params_;
  const Budget& budget_;
  std::size_t n_words_;
  std::size_t k_;
  std::vector<std::uint8_t> compat_;
  std::vector<std::size_t> chosen_;
  SearchStats stats_;
  std::optional<Witness> found_;
};

}  // namespace

Decision decide_witness_search(const Code& code, const ListDecParams& params, const Budget& budget) {
  check_params(code, params);
  if (params.L + 1 > code.size()) return {};
  return SubsetSearch(code, params, budget).run();
}

bool verify_witness(const Code& code, const ListDecParams& params, const Witness& witness) {
  if (witness.center.size() != code.m() || witness.members.size() != params.L + 1) return false;
  for (auto s : witness.center) {
    if (s >= code.q()) return false;
  }
  auto members = witness.members;
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
  for (auto i : members) {
    if (i >= code.size()) return false;
    if (codes::agreement(witness.center, code.word(i)) < params.t) return false;
  }
  return true;
}

}  // namespace rsld::listdec
