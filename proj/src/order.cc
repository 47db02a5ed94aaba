#include "rectflip/order.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rectflip {

namespace {

constexpr int kMaxMaskSize = 11;

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("permutations of different sizes: " + a.str() +
                                " and " + b.str());
  }
}

class Bitset {
 public:
  explicit Bitset(size_t n) : words_((n + 63) / 64, 0) {}
  void set(size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }
  bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

 private:
  std::vector<uint64_t> words_;
};

}  // namespace

uint64_t inversion_mask(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxMaskSize) {
    throw std::invalid_argument("inversion mask needs n <= " +
                                std::to_string(kMaxMaskSize));
  }
  uint64_t mask = 0;
  for (auto [a, b] : inversion_set(p)) {
    mask |= uint64_t{1} << ((b - 1) * (b - 2) / 2 + (a - 1));
  }
  return mask;
}

bool weak_leq(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  if (a.size() <= kMaxMaskSize) {
    return (inversion_mask(a) & ~inversion_mask(b)) == 0;
  }
  const auto ia = inversion_set(a);
  const auto ib = inversion_set(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

CoverSet weak_order_covers(int n) {
  CoverSet out;
  for (const Permutation& p : all_permutations(n)) {
    for (int j = 1; j < n; ++j) {
      if (p(j) < p(j + 1)) out.emplace(p, adjacent_position_swap(p, j));
    }
  }
  return out;
}

CoverSet restricted_covers(const std::vector<Permutation>& elements) {
  const size_t m = elements.size();
  std::vector<uint64_t> masks(m);
  for (size_t i = 0; i < m; ++i) masks[i] = inversion_mask(elements[i]);
  // above[i]: elements strictly greater than element i.
  std::vector<Bitset> above(m, Bitset(m));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i != j && (masks[i] & ~masks[j]) == 0) above[i].set(j);
    }
  }
  CoverSet out;
  for (size_t i = 0; i < m; ++i) {
    Bitset reachable_in_two(m);
    for (size_t j = 0; j < m; ++j) {
      if (above[i].test(j)) reachable_in_two |= above[j];
    }
    for (size_t j = 0; j < m; ++j) {
      if (above[i].test(j) && !reachable_in_two.test(j)) {
        out.emplace(elements[i], elements[j]);
      }
    }
  }
  return out;
}

CoverSet drec_covers(int n) {
  return restricted_covers(enumerate_avoiders(n, PatternClass::kBaxter));
}

CoverRelation drec_relation(const Permutation& a, const Permutation& b) {
  require_same_size(a, b);
  for (const Permutation* p : {&a, &b}) {
    if (!is_baxter(*p)) {
      throw std::invalid_argument(p->str() + " is not a Baxter permutation");
    }
  }
  if (a == b) return CoverRelation::kNone;
  const bool up = weak_leq(a, b);
  if (!up && !weak_leq(b, a)) return CoverRelation::kNone;
  const Permutation& lo = up ? a : b;
  const Permutation& hi = up ? b : a;
  for (const Permutation& s : enumerate_avoiders(a.size(), PatternClass::kBaxter)) {
    if (s != lo && s != hi && weak_leq(lo, s) && weak_leq(s, hi)) {
      return CoverRelation::kNone;
    }
  }
  return up ? CoverRelation::kCovers : CoverRelation::kCoveredBy;
}

namespace {

// The greatest common lower bound (or least upper bound when `upper`).
std::optional<Permutation> extremal_bound(const Permutation& a,
                                          const Permutation& b, bool upper) {
  require_same_size(a, b);
  std::vector<Permutation> bounds;
  for (const Permutation& s : all_permutations(a.size())) {
    const bool ok = upper ? weak_leq(a, s) && weak_leq(b, s)
                          : weak_leq(s, a) && weak_leq(s, b);
    if (ok) bounds.push_back(s);
  }
  for (const Permutation& c : bounds) {
    const bool best = std::all_of(bounds.begin(), bounds.end(), [&](const auto& s) {
      return upper ? weak_leq(c, s) : weak_leq(s, c);
    });
    if (best) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Permutation> weak_meet(const Permutation& a, const Permutation& b) {
  return extremal_bound(a, b, false);
}

std::optional<Permutation> weak_join(const Permutation& a, const Permutation& b) {
  return extremal_bound(a, b, true);
}

bool weak_order_is_lattice(int n) {
  const auto all = all_permutations(n);
  std::vector<uint64_t> masks;
  for (const auto& p : all) masks.push_back(inversion_mask(p));
  const size_t m = all.size();
  auto leq = [&](size_t i, size_t j) { return (masks[i] & ~masks[j]) == 0; };
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      for (bool upper : {false, true}) {
        std::vector<size_t> bounds;
        for (size_t s = 0; s < m; ++s) {
          if (upper ? leq(a, s) && leq(b, s) : leq(s, a) && leq(s, b)) {
            bounds.push_back(s);
          }
        }
        const bool has_extremum = std::any_of(bounds.begin(), bounds.end(), [&](size_t c) {
          return std::all_of(bounds.begin(), bounds.end(), [&](size_t s) {
            return upper ? leq(c, s) : leq(s, c);
          });
        });
        if (!has_extremum) return false;
      }
    }
  }
  return true;
}

bool is_weak_interval(const std::vector<Permutation>& members) {
  if (members.empty()) return false;
  const Permutation* lo = nullptr;
  const Permutation* hi = nullptr;
  for (const Permutation& c : members) {
    bool is_min = true;
    bool is_max = true;
    for (const Permutation& s : members) {
      is_min = is_min && weak_leq(c, s);
      is_max = is_max && weak_leq(s, c);
    }
    if (is_min) lo = &c;
    if (is_max) hi = &c;
  }
  if (lo == nullptr || hi == nullptr) return false;
  // Walk up from the minimum by covers, staying below the maximum.
  std::set<Permutation> interval{*lo};
  std::vector<Permutation> frontier{*lo};
  const int n = lo->size();
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.back());
    frontier.pop_back();
    for (int j = 1; j < n; ++j) {
      if (p(j) > p(j + 1)) continue;
      Permutation q = adjacent_position_swap(p, j);
      if (weak_leq(q, *hi) && interval.insert(q).second) frontier.push_back(q);
    }
  }
  const std::set<Permutation> given(members.begin(), members.end());
  return given.size() == members.size() && given == interval;
}

}  // namespace rectflip
