#include "rectflip/permutation.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rectflip {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> w;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation digit: " + s);
      }
      w.push_back(c - '0');
    }
  } else {
    size_t start = 0;
    while (start <= s.size()) {
      size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      std::string tok = s.substr(start, end - start);
      if (tok.empty() ||
          !std::all_of(tok.begin(), tok.end(),
                       [](char c) { return c >= '0' && c <= '9'; }) ||
          tok.size() > 6) {
        throw std::invalid_argument("bad permutation value: '" + tok + "'");
      }
      w.push_back(std::stoi(tok));
      start = end + 1;
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[p(i) - 1] = i;
  return Permutation(std::move(w));
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  auto w = p.word();
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) out.emplace_back(w[j], w[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  auto w = p.word();
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

Permutation consecutive_value_swap(const Permutation& p, int k) {
  if (k < 1 || k >= p.size()) {
    throw std::out_of_range("consecutive_value_swap: k out of range");
  }
  std::vector<int> w(p.word().begin(), p.word().end());
  for (int& v : w) {
    if (v == k) {
      v = k + 1;
    } else if (v == k + 1) {
      v = k;
    }
  }
  return Permutation(std::move(w));
}

Permutation adjacent_position_swap(const Permutation& p, int j) {
  if (j < 1 || j >= p.size()) {
    throw std::out_of_range("adjacent_position_swap: j out of range");
  }
  std::vector<int> w(p.word().begin(), p.word().end());
  std::swap(w[j - 1], w[j]);
  return Permutation(std::move(w));
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> w;
  std::vector<int> glued;
  bool in_block = false;
  int block_start = 0;
  for (char c : text) {
    if (c == '[') {
      if (in_block) throw std::invalid_argument("nested block in pattern");
      in_block = true;
      block_start = static_cast<int>(w.size());
    } else if (c == ']') {
      if (!in_block) throw std::invalid_argument("unbalanced ']' in pattern");
      in_block = false;
      for (int i = block_start + 1; i < static_cast<int>(w.size()); ++i) {
        glued.push_back(i);
      }
    } else if (c >= '1' && c <= '9') {
      w.push_back(c - '0');
    } else {
      throw std::invalid_argument("bad character in pattern");
    }
  }
  if (in_block) throw std::invalid_argument("unbalanced '[' in pattern");
  return VincularPattern{Permutation(std::move(w)), std::move(glued)};
}

std::string VincularPattern::str() const {
  std::string out;
  auto is_glued = [&](int i) {
    return std::find(glued.begin(), glued.end(), i) != glued.end();
  };
  for (int i = 1; i <= word.size(); ++i) {
    if (is_glued(i) && !is_glued(i - 1)) out.push_back('[');
    out.push_back(static_cast<char>('0' + word(i)));
    if (is_glued(i - 1) && !is_glued(i)) out.push_back(']');
  }
  return out;
}

namespace {

// Depth-first placement of pattern entries onto host positions. `chosen[k]`
// is the 0-based host position of pattern entry k+1.
bool match_from(std::span<const int> host, std::span<const int> pat,
                const std::vector<bool>& glue_next, std::vector<int>& chosen,
                int k) {
  const int m = static_cast<int>(pat.size());
  const int n = static_cast<int>(host.size());
  if (k == m) return true;
  int lo = k == 0 ? 0 : chosen[k - 1] + 1;
  int hi = n - (m - k);
  if (k > 0 && glue_next[k - 1]) hi = std::min(hi, lo);
  for (int pos = lo; pos <= hi; ++pos) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      ok = (pat[i] < pat[k]) == (host[chosen[i]] < host[pos]);
    }
    if (!ok) continue;
    chosen[k] = pos;
    if (match_from(host, pat, glue_next, chosen, k + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_vincular(const Permutation& host,
                       const VincularPattern& pattern) {
  const int m = pattern.word.size();
  if (m > host.size()) return false;
  std::vector<bool> glue_next(m, false);
  for (int i : pattern.glued) {
    if (i < 1 || i >= m) throw std::invalid_argument("glue index out of range");
    glue_next[i - 1] = true;
  }
  std::vector<int> chosen(m);
  return match_from(host.word(), pattern.word.word(), glue_next, chosen, 0);
}

const std::vector<VincularPattern>& patterns(PatternClass c) {
  static const std::vector<VincularPattern> separable = {
      VincularPattern::parse("3142"), VincularPattern::parse("2413")};
  static const std::vector<VincularPattern> baxter = {
      VincularPattern::parse("3[14]2"), VincularPattern::parse("2[41]3")};
  static const std::vector<VincularPattern> twisted = {
      VincularPattern::parse("3[41]2"), VincularPattern::parse("2[41]3")};
  static const std::vector<VincularPattern> rightmost = {
      VincularPattern::parse("3[14]2"), VincularPattern::parse("2[14]3")};
  static const std::vector<VincularPattern> s_class = {
      VincularPattern::parse("3[41]2"), VincularPattern::parse("2[14]3")};
  switch (c) {
    case PatternClass::kSeparable: return separable;
    case PatternClass::kBaxter: return baxter;
    case PatternClass::kTwistedBaxter: return twisted;
    case PatternClass::kRightmost: return rightmost;
    case PatternClass::kS: return s_class;
  }
  throw std::logic_error("unknown pattern class");
}

std::string_view class_name(PatternClass c) {
  switch (c) {
    case PatternClass::kSeparable: return "separable";
    case PatternClass::kBaxter: return "baxter";
    case PatternClass::kTwistedBaxter: return "twisted_baxter";
    case PatternClass::kRightmost: return "rightmost_class";
    case PatternClass::kS: return "s_class";
  }
  return "?";
}

PatternClass parse_class(std::string_view name) {
  for (auto c : {PatternClass::kSeparable, PatternClass::kBaxter,
                 PatternClass::kTwistedBaxter, PatternClass::kRightmost,
                 PatternClass::kS}) {
    if (class_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown pattern class: " + std::string(name));
}

bool avoids(const Permutation& host, PatternClass c) {
  for (const auto& p : patterns(c)) {
    if (contains_vincular(host, p)) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> enumerate_avoiders(int n, PatternClass c) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiders: n < 0");
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(w);
    if (avoids(p, c)) out.push_back(std::move(p));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace rectflip
