#ifndef RECTFLIP_PERMUTATION_H_
#define RECTFLIP_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rectflip {

// A permutation of {1..n} in one-line (word) notation. Values and positions
// are 1-based in the public interface.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  // Accepts a digit string ("4165372") or comma-separated values
  // ("10,2,1,..."). Whitespace is ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position.
  int operator()(int position) const { return word_[position - 1]; }
  std::span<const int> word() const { return word_; }

  // Digit string for n <= 9, comma separated otherwise.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

Permutation inverse(const Permutation& p);

// Value pairs (a, b), a < b, such that b occurs before a in the word.
std::vector<std::pair<int, int>> inversion_set(const Permutation& p);
int inversion_count(const Permutation& p);

// Exchanges the values k and k+1 (their positions stay put).
Permutation consecutive_value_swap(const Permutation& p, int k);
// Exchanges the entries at positions j and j+1.
Permutation adjacent_position_swap(const Permutation& p, int j);

// Permutation pattern with glued positions. `glued` holds 1-based indices i
// such that pattern entries i and i+1 must sit at adjacent host positions.
struct VincularPattern {
  Permutation word;
  std::vector<int> glued;

  // Notation: brackets mark a consecutive block, e.g. "3[14]2".
  static VincularPattern parse(std::string_view text);
  std::string str() const;
};

bool contains_vincular(const Permutation& host, const VincularPattern& pattern);

enum class PatternClass {
  kSeparable,
  kBaxter,
  kTwistedBaxter,
  kRightmost,  // {3[14]2, 2[14]3}
  kS,          // {3[41]2, 2[14]3}
};

const std::vector<VincularPattern>& patterns(PatternClass c);
std::string_view class_name(PatternClass c);
// Inverse of class_name; throws std::invalid_argument.
PatternClass parse_class(std::string_view name);

bool avoids(const Permutation& host, PatternClass c);
inline bool is_baxter(const Permutation& p) {
  return avoids(p, PatternClass::kBaxter);
}

// All permutations of size n, in lexicographic order.
std::vector<Permutation> all_permutations(int n);
// Avoiders of `c` of size n, in lexicographic order.
std::vector<Permutation> enumerate_avoiders(int n, PatternClass c);

}  // namespace rectflip

#endif  // RECTFLIP_PERMUTATION_H_
