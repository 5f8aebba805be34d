#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semiquad {

/// Generator index, 1-based. Generator i renders as "x<i>".
using Letter = std::uint8_t;

inline constexpr int kMaxGenerators = 250;

/// Raised when an operation is called outside its contract
/// (degree mismatch, out-of-range generator, precondition violation).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Totally ordered generator set {1 < 2 < ... < n}.
class Alphabet {
 public:
  explicit Alphabet(int n);

  int size() const noexcept { return n_; }
  Letter min() const noexcept { return 1; }
  Letter max() const noexcept { return static_cast<Letter>(n_); }
  bool contains(int letter) const noexcept { return letter >= 1 && letter <= n_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int n_;
};

/// A monomial of fixed degree: a sequence of generator indices.
///
/// Letters are stored one per byte so that the word doubles as a hash key
/// in the class search sets.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const Letter> letters);

  /// The word a^k.
  static Word power(Letter a, std::size_t k);
  /// Inverse of key(); no range checking.
  static Word from_key(std::string_view key);

  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 0-based access.
  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i]);
  }
  Letter back() const noexcept { return static_cast<Letter>(letters_.back()); }

  Word appended(Letter x) const;
  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;
  Word factor(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;

  /// Overwrite the two letters at positions i, i+1.
  void set_pair(std::size_t i, Letter left, Letter right) {
    letters_[i] = static_cast<char>(left);
    letters_[i + 1] = static_cast<char>(right);
  }

  std::vector<int> to_vector() const;
  std::string_view key() const noexcept { return letters_; }

  /// "x1*x2*x1"
  std::string render() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Right-to-left lexicographic comparison of equal-degree words: the last
/// differing position decides.
std::strong_ordering rtl_lex_cmp(const Word& u, const Word& v);

inline bool rtl_less(const Word& u, const Word& v) { return rtl_lex_cmp(u, v) < 0; }

/// Every word of the given degree over an n-letter alphabet, in rtl-lex order.
std::vector<Word> all_words(int n, std::size_t degree);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.key());
  }
};

}  // namespace semiquad
