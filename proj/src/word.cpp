#include "semiquad/word.hpp"

#include <sstream>

namespace semiquad {

Alphabet::Alphabet(int n) : n_(n) {
  if (n < 1 || n > kMaxGenerators) {
    throw UsageError("alphabet size must be in 1.." + std::to_string(kMaxGenerators) +
                     ", got " + std::to_string(n));
  }
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x < 1 || x > kMaxGenerators) {
      throw UsageError("generator index out of range: " + std::to_string(x));
    }
    letters_.push_back(static_cast<char>(x));
  }
}

Word::Word(std::span<const Letter> letters)
    : letters_(reinterpret_cast<const char*>(letters.data()), letters.size()) {}

Word Word::power(Letter a, std::size_t k) {
  Word w;
  w.letters_.assign(k, static_cast<char>(a));
  return w;
}

Word Word::from_key(std::string_view key) {
  Word w;
  w.letters_.assign(key);
  return w;
}

Word Word::appended(Letter x) const {
  Word w = *this;
  w.letters_.push_back(static_cast<char>(x));
  return w;
}

Word Word::prefix(std::size_t len) const { return factor(0, len); }

Word Word::suffix(std::size_t len) const { return factor(degree() - len, len); }

Word Word::factor(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.letters_ += other.letters_;
  return w;
}

std::vector<int> Word::to_vector() const {
  std::vector<int> out;
  out.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.push_back((*this)[i]);
  return out;
}

std::string Word::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i) os << '*';
    os << 'x' << static_cast<int>((*this)[i]);
  }
  return os.str();
}

std::strong_ordering rtl_lex_cmp(const Word& u, const Word& v) {
  if (u.degree() != v.degree()) {
    throw UsageError("rtl_lex_cmp: degree mismatch (" + std::to_string(u.degree()) + " vs " +
                     std::to_string(v.degree()) + ")");
  }
  for (std::size_t i = u.degree(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

std::vector<Word> all_words(int n, std::size_t degree) {
  std::vector<Word> out;
  if (degree == 0) return out;
  std::vector<Letter> cur(degree, 1);
  for (;;) {
    out.emplace_back(std::span<const Letter>(cur));
    // odometer with position 0 fastest gives ascending rtl-lex order
    std::size_t i = 0;
    while (i < degree && cur[i] == n) cur[i++] = 1;
    if (i == degree) break;
    ++cur[i];
  }
  return out;
}

}  // namespace semiquad
