#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact word algebra for finite-rank free groups. Letters are encoded as
// nonzero ints: +k is the k-th generator (1-based), -k its inverse.

namespace autsurf {

using Letter = int;

inline Letter letter_inverse(Letter x) { return -x; }
inline int letter_index(Letter x) { return x > 0 ? x : -x; }

// Order a < a^-1 < b < b^-1 < ... used for all canonical forms.
inline int letter_key(Letter x) { return 2 * (letter_index(x) - 1) + (x < 0 ? 1 : 0); }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(freely_reduce(std::move(letters))) {}

  static Word from_raw(std::vector<Letter> letters) { return Word(std::move(letters)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& x : out) x = -x;
    Word w;
    w.letters_ = std::move(out);  // inverse of reduced word is reduced
    return w;
  }

  Word operator*(const Word& rhs) const {
    std::vector<Letter> out = letters_;
    for (Letter x : rhs.letters_) {
      if (!out.empty() && out.back() == -x)
        out.pop_back();
      else
        out.push_back(x);
    }
    Word w;
    w.letters_ = std::move(out);
    return w;
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  bool operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return std::lexicographical_compare(letters_.begin(), letters_.end(), o.letters_.begin(),
                                        o.letters_.end(), [](Letter a, Letter b) {
                                          return letter_key(a) < letter_key(b);
                                        });
  }

  int max_index() const {
    int m = 0;
    for (Letter x : letters_) m = std::max(m, letter_index(x));
    return m;
  }

  static std::vector<Letter> freely_reduce(std::vector<Letter> in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (Letter x : in) {
      if (x == 0) throw InvalidGenerator("zero letter");
      if (!out.empty() && out.back() == -x)
        out.pop_back();
      else
        out.push_back(x);
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

inline Word normalize(const std::vector<Letter>& raw, int rank = 0) {
  if (rank > 0)
    for (Letter x : raw)
      if (letter_index(x) > rank) throw InvalidGenerator("generator index out of range");
  return Word(raw);
}

// Cyclic words: cyclically reduced, stored as the lexicographically least
// rotation; unoriented comparisons additionally minimize over the inverse.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w) { assign(w.letters()); }
  explicit CyclicWord(std::vector<Letter> raw) { assign(Word::freely_reduce(std::move(raw))); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word as_word() const { return Word(letters_); }

  CyclicWord inverse() const { return CyclicWord(as_word().inverse()); }

  bool operator==(const CyclicWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const CyclicWord& o) const { return letters_ != o.letters_; }
  bool operator<(const CyclicWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return std::lexicographical_compare(letters_.begin(), letters_.end(), o.letters_.begin(),
                                        o.letters_.end(), [](Letter a, Letter b) {
                                          return letter_key(a) < letter_key(b);
                                        });
  }

  // Least rotation of min(w, w^-1); gives a class representative independent
  // of orientation.
  CyclicWord unoriented() const {
    CyclicWord inv = inverse();
    return *this < inv ? *this : inv;
  }

 private:
  void assign(std::vector<Letter> v) {
    // cyclic reduction
    while (v.size() >= 2 && v.front() == -v.back()) {
      v.erase(v.begin());
      v.pop_back();
    }
    if (v.empty()) {
      letters_.clear();
      return;
    }
    // canonical rotation: lexicographically least under letter_key
    std::size_t n = v.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
      for (std::size_t k = 0; k < n; ++k) {
        int a = letter_key(v[(s + k) % n]);
        int b = letter_key(v[(best + k) % n]);
        if (a != b) {
          if (a < b) best = s;
          break;
        }
      }
    }
    letters_.resize(n);
    for (std::size_t k = 0; k < n; ++k) letters_[k] = v[(best + k) % n];
  }

  std::vector<Letter> letters_;
};

inline CyclicWord cyclic_normalize(const std::vector<Letter>& raw, int rank = 0) {
  if (rank > 0)
    for (Letter x : raw)
      if (letter_index(x) > rank) throw InvalidGenerator("generator index out of range");
  return CyclicWord(raw);
}

inline bool conj_equal(const CyclicWord& u, const CyclicWord& v, bool unoriented = false) {
  if (u == v) return true;
  return unoriented && u == v.inverse();
}

// u = root^power with root not a proper power.
inline std::pair<CyclicWord, int> root_free(const CyclicWord& u) {
  const auto& v = u.letters();
  std::size_t n = v.size();
  if (n == 0) return {u, 1};
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p) continue;
    bool period = true;
    for (std::size_t k = 0; k + p < n && period; ++k) period = (v[k] == v[k + p]);
    if (period) {
      std::vector<Letter> root(v.begin(), v.begin() + p);
      return {CyclicWord(root), static_cast<int>(n / p)};
    }
  }
  return {u, 1};
}

// ---- text grammar -------------------------------------------------------
// letters a..z (uppercase = inverse), x<k>/X<k> for rank > 26, optional ^k.
// "1" or the empty string denotes the trivial word.

inline std::vector<Letter> parse_letters(const std::string& text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1' && (i + 1 == text.size() || text[i + 1] == ' ')) {
    return out;
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    Letter base = 0;
    if ((c == 'x' || c == 'X') && i + 1 < text.size() && std::isdigit(text[i + 1])) {
      std::size_t j = i + 1;
      long idx = 0;
      while (j < text.size() && std::isdigit(text[j])) idx = idx * 10 + (text[j++] - '0');
      if (idx <= 0) throw ParseError("bad generator index in '" + text + "'");
      base = (c == 'x') ? static_cast<Letter>(idx) : -static_cast<Letter>(idx);
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      base = c - 'a' + 1;
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      base = -(c - 'A' + 1);
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word '" + text + "'");
    }
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
      if (i >= text.size() || !std::isdigit(text[i])) throw ParseError("bad exponent in '" + text + "'");
      exp = 0;
      while (i < text.size() && std::isdigit(text[i])) exp = exp * 10 + (text[i++] - '0');
      if (neg) exp = -exp;
    }
    Letter l = exp >= 0 ? base : -base;
    for (long k = 0; k < std::abs(exp); ++k) out.push_back(l);
  }
  return out;
}

inline Word parse_word(const std::string& text, int rank = 0) {
  return normalize(parse_letters(text), rank);
}
inline CyclicWord parse_cyclic(const std::string& text, int rank = 0) {
  return cyclic_normalize(parse_letters(text), rank);
}

inline std::string letter_to_string(Letter x) {
  int idx = letter_index(x);
  if (idx <= 26) {
    char c = static_cast<char>((x > 0 ? 'a' : 'A') + idx - 1);
    return std::string(1, c);
  }
  return "x" + std::to_string(idx) + (x > 0 ? "" : "^-1");
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter x : w.letters()) out += letter_to_string(x);
  return out;
}
inline std::string to_string(const CyclicWord& w) { return to_string(w.as_word()); }

}  // namespace autsurf
