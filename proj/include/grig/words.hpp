#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace grig {

// Generating alphabet {a,b,c,d} with a^2=b^2=c^2=d^2=1 and {1,b,c,d} a
// Klein four-group: the product of two distinct letters of {b,c,d} is the
// third one.

inline bool is_generator(char c) { return c == 'a' || c == 'b' || c == 'c' || c == 'd'; }
inline bool is_klein(char c) { return c == 'b' || c == 'c' || c == 'd'; }

// x, y distinct letters of {b,c,d}; returns the third.
inline char klein_product(char x, char y) { return static_cast<char>('b' + 'c' + 'd' - x - y); }

/// A word over {a,b,c,d} kept in the unique normal form of the rewriting
/// system {aa -> e, xx -> e, xy -> z for {x,y,z} = {b,c,d}}. Reduced words
/// alternate between 'a' and letters of {b,c,d}.
class Word {
public:
  Word() = default;

  /// Reduces an arbitrary letter sequence. Total; throws only on characters
  /// outside {a,b,c,d}.
  static Word reduce(std::string_view raw);

  /// Wraps a string that is already known to be reduced (unchecked).
  static Word from_reduced(std::string s);

  const std::string& str() const { return s_; }
  std::size_t length() const { return s_.size(); }
  bool empty() const { return s_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
  std::string s_;
};

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

/// u^{-1} v^{-1} u v
Word commutator(const Word& u, const Word& v);

/// Parses the CLI text encoding: "e" for the empty word, otherwise letters.
Word parse_word(std::string_view text);

/// CLI text encoding: letters, or "e" when empty.
std::string show(const Word& w);

/// Length-then-lexicographic order.
bool shortlex_less(const Word& a, const Word& b);

/// All reduced words of length 1..maxLen in shortlex order (without the
/// empty word unless include_empty).
std::vector<Word> reduced_words_up_to(unsigned maxLen, bool include_empty = false);

}  // namespace grig
