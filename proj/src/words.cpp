#include "grig/words.hpp"

#include <stdexcept>

namespace grig {

Word Word::reduce(std::string_view raw) {
  std::string st;
  for (char c : raw) {
    if (!is_generator(c)) throw std::invalid_argument(std::string("bad letter '") + c + "'");
    char cur = c;
    bool cancelled = false;
    while (!st.empty()) {
      char top = st.back();
      if (top == cur) {  // involution
        st.pop_back();
        cancelled = true;
        break;
      }
      if (is_klein(top) && is_klein(cur)) {  // merge to the third letter
        cur = klein_product(top, cur);
        st.pop_back();
        continue;
      }
      break;
    }
    if (!cancelled) st.push_back(cur);
  }
  Word w;
  w.s_ = std::move(st);
  return w;
}

Word Word::from_reduced(std::string s) {
  Word w;
  w.s_ = std::move(s);
  return w;
}

Word inverse(const Word& w) {
  // all generators are involutions, so the inverse is the reversal
  std::string r(w.str().rbegin(), w.str().rend());
  return Word::from_reduced(std::move(r));
}

Word concat(const Word& u, const Word& v) {
  std::string s = u.str();
  s += v.str();
  return Word::reduce(s);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(inverse(u), inverse(v)), concat(u, v));
}

Word parse_word(std::string_view text) {
  if (text == "e") return Word();
  return Word::reduce(text);
}

std::string show(const Word& w) { return w.empty() ? "e" : w.str(); }

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.str() < b.str();
}

std::vector<Word> reduced_words_up_to(unsigned maxLen, bool include_empty) {
  std::vector<Word> out;
  if (include_empty) out.push_back(Word());
  std::vector<Word> layer{Word()};
  for (unsigned len = 1; len <= maxLen; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (char g : {'a', 'b', 'c', 'd'}) {
        Word nw = concat(w, Word::reduce(std::string(1, g)));
        if (nw.length() == len) next.push_back(nw);
      }
    }
    // extension of distinct reduced words can collide ("b"+c == "c"+b == "d")
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace grig
