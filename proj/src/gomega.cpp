#include "grig/gomega.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace grig {

Word selector_table(char letter, char symbol) {
  static const char table[3][3] = {
      // symbol:  0    1    2
      {'a', 'a', 'e'},  // beta  (b)
      {'a', 'e', 'a'},  // zeta  (c)
      {'e', 'a', 'a'},  // delta (d)
  };
  if (!is_klein(letter)) throw std::invalid_argument("selector_table: letter must be b, c or d");
  if (symbol < '0' || symbol > '2') throw std::invalid_argument("selector_table: bad symbol");
  char v = table[letter - 'b'][symbol - '0'];
  return v == 'e' ? Word() : Word::reduce("a");
}

SectionDecomp2 decompose_g(const Word& w, const OmegaSeq& omega) {
  // fold with (gh)_x = g_{h(x)} h_x over the letters of w
  bool swaps = false;
  std::string sec[2];
  char sel = omega.at(0);
  for (char l : w.str()) {
    if (l == 'a') {
      std::swap(sec[0], sec[1]);
      swaps = !swaps;
    } else {
      Word s0 = selector_table(l, sel);
      sec[0] += s0.str();
      sec[1] += l;
    }
  }
  SectionDecomp2 d{swaps, Word::reduce(sec[0]), Word::reduce(sec[1]), omega.shift()};
  return d;
}

BinVertex act_g(const Word& w, const OmegaSeq& omega, std::string_view vertex) {
  BinVertex out;
  out.reserve(vertex.size());
  Word cur = w;
  OmegaSeq ctx = omega;
  for (char bit : vertex) {
    if (bit != '0' && bit != '1') throw std::invalid_argument("act_g: bad vertex bit");
    SectionDecomp2 d = decompose_g(cur, ctx);
    out += d.swaps ? static_cast<char>('0' + ('1' - bit)) : bit;
    cur = bit == '0' ? d.sec0 : d.sec1;
    ctx = d.context;
  }
  return out;
}

namespace {

// generator x in {b,c,d} is trivial in G_omega iff its selector is trivial
// at every letter occurring in omega
bool generator_trivial(char x, const OmegaSeq& omega) {
  for (char s : omega.letters())
    if (!selector_table(x, s).empty()) return false;
  return true;
}

std::unordered_map<std::string, bool>& memo() {
  static std::unordered_map<std::string, bool> m;
  return m;
}
std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

constexpr std::size_t kMemoMaxWordLen = 64;

}  // namespace

bool is_trivial_g(const Word& w, const OmegaSeq& omega) {
  if (w.empty()) return true;
  if (w.length() == 1) {
    char l = w.str()[0];
    return l == 'a' ? false : generator_trivial(l, omega);
  }
  std::string key;
  if (w.length() <= kMemoMaxWordLen) {
    key = w.str() + "#" + omega.encode();
    std::lock_guard lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  SectionDecomp2 d = decompose_g(w, omega);
  // sections of a reduced word of length n >= 2 have length <= ceil(n/2) < n
  bool result = !d.swaps && is_trivial_g(d.sec0, d.context) && is_trivial_g(d.sec1, d.context);
  if (!key.empty()) {
    std::lock_guard lock(memo_mutex());
    memo().emplace(std::move(key), result);
  }
  return result;
}

bool equal_g(const Word& u, const Word& v, const OmegaSeq& omega) {
  return is_trivial_g(concat(u, inverse(v)), omega);
}

std::optional<std::uint64_t> order_g(const Word& w, const OmegaSeq& omega, std::uint64_t cap) {
  constexpr std::uint64_t kScanBound = 64;
  // exact scan of an initial segment
  Word p;
  for (std::uint64_t n = 1; n <= cap && n <= kScanBound; ++n) {
    p = concat(p, w);
    if (is_trivial_g(p, omega)) return n;
  }
  if (cap <= kScanBound) return std::nullopt;
  // powers of two by repeated squaring; if w^(2^k) = 1 the order divides
  // 2^k, hence is itself a power of two, and all smaller powers of two were
  // already rejected above or are rejected on the way up
  Word sq = w;
  std::uint64_t n = 1;
  while (n * 2 <= cap) {
    sq = concat(sq, sq);
    n *= 2;
    if (n > kScanBound && is_trivial_g(sq, omega)) return n;
  }
  return std::nullopt;
}

}  // namespace grig
