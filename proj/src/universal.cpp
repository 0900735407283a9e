#include "grig/universal.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace grig {

namespace {

constexpr std::array<std::uint8_t, 6> kIdPerm{0, 1, 2, 3, 4, 5};
// the root permutation of a: (bit,trit) -> (1-bit,trit)
constexpr std::array<std::uint8_t, 6> kFlipPerm{3, 4, 5, 0, 1, 2};

// section letters of the generators; 'e' = empty word
constexpr char kSections[4][6] = {
    {'e', 'e', 'e', 'e', 'e', 'e'},  // a
    {'a', 'a', 'e', 'b', 'b', 'b'},  // b
    {'a', 'e', 'a', 'c', 'c', 'c'},  // c
    {'e', 'a', 'a', 'd', 'd', 'd'},  // d
};

}  // namespace

SectionDecomp6 decompose_u(const Word& w) {
  std::array<std::uint8_t, 6> perm = kIdPerm;
  std::array<std::string, 6> sec;
  for (char l : w.str()) {
    const auto& lperm = l == 'a' ? kFlipPerm : kIdPerm;
    const char* lsec = kSections[l - 'a'];
    // (gh)_x = g_{h(x)} h_x
    std::array<std::string, 6> nsec;
    std::array<std::uint8_t, 6> nperm;
    for (int x = 0; x < 6; ++x) {
      int hx = lperm[x];
      nperm[x] = perm[hx];
      nsec[x] = sec[hx];
      if (lsec[x] != 'e') nsec[x] += lsec[x];
    }
    perm = nperm;
    sec = std::move(nsec);
  }
  SectionDecomp6 d;
  d.perm = perm;
  for (int x = 0; x < 6; ++x) d.sections[x] = Word::reduce(sec[x]);
  return d;
}

HexVertex act_u(const Word& w, const HexVertex& v) {
  HexVertex out;
  out.reserve(v.size());
  Word cur = w;
  for (char letter : v) {
    if (letter < '0' || letter > '5') throw std::invalid_argument("act_u: bad vertex letter");
    SectionDecomp6 d = decompose_u(cur);
    int x = letter - '0';
    out += static_cast<char>('0' + d.perm[x]);
    cur = d.sections[x];
  }
  return out;
}

namespace {

std::unordered_map<std::string, bool>& memo_u() {
  static std::unordered_map<std::string, bool> m;
  return m;
}
std::mutex& memo_u_mutex() {
  static std::mutex m;
  return m;
}

constexpr std::size_t kMemoMaxWordLen = 96;

}  // namespace

bool is_trivial_u(const Word& w) {
  if (w.empty()) return true;
  if (w.length() == 1) return false;
  if (w.length() <= kMemoMaxWordLen) {
    std::lock_guard lock(memo_u_mutex());
    auto it = memo_u().find(w.str());
    if (it != memo_u().end()) return it->second;
  }
  SectionDecomp6 d = decompose_u(w);
  bool result = d.perm == std::array<std::uint8_t, 6>{0, 1, 2, 3, 4, 5};
  for (int x = 0; x < 6 && result; ++x) result = is_trivial_u(d.sections[x]);
  if (w.length() <= kMemoMaxWordLen) {
    std::lock_guard lock(memo_u_mutex());
    memo_u().emplace(w.str(), result);
  }
  return result;
}

bool equal_u(const Word& u, const Word& v) { return is_trivial_u(concat(u, inverse(v))); }

BinVertex act_restricted(const Word& w, const OmegaSeq& omega, const BinVertex& v) {
  HexVertex hv;
  hv.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != '0' && v[k] != '1') throw std::invalid_argument("act_restricted: bad vertex bit");
    hv += static_cast<char>('0' + hex_index(v[k] - '0', omega.at(k) - '0'));
  }
  HexVertex image = act_u(w, hv);
  BinVertex out;
  out.reserve(v.size());
  for (char c : image) out += static_cast<char>('0' + hex_bit(c - '0'));
  return out;
}

bool psi_agrees(char generator, const OmegaSeq& omega, unsigned depth) {
  Word g = Word::reduce(std::string(1, generator));
  std::vector<BinVertex> layer{""};
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<BinVertex> next;
    for (const BinVertex& v : layer)
      for (char bit : {'0', '1'}) next.push_back(v + bit);
    for (const BinVertex& v : next)
      if (act_restricted(g, omega, v) != act_g(g, omega, v)) return false;
    layer = std::move(next);
  }
  return true;
}

namespace {

struct Pattern {
  const char* name;
  Word element;
  // claimed sections: 't','v','w' refer to the level-3 commutators,
  // 'e' = trivial, '*' = unspecified (not checked)
  char claim[6];
};

Word sq(const Word& w) { return concat(w, w); }

}  // namespace

std::vector<BranchIdentityCheck> verify_branch_identities() {
  const Word a = Word::reduce("a"), b = Word::reduce("b"), c = Word::reduce("c"),
             d = Word::reduce("d");
  const Word ab = sq(concat(a, b)), ac = sq(concat(a, c)), ad = sq(concat(a, d));
  const Word ba = sq(concat(b, a)), ca = sq(concat(c, a)), da = sq(concat(d, a));
  const Word t = commutator(ab, ac);
  const Word v = commutator(ab, ad);
  const Word w = commutator(ac, ad);

  const Pattern patterns[] = {
      {"h1", commutator(commutator(ab, b), commutator(b, ca)), {'t', '*', 'e', 'e', 'e', 'e'}},
      {"h2", commutator(commutator(ab, b), commutator(c, da)), {'v', 'e', 'e', 'e', '*', 'e'}},
      {"h3", commutator(commutator(c, ca), commutator(b, da)), {'w', 'e', 'e', 'e', 'e', '*'}},
      {"h4", commutator(commutator(b, ba), commutator(d, ca)), {'e', 't', 'e', '*', 'e', 'e'}},
      // h5 as usually printed, [[d,(ad)2],[b,(ba)2]], does not have section v at
      // coordinate 1; the bracket order below does (the printed form is its inverse
      // up to the (ad)/(da) slip, giving v^-1 there).
      {"h5", commutator(commutator(b, ba), commutator(d, da)), {'e', 'v', 'e', 'e', '*', 'e'}},
      {"h6", commutator(commutator(d, ca), commutator(b, da)), {'e', 'w', 'e', 'e', 'e', '*'}},
      {"h7", commutator(commutator(c, ba), commutator(d, ca)), {'e', 'e', 't', '*', 'e', 'e'}},
      {"h8", commutator(commutator(d, ba), commutator(c, da)), {'e', 'e', 'v', 'e', '*', 'e'}},
      {"h9", commutator(commutator(c, ca), commutator(d, da)), {'e', 'e', 'w', 'e', 'e', '*'}},
  };

  std::vector<BranchIdentityCheck> report;
  for (const Pattern& p : patterns) {
    BranchIdentityCheck chk{p.name, true, ""};
    SectionDecomp6 dec = decompose_u(p.element);
    if (dec.perm != std::array<std::uint8_t, 6>{0, 1, 2, 3, 4, 5}) {
      chk.pass = false;
      chk.detail = "root permutation not trivial";
    }
    for (int x = 0; x < 6 && chk.pass; ++x) {
      const Word* want = nullptr;
      switch (p.claim[x]) {
        case 't': want = &t; break;
        case 'v': want = &v; break;
        case 'w': want = &w; break;
        case 'e': want = nullptr; break;
        case '*': continue;
      }
      bool ok = want ? equal_u(dec.sections[x], *want) : is_trivial_u(dec.sections[x]);
      if (!ok) {
        chk.pass = false;
        chk.detail = "section " + std::to_string(x) + " does not match";
      }
    }
    report.push_back(std::move(chk));
  }
  return report;
}

std::optional<Word> self_replicating_witness(const Word& target, int index, unsigned maxLen) {
  if (index < 0 || index > 5) throw std::invalid_argument("section index must be 0..5");
  for (const Word& h : reduced_words_up_to(maxLen, /*include_empty=*/true)) {
    SectionDecomp6 d = decompose_u(h);
    if (d.perm != std::array<std::uint8_t, 6>{0, 1, 2, 3, 4, 5}) continue;
    if (equal_u(d.sections[index], target)) return h;
  }
  return std::nullopt;
}

}  // namespace grig
