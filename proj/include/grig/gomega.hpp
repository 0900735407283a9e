#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "grig/omega.hpp"
#include "grig/words.hpp"

namespace grig {

/// Vertex of the binary rooted tree, as a string over {'0','1'}.
using BinVertex = std::string;

/// Wreath-recursion image of a word in G_omega: root transposition flag and
/// the two first-level sections, which live in the shifted context.
struct SectionDecomp2 {
  bool swaps = false;
  Word sec0;
  Word sec1;
  OmegaSeq context;
};

/// The beta/zeta/delta selector: first-level 0-side section of b, c, d.
/// letter in {b,c,d}, symbol in {'0','1','2'}; returns "a" or the empty word.
Word selector_table(char letter, char symbol);

SectionDecomp2 decompose_g(const Word& w, const OmegaSeq& omega);

BinVertex act_g(const Word& w, const OmegaSeq& omega, std::string_view vertex);

/// Exact word problem for G_omega (decidable because omega is eventually
/// periodic: the shift orbit is finite and sections of reduced words of
/// length >= 2 are strictly shorter).
bool is_trivial_g(const Word& w, const OmegaSeq& omega);

bool equal_g(const Word& u, const Word& v, const OmegaSeq& omega);

/// Smallest n <= cap with w^n = 1, probed over a divisor-closed candidate
/// set (an initial segment plus powers of two); nullopt means no candidate
/// power was trivial, not a claim of infinite order.
std::optional<std::uint64_t> order_g(const Word& w, const OmegaSeq& omega, std::uint64_t cap);

}  // namespace grig
