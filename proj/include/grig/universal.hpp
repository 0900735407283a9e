#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grig/gomega.hpp"
#include "grig/omega.hpp"
#include "grig/words.hpp"

namespace grig {

// The universal group U realized as an automaton group on the 6-ary tree
// over the alphabet {0,1} x {0,1,2}, letters enumerated 0..5 as
// (0,0),(0,1),(0,2),(1,0),(1,1),(1,2), i.e. index = 3*bit + trit.

/// Vertex of the 6-ary tree, as a string over {'0'..'5'}.
using HexVertex = std::string;

inline int hex_index(int bit, int trit) { return 3 * bit + trit; }
inline int hex_bit(int index) { return index / 3; }
inline int hex_trit(int index) { return index % 3; }

struct SectionDecomp6 {
  std::array<std::uint8_t, 6> perm;  // root permutation, image of each letter
  std::array<Word, 6> sections;
};

SectionDecomp6 decompose_u(const Word& w);

HexVertex act_u(const Word& w, const HexVertex& v);

/// Exact word problem for U.
bool is_trivial_u(const Word& w);

bool equal_u(const Word& u, const Word& v);

/// Evaluates w on the subtree T_omega of the 6-ary tree (k-th letter
/// (v_k, omega_k)) and projects first components: the epimorphism onto
/// G_omega realized as a binary-tree automorphism.
BinVertex act_restricted(const Word& w, const OmegaSeq& omega, const BinVertex& v);

/// Checks that the restricted action of a generator agrees with its
/// G_omega counterpart on every binary vertex up to the given depth.
bool psi_agrees(char generator, const OmegaSeq& omega, unsigned depth);

/// One checked identity h_i together with its claimed section pattern.
struct BranchIdentityCheck {
  std::string name;
  bool pass;
  std::string detail;  // offending coordinate on failure
};

/// Verifies the nine section identities certifying that U is regular
/// branching over its third commutator subgroup. Coordinates left
/// unspecified by the pattern are not checked.
std::vector<BranchIdentityCheck> verify_branch_identities();

/// Searches (breadth-first, shortlex) for a first-level stabilizer h with
/// section h_index equal to target in U. nullopt = budget exhausted.
std::optional<Word> self_replicating_witness(const Word& target, int index, unsigned maxLen);

}  // namespace grig
