#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grig/omega.hpp"
#include "grig/words.hpp"

namespace grig {

/// A group in which words are compared: a single G_omega, the universal
/// group U, or the diagonal group of a finite omega-family (equality =
/// equality in every member).
class GroupContext {
public:
  enum class Kind { Single, Universal, Diagonal };

  static GroupContext single(OmegaSeq omega);
  static GroupContext universal();
  static GroupContext diagonal(std::vector<OmegaSeq> members);

  /// Parses "omega:<prefix>|<period>", "universal",
  /// "diag:<spec>,<spec>,...", or "lambda:r1,r2,...".
  static GroupContext parse(std::string_view spec);
  std::string encode() const;

  Kind kind() const { return kind_; }
  const std::vector<OmegaSeq>& members() const { return members_; }

private:
  GroupContext(Kind k, std::vector<OmegaSeq> m) : kind_(k), members_(std::move(m)) {}
  Kind kind_;
  std::vector<OmegaSeq> members_;  // canonical order; empty for Universal
};

bool equal_in(const GroupContext& ctx, const Word& u, const Word& v);
bool trivial_in(const GroupContext& ctx, const Word& w);

/// gamma(0..n), exact integers.
struct GrowthTable {
  std::vector<std::uint64_t> gamma;
  bool truncated = false;  // element cap hit; gamma holds the complete layers
};

struct BallOptions {
  unsigned hash_level = 8;           // depth of the action fingerprint used as hash key
  std::size_t element_cap = 5'000'000;
};

/// Exact ball sizes by breadth-first closure over reduced words; hash
/// collisions at the fingerprint level are resolved by exact equality, so
/// the result does not depend on hash_level.
GrowthTable ball(const GroupContext& ctx, unsigned n, const BallOptions& opts = {});

/// CSV with columns "n,gamma".
std::string growth_csv(const GrowthTable& table);

struct GrowthLimitReport {
  bool precondition_ok = false;  // k + sum(r_i) >= log2(2n)
  struct Entry {
    unsigned probe;
    std::uint64_t gamma_base;
    std::uint64_t gamma_extended;
    bool equal;
  };
  std::vector<Entry> entries;
  bool all_equal() const {
    for (const auto& e : entries)
      if (!e.equal) return false;
    return !entries.empty();
  }
};

/// Checks gamma_{Lambda_r}(n) = gamma_{Lambda_{r,x}}(n) for each probe
/// extension x; meaningful only when the threshold precondition holds.
GrowthLimitReport growth_limit_check(const std::vector<unsigned>& r, unsigned n,
                                     const std::vector<unsigned>& probes,
                                     const BallOptions& opts = {});

struct SchreierGraph {
  unsigned level = 0;
  std::vector<std::string> vertices;                 // all tree vertices at the level
  std::vector<std::array<std::uint32_t, 4>> edges;   // per vertex: image under a,b,c,d
  unsigned components = 0;
};

/// Level-n Schreier graph of the generator action (Single acts on the
/// binary tree, Universal on the 6-ary tree; Diagonal has no tree action).
SchreierGraph schreier(const GroupContext& ctx, unsigned level);

std::string schreier_dot(const SchreierGraph& g);
std::string schreier_json(const SchreierGraph& g);

/// Shortlex search for a word supported entirely inside the subtree below
/// vertex (trivial outside, nontrivial inside); support is checked with the
/// exact word-problem deciders. nullopt = budget exhausted.
std::optional<Word> rist_witness(const GroupContext& ctx, const std::string& vertex,
                                 unsigned maxLen);

}  // namespace grig
