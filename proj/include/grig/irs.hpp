#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grig/gomega.hpp"
#include "grig/omega.hpp"
#include "grig/words.hpp"

namespace grig {

/// Eventually periodic boundary ray of the binary tree, stored canonically
/// (same normal form as OmegaSeq, alphabet {0,1}).
class Ray {
public:
  Ray(std::string prefix, std::string period);
  static Ray parse(std::string_view text);  // "prefix|period"
  std::string encode() const;

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  char at(std::size_t i) const {
    return i < prefix_.size() ? prefix_[i] : period_[(i - prefix_.size()) % period_.size()];
  }
  Ray shift() const;

  friend bool operator==(const Ray&, const Ray&) = default;
  friend std::strong_ordering operator<=>(const Ray&, const Ray&) = default;

private:
  std::string prefix_;
  std::string period_;
};

enum class Membership : std::uint8_t { In, Out, Undecided };

struct StabResult {
  Membership status = Membership::Undecided;
  unsigned depth = 0;    // walk depth at which the decision was reached
  bool via_cycle = false;  // In concluded by revisiting a walk state
};

/// Decides whether w stabilizes the ray in G_omega by walking down the ray.
/// Out as soon as the current section's root permutation moves the next ray
/// letter; In when the section word becomes empty or a walk state repeats
/// (the state space is finite for eventually periodic omega and ray).
StabResult stabilizes(const Word& w, const OmegaSeq& omega, const Ray& xi, unsigned depth_cap);

/// Membership status of every reduced nontrivial word of length <= L, in
/// shortlex order; bits[i] is '1' (In), '0' (Out) or '?' (Undecided).
struct Fingerprint {
  std::vector<Word> words;
  std::string bits;
  std::vector<unsigned> depths;
  unsigned L = 0;
};

Fingerprint fingerprint(const OmegaSeq& omega, const Ray& xi, unsigned L, unsigned depth_cap);

struct IrsSample {
  Ray ray{"", "1"};
  std::string bits;
  double weight = 0.0;
};

struct EmpiricalIRS {
  std::vector<IrsSample> samples;
  OmegaSeq omega;
  unsigned L = 0;
  unsigned D = 0;  // prefix depth
  unsigned depth_cap = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  double undecided_fraction = 0.0;
};

/// N rays drawn as a uniform random depth-D prefix followed by the tail
/// 111...; per-ray RNG substreams are derived from the seed by index, so the
/// result is byte-identical for any thread count.
EmpiricalIRS sample_irs(const OmegaSeq& omega, std::size_t N, unsigned D, unsigned L,
                        unsigned depth_cap, std::uint64_t seed, unsigned threads = 1);

/// All 2^D depth-D cylinders with tail 111..., uniformly weighted.
EmpiricalIRS exhaustive_irs(const OmegaSeq& omega, unsigned D, unsigned L, unsigned depth_cap,
                            unsigned threads = 1);

/// Image of the ray under the boundary action of g.
Ray push_ray(const Word& g, const OmegaSeq& omega, const Ray& xi);

/// Total-variation distance between the original fingerprint distribution
/// and the one obtained after pushing every sampled ray through g, computed
/// on the jointly decided coordinates only.
struct ConjInvarianceResult {
  double tv = 0.0;
  double undecided_fraction_pushed = 0.0;
  std::size_t decided_coordinates = 0;
};

ConjInvarianceResult conj_invariance(const EmpiricalIRS& e, const Word& g, unsigned threads = 1);

/// Shortlex search for a word whose (decided) stabilizer membership differs
/// between the two rays. Throws if xi == rho.
std::optional<Word> separate_stabilizers(const OmegaSeq& omega, const Ray& xi, const Ray& rho,
                                         unsigned maxLen, unsigned depth_cap);

/// Shortlex search for a word whose membership in the lifted stabilizer
/// L_{omega,xi} differs from membership in L_{eta,rho} (both decided).
/// Throws if omega and eta are letterwise-permutation equivalent.
std::optional<Word> lifted_separation(const OmegaSeq& omega, const OmegaSeq& eta, const Ray& xi,
                                      const Ray& rho, unsigned maxLen, unsigned depth_cap);

/// JSON-lines serialization: one record per sample plus a summary record.
std::string irs_jsonl(const EmpiricalIRS& e);

}  // namespace grig
