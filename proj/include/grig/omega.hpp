#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace grig {

namespace detail {
/// Canonicalizes an eventually periodic sequence prefix + period^inf:
/// the period is replaced by its primitive root and the prefix is rolled
/// into the period while its last letter matches the period's last letter.
/// The result is the unique (minimal preperiod, primitive period)
/// representation, so two values denote the same infinite sequence iff the
/// canonical strings are equal.
void canonize(std::string& prefix, std::string& period);
}  // namespace detail

/// Eventually periodic sequence over {0,1,2}, stored canonically.
class OmegaSeq {
public:
  OmegaSeq(std::string prefix, std::string period);

  /// Parses the text encoding "prefix|period", e.g. "0|12" for 0121212...
  static OmegaSeq parse(std::string_view text);
  std::string encode() const;

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  char at(std::size_t i) const {
    return i < prefix_.size() ? prefix_[i] : period_[(i - prefix_.size()) % period_.size()];
  }

  /// Drops the first letter (the shift transformation).
  OmegaSeq shift() const;

  /// Distinct letters occurring anywhere in the sequence, sorted.
  std::string letters() const;

  friend bool operator==(const OmegaSeq&, const OmegaSeq&) = default;
  friend std::strong_ordering operator<=>(const OmegaSeq&, const OmegaSeq&) = default;

private:
  std::string prefix_;
  std::string period_;
};

struct OmegaClass {
  bool in_omega0;     // eventually constant
  bool in_omega_inf;  // all three letters occur infinitely often
  bool in_omega_m;    // every length-M subword contains all three letters
};

OmegaClass classify(const OmegaSeq& omega, unsigned M);

/// True iff some permutation of {0,1,2} maps omega to eta letterwise.
bool equivalent(const OmegaSeq& omega, const OmegaSeq& eta);

/// The family {(012)^{r_1} eta_1 ... (012)^{r_k} eta_k (012)^inf}.
struct LambdaFamily {
  std::vector<unsigned> r_values;
  std::vector<OmegaSeq> members;  // canonical order, deduplicated
};

LambdaFamily lambda_family(const std::vector<unsigned>& r);

}  // namespace grig
