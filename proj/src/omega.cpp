#include "grig/omega.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace grig {

namespace detail {

namespace {
// smallest p dividing |s| such that s is p-periodic
std::string primitive_root(const std::string& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (s.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return s.substr(0, p);
  }
  return s;
}
}  // namespace

void canonize(std::string& prefix, std::string& period) {
  period = primitive_root(period);
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    period.insert(period.begin(), period.back());
    period.pop_back();
  }
}

}  // namespace detail

OmegaSeq::OmegaSeq(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("omega period must be nonempty");
  for (char c : prefix_ + period_)
    if (c != '0' && c != '1' && c != '2')
      throw std::invalid_argument(std::string("bad omega letter '") + c + "'");
  detail::canonize(prefix_, period_);
}

OmegaSeq OmegaSeq::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("omega spec needs 'prefix|period': " + std::string(text));
  return OmegaSeq(std::string(text.substr(0, bar)), std::string(text.substr(bar + 1)));
}

std::string OmegaSeq::encode() const { return prefix_ + "|" + period_; }

OmegaSeq OmegaSeq::shift() const {
  if (!prefix_.empty()) return OmegaSeq(prefix_.substr(1), period_);
  return OmegaSeq("", period_.substr(1) + period_[0]);
}

std::string OmegaSeq::letters() const {
  std::set<char> s(prefix_.begin(), prefix_.end());
  s.insert(period_.begin(), period_.end());
  return std::string(s.begin(), s.end());
}

OmegaClass classify(const OmegaSeq& omega, unsigned M) {
  OmegaClass c{};
  c.in_omega0 = omega.period().size() == 1;
  const std::string& per = omega.period();
  c.in_omega_inf = per.find('0') != std::string::npos && per.find('1') != std::string::npos &&
                   per.find('2') != std::string::npos;
  // window starts repeat with the period once past the prefix
  c.in_omega_m = true;
  std::size_t starts = omega.prefix().size() + omega.period().size();
  for (std::size_t s = 0; s < starts && c.in_omega_m; ++s) {
    std::array<bool, 3> seen{};
    for (std::size_t i = 0; i < M; ++i) seen[omega.at(s + i) - '0'] = true;
    c.in_omega_m = seen[0] && seen[1] && seen[2];
  }
  return c;
}

bool equivalent(const OmegaSeq& omega, const OmegaSeq& eta) {
  std::string digits = "012";
  std::sort(digits.begin(), digits.end());
  do {
    auto apply = [&](const std::string& s) {
      std::string t = s;
      for (char& c : t) c = digits[c - '0'];
      return t;
    };
    // a letterwise bijection preserves the canonical form
    if (OmegaSeq(apply(omega.prefix()), apply(omega.period())) == eta) return true;
  } while (std::next_permutation(digits.begin(), digits.end()));
  return false;
}

LambdaFamily lambda_family(const std::vector<unsigned>& r) {
  for (unsigned ri : r)
    if (ri < 1) throw std::invalid_argument("lambda family requires all r_i >= 1");
  LambdaFamily fam;
  fam.r_values = r;
  std::size_t k = r.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= 3;
  for (std::size_t code = 0; code < count; ++code) {
    std::string prefix;
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      for (unsigned j = 0; j < r[i]; ++j) prefix += "012";
      prefix += static_cast<char>('0' + c % 3);
      c /= 3;
    }
    fam.members.emplace_back(prefix, "012");
  }
  std::sort(fam.members.begin(), fam.members.end());
  fam.members.erase(std::unique(fam.members.begin(), fam.members.end()), fam.members.end());
  return fam;
}

}  // namespace grig
