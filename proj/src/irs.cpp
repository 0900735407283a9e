#include "grig/irs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "grig/parallel.hpp"

namespace grig {

Ray::Ray(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("ray period must be nonempty");
  for (char c : prefix_ + period_)
    if (c != '0' && c != '1') throw std::invalid_argument(std::string("bad ray bit '") + c + "'");
  detail::canonize(prefix_, period_);
}

Ray Ray::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("ray spec needs 'prefix|period': " + std::string(text));
  return Ray(std::string(text.substr(0, bar)), std::string(text.substr(bar + 1)));
}

std::string Ray::encode() const { return prefix_ + "|" + period_; }

Ray Ray::shift() const {
  if (!prefix_.empty()) return Ray(prefix_.substr(1), period_);
  return Ray("", period_.substr(1) + period_[0]);
}

StabResult stabilizes(const Word& w, const OmegaSeq& omega, const Ray& xi, unsigned depth_cap) {
  Word cur = w;
  OmegaSeq om = omega;
  Ray ray = xi;
  std::unordered_set<std::string> visited;
  for (unsigned step = 0;; ++step) {
    if (cur.empty()) return {Membership::In, step, false};
    SectionDecomp2 d = decompose_g(cur, om);
    if (d.swaps) return {Membership::Out, step + 1, false};
    std::string state = cur.str() + "#" + om.encode() + "#" + ray.encode();
    if (!visited.insert(std::move(state)).second) return {Membership::In, step, true};
    if (step >= depth_cap) return {Membership::Undecided, step, false};
    cur = ray.at(0) == '0' ? d.sec0 : d.sec1;
    om = d.context;
    ray = ray.shift();
  }
}

Fingerprint fingerprint(const OmegaSeq& omega, const Ray& xi, unsigned L, unsigned depth_cap) {
  Fingerprint fp;
  fp.L = L;
  fp.words = reduced_words_up_to(L);
  fp.bits.reserve(fp.words.size());
  fp.depths.reserve(fp.words.size());
  for (const Word& w : fp.words) {
    StabResult r = stabilizes(w, omega, xi, depth_cap);
    fp.bits += r.status == Membership::In ? '1' : r.status == Membership::Out ? '0' : '?';
    fp.depths.push_back(r.depth);
  }
  return fp;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double undecided_fraction_of(const std::vector<IrsSample>& samples) {
  std::size_t total = 0, undecided = 0;
  for (const auto& s : samples) {
    total += s.bits.size();
    undecided += static_cast<std::size_t>(std::count(s.bits.begin(), s.bits.end(), '?'));
  }
  return total ? static_cast<double>(undecided) / static_cast<double>(total) : 0.0;
}

}  // namespace

EmpiricalIRS sample_irs(const OmegaSeq& omega, std::size_t N, unsigned D, unsigned L,
                        unsigned depth_cap, std::uint64_t seed, unsigned threads) {
  if (N < 1) throw std::invalid_argument("sample_irs: N must be >= 1");
  EmpiricalIRS e{std::vector<IrsSample>(N), omega, L, D, depth_cap, seed, false, 0.0};
  parallel_for(N, threads, [&](std::size_t i) {
    std::mt19937_64 rng(splitmix64(seed + i));
    std::string prefix;
    prefix.reserve(D);
    for (unsigned k = 0; k < D; ++k) prefix += static_cast<char>('0' + (rng() & 1));
    Ray ray(prefix, "1");
    e.samples[i] = {ray, fingerprint(omega, ray, L, depth_cap).bits, 1.0 / static_cast<double>(N)};
  });
  e.undecided_fraction = undecided_fraction_of(e.samples);
  return e;
}

EmpiricalIRS exhaustive_irs(const OmegaSeq& omega, unsigned D, unsigned L, unsigned depth_cap,
                            unsigned threads) {
  if (D > 24) throw std::invalid_argument("exhaustive_irs: depth too large");
  std::size_t n = std::size_t{1} << D;
  EmpiricalIRS e{std::vector<IrsSample>(n), omega, L, D, depth_cap, 0, true, 0.0};
  parallel_for(n, threads, [&](std::size_t i) {
    std::string prefix;
    prefix.reserve(D);
    for (unsigned k = 0; k < D; ++k) prefix += static_cast<char>('0' + ((i >> k) & 1));
    Ray ray(prefix, "1");
    e.samples[i] = {ray, fingerprint(omega, ray, L, depth_cap).bits, 1.0 / static_cast<double>(n)};
  });
  e.undecided_fraction = undecided_fraction_of(e.samples);
  return e;
}

Ray push_ray(const Word& g, const OmegaSeq& omega, const Ray& xi) {
  Word cur = g;
  OmegaSeq om = omega;
  Ray ray = xi;
  std::string bits;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t step = 0;; ++step) {
    if (cur.empty()) {
      // identity from here on: image = emitted bits + remaining ray
      return Ray(bits + ray.prefix(), ray.period());
    }
    std::string state = cur.str() + "#" + om.encode() + "#" + ray.encode();
    auto [it, fresh] = seen.emplace(state, step);
    if (!fresh) {
      std::size_t start = it->second;
      return Ray(bits.substr(0, start), bits.substr(start));
    }
    SectionDecomp2 d = decompose_g(cur, om);
    char bit = ray.at(0);
    bits += d.swaps ? static_cast<char>('0' + ('1' - bit)) : bit;
    cur = bit == '0' ? d.sec0 : d.sec1;
    om = d.context;
    ray = ray.shift();
  }
}

ConjInvarianceResult conj_invariance(const EmpiricalIRS& e, const Word& g, unsigned threads) {
  std::vector<std::string> pushed(e.samples.size());
  parallel_for(e.samples.size(), threads, [&](std::size_t i) {
    Ray image = push_ray(g, e.omega, e.samples[i].ray);
    pushed[i] = fingerprint(e.omega, image, e.L, e.depth_cap).bits;
  });

  std::size_t width = e.samples.empty() ? 0 : e.samples[0].bits.size();
  std::vector<bool> decided(width, true);
  for (std::size_t i = 0; i < e.samples.size(); ++i)
    for (std::size_t k = 0; k < width; ++k)
      if (e.samples[i].bits[k] == '?' || pushed[i][k] == '?') decided[k] = false;

  auto project = [&](const std::string& bits) {
    std::string key;
    for (std::size_t k = 0; k < width; ++k)
      if (decided[k]) key += bits[k];
    return key;
  };

  std::map<std::string, double> porig, ppush;
  for (std::size_t i = 0; i < e.samples.size(); ++i) {
    porig[project(e.samples[i].bits)] += e.samples[i].weight;
    ppush[project(pushed[i])] += e.samples[i].weight;
  }
  double tv = 0.0;
  for (const auto& [k, p] : porig) {
    auto it = ppush.find(k);
    tv += std::abs(p - (it == ppush.end() ? 0.0 : it->second));
  }
  for (const auto& [k, p] : ppush)
    if (!porig.count(k)) tv += p;
  tv /= 2.0;

  ConjInvarianceResult r;
  r.tv = tv;
  std::size_t und = 0, tot = 0;
  for (const auto& bits : pushed) {
    tot += bits.size();
    und += static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '?'));
  }
  r.undecided_fraction_pushed = tot ? static_cast<double>(und) / static_cast<double>(tot) : 0.0;
  r.decided_coordinates = static_cast<std::size_t>(std::count(decided.begin(), decided.end(), true));
  return r;
}

std::optional<Word> separate_stabilizers(const OmegaSeq& omega, const Ray& xi, const Ray& rho,
                                         unsigned maxLen, unsigned depth_cap) {
  if (xi == rho) throw std::invalid_argument("separate_stabilizers: rays must be distinct");
  for (const Word& w : reduced_words_up_to(maxLen)) {
    StabResult a = stabilizes(w, omega, xi, depth_cap);
    StabResult b = stabilizes(w, omega, rho, depth_cap);
    if (a.status != Membership::Undecided && b.status != Membership::Undecided &&
        a.status != b.status)
      return w;
  }
  return std::nullopt;
}

std::optional<Word> lifted_separation(const OmegaSeq& omega, const OmegaSeq& eta, const Ray& xi,
                                      const Ray& rho, unsigned maxLen, unsigned depth_cap) {
  if (equivalent(omega, eta))
    throw std::invalid_argument("lifted_separation: sequences must be non-equivalent");
  for (const Word& w : reduced_words_up_to(maxLen)) {
    StabResult a = stabilizes(w, omega, xi, depth_cap);
    StabResult b = stabilizes(w, eta, rho, depth_cap);
    if (a.status != Membership::Undecided && b.status != Membership::Undecided &&
        a.status != b.status)
      return w;
  }
  return std::nullopt;
}

std::string irs_jsonl(const EmpiricalIRS& e) {
  std::string out;
  for (const auto& s : e.samples) {
    out += "{\"ray\":\"" + s.ray.encode() + "\",\"fingerprint\":\"" + s.bits +
           "\",\"weight\":" + std::to_string(s.weight) + "}\n";
  }
  out += "{\"summary\":{\"omega\":\"" + e.omega.encode() + "\",\"L\":" + std::to_string(e.L) +
         ",\"D\":" + std::to_string(e.D) + ",\"depth_cap\":" + std::to_string(e.depth_cap) +
         ",\"seed\":" + std::to_string(e.seed) +
         ",\"exhaustive\":" + (e.exhaustive ? "true" : "false") +
         ",\"samples\":" + std::to_string(e.samples.size()) +
         ",\"undecided_fraction\":" + std::to_string(e.undecided_fraction) + "}}\n";
  return out;
}

}  // namespace grig
