#include "grig/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "grig/gomega.hpp"
#include "grig/universal.hpp"

namespace grig {

GroupContext GroupContext::single(OmegaSeq omega) {
  return GroupContext(Kind::Single, {std::move(omega)});
}

GroupContext GroupContext::universal() { return GroupContext(Kind::Universal, {}); }

GroupContext GroupContext::diagonal(std::vector<OmegaSeq> members) {
  if (members.empty()) throw std::invalid_argument("diagonal family must be nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return GroupContext(Kind::Diagonal, std::move(members));
}

GroupContext GroupContext::parse(std::string_view spec) {
  if (spec == "universal") return universal();
  if (spec.starts_with("omega:")) return single(OmegaSeq::parse(spec.substr(6)));
  if (spec.starts_with("diag:")) {
    std::vector<OmegaSeq> members;
    std::string rest(spec.substr(5));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) members.push_back(OmegaSeq::parse(item));
    return diagonal(std::move(members));
  }
  if (spec.starts_with("lambda:")) {
    std::vector<unsigned> r;
    std::string rest(spec.substr(7));
    if (!rest.empty()) {
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, ',')) r.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return diagonal(lambda_family(r).members);
  }
  throw std::invalid_argument("bad context spec: " + std::string(spec));
}

std::string GroupContext::encode() const {
  switch (kind_) {
    case Kind::Universal: return "universal";
    case Kind::Single: return "omega:" + members_[0].encode();
    case Kind::Diagonal: {
      std::string s = "diag:";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ',';
        s += members_[i].encode();
      }
      return s;
    }
  }
  return {};
}

bool trivial_in(const GroupContext& ctx, const Word& w) {
  switch (ctx.kind()) {
    case GroupContext::Kind::Universal: return is_trivial_u(w);
    case GroupContext::Kind::Single: return is_trivial_g(w, ctx.members()[0]);
    case GroupContext::Kind::Diagonal:
      for (const OmegaSeq& om : ctx.members())
        if (!is_trivial_g(w, om)) return false;
      return true;
  }
  return false;
}

bool equal_in(const GroupContext& ctx, const Word& u, const Word& v) {
  return trivial_in(ctx, concat(u, inverse(v)));
}

namespace {

// depth-h portrait of the binary-tree action, serialized; equal portraits
// <=> equal action up to depth h
void portrait_g(const Word& w, const OmegaSeq& omega, unsigned h, std::string& out) {
  if (h == 0) return;
  SectionDecomp2 d = decompose_g(w, omega);
  out += d.swaps ? '1' : '0';
  portrait_g(d.sec0, d.context, h - 1, out);
  portrait_g(d.sec1, d.context, h - 1, out);
}

void portrait_u(const Word& w, unsigned h, std::string& out) {
  if (h == 0) return;
  SectionDecomp6 d = decompose_u(w);
  for (int x = 0; x < 6; ++x) out += static_cast<char>('0' + d.perm[x]);
  for (int x = 0; x < 6; ++x) portrait_u(d.sections[x], h - 1, out);
}

std::string action_signature(const GroupContext& ctx, const Word& w, unsigned h) {
  std::string sig;
  switch (ctx.kind()) {
    case GroupContext::Kind::Universal:
      portrait_u(w, std::min(h, 3u), sig);
      break;
    case GroupContext::Kind::Single:
      portrait_g(w, ctx.members()[0], h, sig);
      break;
    case GroupContext::Kind::Diagonal:
      for (const OmegaSeq& om : ctx.members()) {
        portrait_g(w, om, h, sig);
        sig += '/';
      }
      break;
  }
  return sig;
}

}  // namespace

GrowthTable ball(const GroupContext& ctx, unsigned n, const BallOptions& opts) {
  GrowthTable table;
  std::unordered_map<std::string, std::vector<std::uint32_t>> registry;
  std::vector<Word> reps;

  auto lookup_or_insert = [&](const Word& w) -> bool {  // true if new
    std::string sig = action_signature(ctx, w, opts.hash_level);
    auto& bucket = registry[sig];
    for (std::uint32_t id : bucket)
      if (equal_in(ctx, w, reps[id])) return false;
    bucket.push_back(static_cast<std::uint32_t>(reps.size()));
    reps.push_back(w);
    return true;
  };

  lookup_or_insert(Word());
  table.gamma.push_back(1);

  std::vector<Word> frontier{Word()};
  for (unsigned len = 1; len <= n; ++len) {
    std::vector<Word> candidates;
    for (const Word& w : frontier)
      for (char g : {'a', 'b', 'c', 'd'}) {
        Word nw = concat(w, Word::reduce(std::string(1, g)));
        if (nw.length() == len) candidates.push_back(nw);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Word> fresh;
    for (const Word& w : candidates) {
      if (reps.size() >= opts.element_cap) {
        table.truncated = true;
        return table;
      }
      if (lookup_or_insert(w)) fresh.push_back(w);
    }
    table.gamma.push_back(reps.size());
    frontier = std::move(fresh);
  }
  return table;
}

std::string growth_csv(const GrowthTable& table) {
  std::string out = "n,gamma\n";
  for (std::size_t i = 0; i < table.gamma.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(table.gamma[i]) + "\n";
  if (table.truncated) out += "# truncated: element cap reached\n";
  return out;
}

GrowthLimitReport growth_limit_check(const std::vector<unsigned>& r, unsigned n,
                                     const std::vector<unsigned>& probes,
                                     const BallOptions& opts) {
  GrowthLimitReport report;
  std::uint64_t exponent = r.size() + std::accumulate(r.begin(), r.end(), std::uint64_t{0});
  // k + sum r_i >= log2(2n)  <=>  2^(k + sum r_i) >= 2n
  report.precondition_ok =
      exponent < 63 ? ((std::uint64_t{1} << exponent) >= 2 * std::uint64_t{n}) : true;
  if (!report.precondition_ok) return report;

  GrowthTable base = ball(GroupContext::diagonal(lambda_family(r).members), n, opts);
  for (unsigned x : probes) {
    std::vector<unsigned> ext = r;
    ext.push_back(x);
    GrowthTable extended = ball(GroupContext::diagonal(lambda_family(ext).members), n, opts);
    report.entries.push_back({x, base.gamma.at(n), extended.gamma.at(n),
                              base.gamma.at(n) == extended.gamma.at(n)});
  }
  return report;
}

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SchreierGraph schreier(const GroupContext& ctx, unsigned level) {
  if (ctx.kind() == GroupContext::Kind::Diagonal)
    throw std::invalid_argument("schreier: diagonal contexts have no tree action");
  bool universal = ctx.kind() == GroupContext::Kind::Universal;
  unsigned arity = universal ? 6 : 2;

  SchreierGraph g;
  g.level = level;
  std::vector<std::string> layer{""};
  for (unsigned d = 0; d < level; ++d) {
    std::vector<std::string> next;
    for (const std::string& v : layer)
      for (unsigned x = 0; x < arity; ++x) next.push_back(v + static_cast<char>('0' + x));
    layer = std::move(next);
  }
  g.vertices = layer;
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index[g.vertices[i]] = static_cast<std::uint32_t>(i);

  Dsu dsu(g.vertices.size());
  g.edges.resize(g.vertices.size());
  const char gens[] = {'a', 'b', 'c', 'd'};
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      Word w = Word::reduce(std::string(1, gens[k]));
      std::string image = universal ? act_u(w, g.vertices[i]) : act_g(w, ctx.members()[0], g.vertices[i]);
      std::uint32_t j = index.at(image);
      g.edges[i][k] = j;
      dsu.unite(static_cast<std::uint32_t>(i), j);
    }
  }
  unsigned comps = 0;
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i)
    if (dsu.find(i) == i) ++comps;
  g.components = comps;
  return g;
}

std::string schreier_dot(const SchreierGraph& g) {
  std::string out = "graph schreier {\n";
  const char gens[] = {'a', 'b', 'c', 'd'};
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      std::uint32_t j = g.edges[i][k];
      if (j < i) continue;  // each undirected edge once (generators are involutions)
      out += "  \"" + (g.vertices[i].empty() ? "root" : g.vertices[i]) + "\" -- \"" +
             (g.vertices[j].empty() ? "root" : g.vertices[j]) + "\" [label=\"" + gens[k] + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string schreier_json(const SchreierGraph& g) {
  std::string out = "{\"level\":" + std::to_string(g.level) +
                    ",\"components\":" + std::to_string(g.components) + ",\"adjacency\":{";
  const char gens[] = {'a', 'b', 'c', 'd'};
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (i) out += ',';
    out += "\"" + g.vertices[i] + "\":{";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::string("\"") + gens[k] + "\":\"" + g.vertices[g.edges[i][k]] + "\"";
    }
    out += '}';
  }
  out += "}}";
  return out;
}

namespace {

bool supported_below_g(const Word& w, const OmegaSeq& omega, std::string_view vertex) {
  if (vertex.empty()) return !is_trivial_g(w, omega);
  SectionDecomp2 d = decompose_g(w, omega);
  if (d.swaps) return false;
  const Word& inside = vertex[0] == '0' ? d.sec0 : d.sec1;
  const Word& outside = vertex[0] == '0' ? d.sec1 : d.sec0;
  if (!is_trivial_g(outside, d.context)) return false;
  return supported_below_g(inside, d.context, vertex.substr(1));
}

bool supported_below_u(const Word& w, std::string_view vertex) {
  if (vertex.empty()) return !is_trivial_u(w);
  SectionDecomp6 d = decompose_u(w);
  if (d.perm != std::array<std::uint8_t, 6>{0, 1, 2, 3, 4, 5}) return false;
  int v0 = vertex[0] - '0';
  for (int x = 0; x < 6; ++x)
    if (x != v0 && !is_trivial_u(d.sections[x])) return false;
  return supported_below_u(d.sections[v0], vertex.substr(1));
}

}  // namespace

std::optional<Word> rist_witness(const GroupContext& ctx, const std::string& vertex,
                                 unsigned maxLen) {
  if (ctx.kind() == GroupContext::Kind::Diagonal)
    throw std::invalid_argument("rist_witness: diagonal contexts have no tree action");
  bool universal = ctx.kind() == GroupContext::Kind::Universal;
  for (char c : vertex) {
    char hi = universal ? '5' : '1';
    if (c < '0' || c > hi) throw std::invalid_argument("rist_witness: bad vertex");
  }
  for (const Word& w : reduced_words_up_to(maxLen)) {
    bool ok = universal ? supported_below_u(w, vertex)
                        : supported_below_g(w, ctx.members()[0], vertex);
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace grig
