#include <map>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "grig/enumerate.hpp"
#include "grig/gomega.hpp"
#include "grig/universal.hpp"
#include "oracles.hpp"

using namespace grig;

namespace {

const char* kSpec012 = "omega:|012";

// Brute-force ball sizes: distinct level-12 action signatures of all reduced
// words of length <= n (exact at these scales; cross-checked below against
// the exact decider on collisions).
std::vector<std::uint64_t> oracle_gamma_single(const OmegaSeq& om, unsigned n, unsigned level) {
  auto verts = oracle::level_vertices(level, 2);
  std::set<std::string> seen;
  std::vector<std::uint64_t> gamma;
  for (unsigned len = 0; len <= n; ++len) {
    for (const Word& w : reduced_words_up_to(len, true)) {
      if (w.length() != len) continue;
      std::string sig;
      for (const auto& v : verts) sig += oracle::act_g(w, om, v);
      seen.insert(sig);
    }
    gamma.push_back(seen.size());
  }
  return gamma;
}

}  // namespace

TEST_CASE("GroupContext parse and encode") {
  CHECK(GroupContext::parse("universal").kind() == GroupContext::Kind::Universal);
  auto s = GroupContext::parse(kSpec012);
  CHECK(s.kind() == GroupContext::Kind::Single);
  CHECK(s.members().size() == 1);
  auto d = GroupContext::parse("diag:|012,0|12,|012");
  CHECK(d.kind() == GroupContext::Kind::Diagonal);
  CHECK(d.members().size() == 2);  // duplicate removed
  auto l = GroupContext::parse("lambda:1");
  CHECK(l.kind() == GroupContext::Kind::Diagonal);
  CHECK(l.members().size() == 3);
  CHECK_THROWS_AS(GroupContext::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(GroupContext::parse("diag:"), std::invalid_argument);
}

TEST_CASE("equal_in") {
  auto diag = GroupContext::parse("diag:|012,|0");
  CHECK(equal_in(diag, Word::reduce("bc"), Word::reduce("d")));
  CHECK(equal_in(GroupContext::parse("omega:|0"), Word::reduce("d"), Word()));
  CHECK(!equal_in(GroupContext::universal(), Word::reduce("d"), Word()));
  CHECK(!equal_in(diag, Word::reduce("d"), Word()));  // d nontrivial in G_{(012)^inf}
  CHECK(trivial_in(GroupContext::universal(), Word::reduce("bcd")));
}

TEST_CASE("ball growth values against the brute-force oracle") {
  for (const char* spec : {"omega:|012", "omega:|0", "omega:0|12"}) {
    auto ctx = GroupContext::parse(spec);
    GrowthTable t = ball(ctx, 4);
    CHECK(!t.truncated);
    auto expect = oracle_gamma_single(ctx.members()[0], 4, 12);
    REQUIRE(t.gamma.size() == 5);
    for (unsigned i = 0; i <= 4; ++i) CHECK(t.gamma[i] == expect[i]);
  }
  CHECK(ball(GroupContext::parse(kSpec012), 0).gamma == std::vector<std::uint64_t>{1});
  CHECK(ball(GroupContext::parse(kSpec012), 1).gamma[1] == 5);
}

TEST_CASE("growth invariants") {
  for (const char* spec : {"omega:|012", "universal", "lambda:1"}) {
    GrowthTable t = ball(GroupContext::parse(spec), 5);
    REQUIRE(t.gamma.size() == 6);
    CHECK(t.gamma[0] == 1);
    for (unsigned i = 1; i < t.gamma.size(); ++i) CHECK(t.gamma[i] >= t.gamma[i - 1]);
    for (unsigned m = 0; m < t.gamma.size(); ++m)
      for (unsigned n = 0; m + n < t.gamma.size(); ++n)
        CHECK(t.gamma[m + n] <= t.gamma[m] * t.gamma[n]);
  }
}

TEST_CASE("ball is hash-level independent") {
  for (unsigned h : {6u, 8u, 10u}) {
    BallOptions opts;
    opts.hash_level = h;
    CHECK(ball(GroupContext::parse(kSpec012), 5, opts).gamma ==
          ball(GroupContext::parse(kSpec012), 5).gamma);
    CHECK(ball(GroupContext::universal(), 4, opts).gamma ==
          ball(GroupContext::universal(), 4).gamma);
  }
  // A deliberately weak hash forces collisions to be resolved exactly.
  BallOptions weak;
  weak.hash_level = 1;
  CHECK(ball(GroupContext::parse(kSpec012), 5, weak).gamma ==
        ball(GroupContext::parse(kSpec012), 5).gamma);
}

TEST_CASE("element cap truncates") {
  BallOptions tiny;
  tiny.element_cap = 3;
  GrowthTable t = ball(GroupContext::parse(kSpec012), 4, tiny);
  CHECK(t.truncated);
  CHECK(t.gamma.size() < 5);
}

TEST_CASE("diagonal sandwich and subset monotonicity") {
  auto fam = lambda_family({1}).members;
  REQUIRE(fam.size() == 3);
  for (unsigned n = 1; n <= 4; ++n) {
    auto full = ball(GroupContext::diagonal(fam), n).gamma[n];
    auto sub = ball(GroupContext::diagonal({fam[0], fam[1]}), n).gamma[n];
    std::uint64_t mx = 0, prod = 1;
    for (const auto& om : fam) {
      auto g = ball(GroupContext::single(om), n).gamma[n];
      mx = std::max(mx, g);
      prod *= g;
    }
    CHECK(mx <= full);
    CHECK(full <= prod);
    CHECK(sub <= full);  // marked-image monotonicity
  }
}

TEST_CASE("growth_csv") {
  GrowthTable t = ball(GroupContext::parse(kSpec012), 1);
  CHECK(growth_csv(t) == "n,gamma\n0,1\n1,5\n");
}

TEST_CASE("growth_limit_check") {
  auto r1 = growth_limit_check({1}, 2, {1, 2, 3});
  CHECK(r1.precondition_ok);
  CHECK(r1.all_equal());
  auto r0 = growth_limit_check({}, 2, {1});
  CHECK(!r0.precondition_ok);
}

TEST_CASE("schreier") {
  auto ctx = GroupContext::parse(kSpec012);
  for (unsigned level = 1; level <= 6; ++level) {
    SchreierGraph g = schreier(ctx, level);
    CHECK(g.vertices.size() == (1u << level));
    CHECK(g.components == 1);
    // Edges are images under the generator action.
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      for (int k = 0; k < 4; ++k) {
        Word gen = Word::reduce(std::string(1, "abcd"[k]));
        CHECK(g.vertices[g.edges[i][k]] == oracle::act_g(gen, ctx.members()[0], g.vertices[i]));
      }
  }
  SchreierGraph u1 = schreier(GroupContext::universal(), 1);
  CHECK(u1.vertices.size() == 6);
  CHECK(u1.components == 3);

  auto dot = schreier_dot(schreier(ctx, 2));
  CHECK(dot.find("graph schreier") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  auto json = schreier_json(schreier(ctx, 2));
  CHECK(json.find("\"components\"") != std::string::npos);
}

TEST_CASE("rist_witness") {
  CHECK(rist_witness(GroupContext::parse(kSpec012), "", 1) == Word::reduce("a"));
  auto ctx = GroupContext::parse("omega:0|12");
  CHECK(rist_witness(ctx, "1", 1) == Word::reduce("d"));

  // Any returned witness is supported below the vertex: it fixes every
  // vertex not descending from it, and moves something inside.
  auto w = rist_witness(GroupContext::parse(kSpec012), "1", 8);
  REQUIRE(w.has_value());
  const OmegaSeq om = OmegaSeq::parse("|012");
  bool moves_inside = false;
  for (unsigned level = 1; level <= 10; ++level)
    for (const auto& v : oracle::level_vertices(level, 2)) {
      auto img = oracle::act_g(*w, om, v);
      if (v.substr(0, 1) != "1")
        CHECK(img == v);
      else if (img != v)
        moves_inside = true;
    }
  CHECK(moves_inside);
}
