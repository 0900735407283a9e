// Command-line surface for the tree-automorphism calculi: word problem,
// growth tables, verification suites, Schreier graphs, marked-group
// distances and boundary-stabilizer IRS sampling. All outputs are
// deterministic under a fixed seed and thread count does not affect them.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grig/enumerate.hpp"
#include "grig/gomega.hpp"
#include "grig/irs.hpp"
#include "grig/marked.hpp"
#include "grig/universal.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
}

int run_verify(const std::string& suite, const std::string& omega_spec, unsigned depth) {
  using namespace grig;
  if (suite == "relations") {
    const char* relators[] = {"aa", "bb", "cc", "dd", "bcd", "dcb"};
    const char* nontrivial[] = {"a", "b", "c", "d", "ab"};
    bool ok = true;
    for (const char* r : relators) {
      bool pass = is_trivial_u(Word::reduce(r));
      std::cout << (pass ? "PASS" : "FAIL") << " relation " << r << " = 1\n";
      if (!pass) {
        std::cout << "first failing identity: " << r << "\n";
        return 1;
      }
    }
    for (const char* r : nontrivial) {
      bool pass = !is_trivial_u(Word::reduce(r));
      std::cout << (pass ? "PASS" : "FAIL") << " nontrivial " << r << "\n";
      if (!pass) {
        std::cout << "first failing identity: " << r << "\n";
        return 1;
      }
    }
    return ok ? 0 : 1;
  }
  if (suite == "branch") {
    auto report = verify_branch_identities();
    for (const auto& chk : report) {
      std::cout << (chk.pass ? "PASS" : "FAIL") << " " << chk.name;
      if (!chk.pass) std::cout << " (" << chk.detail << ")";
      std::cout << "\n";
    }
    for (const auto& chk : report)
      if (!chk.pass) {
        std::cout << "first failing identity: " << chk.name << "\n";
        return 1;
      }
    return 0;
  }
  if (suite == "psi") {
    OmegaSeq omega = OmegaSeq::parse(omega_spec);
    for (char g : {'a', 'b', 'c', 'd'}) {
      bool pass = psi_agrees(g, omega, depth);
      std::cout << (pass ? "PASS" : "FAIL") << " generator " << g << " agrees to depth " << depth
                << "\n";
      if (!pass) {
        std::cout << std::string("first failing identity: generator ") + g << "\n";
        return 1;
      }
    }
    return 0;
  }
  if (suite == "schreier") {
    OmegaSeq omega = OmegaSeq::parse(omega_spec);
    GroupContext ctx = GroupContext::single(omega);
    for (unsigned level = 1; level <= depth; ++level) {
      SchreierGraph g = schreier(ctx, level);
      bool pass = g.components == 1;
      std::cout << (pass ? "PASS" : "FAIL") << " level " << level << " components "
                << g.components << "\n";
      if (!pass) {
        std::cout << "first failing identity: level " << level << " transitivity\n";
        return 1;
      }
    }
    return 0;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace grig;
  CLI::App app{
      "Tree-automorphism calculi for the parametric family of binary-tree groups G_omega and the "
      "universal six-letter automaton group U: exact word problem, growth, branch certificates, "
      "marked-group distances and boundary-stabilizer IRS experiments."};
  app.set_config("--config");
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads (outputs are thread-count independent)");
  app.require_subcommand(1);

  // word
  auto* word_cmd = app.add_subcommand(
      "word", "Decide whether a word represents the identity in the given group context "
              "(exact word problem via contraction of wreath-recursion sections).");
  std::string w_ctx, w_word;
  word_cmd->add_option("ctx", w_ctx, "context: omega:<p>|<q>, universal, diag:..., lambda:...")
      ->required();
  word_cmd->add_option("w", w_word, "word over a,b,c,d; 'e' for the empty word")->required();

  // growth
  auto* growth_cmd = app.add_subcommand(
      "growth", "Exact growth function gamma(0..n) of the context by breadth-first ball "
                "enumeration; for diagonal families gamma is sandwiched between the member "
                "growths and their product.");
  std::string g_ctx, g_out;
  unsigned g_n = 4, g_hash = 8;
  std::size_t g_cap = 5'000'000;
  growth_cmd->add_option("ctx", g_ctx, "context spec")->required();
  growth_cmd->add_option("n", g_n, "ball radius")->required();
  growth_cmd->add_option("--out", g_out, "CSV output path (default stdout)");
  growth_cmd->add_option("--hash-level", g_hash, "action fingerprint depth (result-invariant)");
  growth_cmd->add_option("--cap", g_cap, "element cap");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run a verification suite: 'relations' (defining relations of U), 'branch' (the "
                "nine section identities certifying regular branching over the third commutator "
                "subgroup), 'psi' (the projections onto G_omega map generators to generators), "
                "'schreier' (level transitivity of G_omega).");
  std::string v_suite, v_omega = "|012";
  unsigned v_depth = 6;
  verify_cmd->add_option("suite", v_suite, "relations | branch | psi | schreier")->required();
  verify_cmd->add_option("--omega", v_omega, "omega sequence for psi/schreier");
  verify_cmd->add_option("--depth", v_depth, "tree depth / top level");

  // schreier export
  auto* schreier_cmd = app.add_subcommand(
      "schreier", "Emit the level-n Schreier graph of the generator action (component count 1 "
                  "at every level = level transitivity = ergodic boundary action).");
  std::string s_ctx, s_dot, s_json;
  unsigned s_level = 1;
  schreier_cmd->add_option("ctx", s_ctx, "omega:... or universal")->required();
  schreier_cmd->add_option("level", s_level, "tree level")->required();
  schreier_cmd->add_option("--dot", s_dot, "DOT output path");
  schreier_cmd->add_option("--json", s_json, "JSON adjacency output path");

  // marked
  auto* marked_cmd = app.add_subcommand(
      "marked", "Agreement radius of two 4-marked groups in the relator metric: the largest m "
                "such that the same words of length <= m are relations in both; distance 2^-m.");
  std::string m_p, m_q, m_out;
  unsigned m_maxlen = 10;
  marked_cmd->add_option("p", m_p, "first context spec")->required();
  marked_cmd->add_option("q", m_q, "second context spec")->required();
  marked_cmd->add_option("--maxlen", m_maxlen, "maximum word length inspected");
  marked_cmd->add_option("--out", m_out, "CSV output path (default stdout)");

  // irs
  auto* irs_cmd = app.add_subcommand(
      "irs", "Empirical invariant random subgroups from boundary-ray stabilizers of G_omega.");
  irs_cmd->require_subcommand(1);

  auto* irs_sample = irs_cmd->add_subcommand(
      "sample", "Sample boundary rays under the uniform Bernoulli measure (random depth-D prefix, "
                "tail 111...) and record stabilizer fingerprints as JSON lines.");
  std::string is_omega = "|012", is_out;
  std::size_t is_n = 1;
  unsigned is_d = 0, is_l = 4, is_cap = 64;
  std::uint64_t is_seed = 0;
  bool is_exhaustive = false;
  irs_sample->add_option("--omega", is_omega, "omega sequence");
  irs_sample->add_option("--n", is_n, "sample count");
  irs_sample->add_option("--depth", is_d, "random prefix depth D");
  irs_sample->add_option("--len", is_l, "fingerprint word length L");
  irs_sample->add_option("--cap", is_cap, "stabilizer walk depth cap");
  auto* seed_opt = irs_sample->add_option("--seed", is_seed, "RNG seed (mandatory)");
  irs_sample->add_flag("--exhaustive", is_exhaustive, "enumerate all depth-D cylinders instead");
  irs_sample->add_option("--out", is_out, "JSON-lines output path (default stdout)");

  auto* irs_inv = irs_cmd->add_subcommand(
      "invariance", "Conjugation invariance: total-variation distance between the fingerprint "
                    "distribution and its pushforward under a group element acting on the rays.");
  std::string ii_omega = "|012", ii_g = "a";
  std::size_t ii_n = 256;
  unsigned ii_d = 8, ii_l = 4, ii_cap = 64;
  std::uint64_t ii_seed = 0;
  bool ii_exhaustive = false;
  irs_inv->add_option("--omega", ii_omega, "omega sequence");
  irs_inv->add_option("--g", ii_g, "conjugating element");
  irs_inv->add_option("--n", ii_n, "sample count");
  irs_inv->add_option("--depth", ii_d, "prefix depth D");
  irs_inv->add_option("--len", ii_l, "fingerprint word length L");
  irs_inv->add_option("--cap", ii_cap, "stabilizer walk depth cap");
  irs_inv->add_option("--seed", ii_seed, "RNG seed");
  irs_inv->add_flag("--exhaustive", ii_exhaustive, "enumerate all depth-D cylinders");

  auto* irs_sep = irs_cmd->add_subcommand(
      "separate", "Search for a word separating the stabilizers of two rays (injectivity of the "
                  "stabilizer map); with --eta, separate the lifted stabilizers of two "
                  "non-equivalent parameter sequences.");
  std::string sp_omega = "|012", sp_eta, sp_xi = "|1", sp_rho = "0|1";
  unsigned sp_maxlen = 12, sp_cap = 64;
  irs_sep->add_option("--omega", sp_omega, "omega sequence");
  irs_sep->add_option("--eta", sp_eta, "second omega sequence (lifted separation)");
  irs_sep->add_option("--xi", sp_xi, "first ray, prefix|period over {0,1}");
  irs_sep->add_option("--rho", sp_rho, "second ray");
  irs_sep->add_option("--maxlen", sp_maxlen, "maximum witness length");
  irs_sep->add_option("--cap", sp_cap, "stabilizer walk depth cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*word_cmd) {
      GroupContext ctx = GroupContext::parse(w_ctx);
      bool trivial = trivial_in(ctx, parse_word(w_word));
      std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
      return 0;
    }
    if (*growth_cmd) {
      BallOptions opts;
      opts.hash_level = g_hash;
      opts.element_cap = g_cap;
      GrowthTable t = ball(GroupContext::parse(g_ctx), g_n, opts);
      write_output(g_out, growth_csv(t));
      return t.truncated ? 1 : 0;
    }
    if (*verify_cmd) return run_verify(v_suite, v_omega, v_depth);
    if (*schreier_cmd) {
      SchreierGraph g = schreier(GroupContext::parse(s_ctx), s_level);
      std::cout << "components=" << g.components << "\n";
      if (!s_dot.empty()) write_output(s_dot, schreier_dot(g));
      if (!s_json.empty()) write_output(s_json, schreier_json(g));
      return 0;
    }
    if (*marked_cmd) {
      MarkedPoint p{GroupContext::parse(m_p)}, q{GroupContext::parse(m_q)};
      write_output(m_out, agreement_report(p, q, m_maxlen));
      return 0;
    }
    if (*irs_sample) {
      if (!is_exhaustive && seed_opt->count() == 0)
        throw std::invalid_argument("irs sample: --seed is mandatory");
      OmegaSeq omega = OmegaSeq::parse(is_omega);
      EmpiricalIRS e = is_exhaustive ? exhaustive_irs(omega, is_d, is_l, is_cap, threads)
                                     : sample_irs(omega, is_n, is_d, is_l, is_cap, is_seed, threads);
      write_output(is_out, irs_jsonl(e));
      return 0;
    }
    if (*irs_inv) {
      OmegaSeq omega = OmegaSeq::parse(ii_omega);
      EmpiricalIRS e = ii_exhaustive ? exhaustive_irs(omega, ii_d, ii_l, ii_cap, threads)
                                     : sample_irs(omega, ii_n, ii_d, ii_l, ii_cap, ii_seed, threads);
      ConjInvarianceResult r = conj_invariance(e, parse_word(ii_g), threads);
      std::cout << "tv=" << r.tv << " decided_coordinates=" << r.decided_coordinates
                << " undecided_fraction_pushed=" << r.undecided_fraction_pushed << "\n";
      return 0;
    }
    if (*irs_sep) {
      OmegaSeq omega = OmegaSeq::parse(sp_omega);
      Ray xi = Ray::parse(sp_xi), rho = Ray::parse(sp_rho);
      std::optional<Word> w;
      if (sp_eta.empty()) {
        w = separate_stabilizers(omega, xi, rho, sp_maxlen, sp_cap);
      } else {
        w = lifted_separation(omega, OmegaSeq::parse(sp_eta), xi, rho, sp_maxlen, sp_cap);
      }
      if (w) {
        std::cout << "witness=" << show(*w) << "\n";
        return 0;
      }
      std::cout << "not found within budget\n";
      return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
