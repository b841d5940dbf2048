// Command-line front end: build family graphs, compute Hosoya indices by the
// matching oracle and/or the continued-fraction route, evaluate fraction spec
// files, emit ring sequences, and run the identity suites.
//
// Exit codes: 0 ok, 2 input error, 3 capability error (an operation the
// input cannot support), 4 verification mismatch.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hosoya/contfrac.hpp"
#include "hosoya/families.hpp"
#include "hosoya/family_spec.hpp"
#include "hosoya/multigraph.hpp"
#include "hosoya/oracle.hpp"
#include "hosoya/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;
constexpr int kExitMismatch = 4;

hosoya::Range parse_range(const std::string& text) {
  auto bad = [&] {
    return std::invalid_argument("bad range '" + text + "': expected LO..HI or a single integer");
  };
  try {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      long long v = std::stoll(text);
      return hosoya::Range{v, v};
    }
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (hi < lo) throw bad();
    return hosoya::Range{lo, hi};
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

// Either an hgraph file on disk or a family spec string.
struct ZInput {
  bool is_file = false;
  hosoya::Multigraph graph;
  hosoya::FamilySpec family;
};

ZInput load_z_input(const std::string& text) {
  ZInput in;
  if (std::filesystem::exists(text)) {
    in.is_file = true;
    std::ifstream f(text);
    if (!f) throw std::invalid_argument("cannot open '" + text + "'");
    in.graph = hosoya::parse_hgraph(f);
    return in;
  }
  in.family = hosoya::parse_family_spec(text);
  in.graph = hosoya::build_family(in.family);
  return in;
}

int run_build(const std::string& spec_text, const std::string& out_path) {
  hosoya::FamilySpec spec = hosoya::parse_family_spec(spec_text);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << hosoya::format_hgraph(hosoya::build_family(spec));
  return kExitOk;
}

int run_z(const std::string& input_text, const std::string& method) {
  ZInput in = load_z_input(input_text);
  if (method == "oracle") {
    std::cout << hosoya::hosoya_index(in.graph) << "\n";
    return kExitOk;
  }
  if (in.is_file || !hosoya::has_cf_route(in.family)) {
    throw hosoya::CapabilityError("no continued-fraction route for '" + input_text +
                                  "' (oracle only)");
  }
  hosoya::BigInt cf = hosoya::cf_hosoya(in.family);
  if (method == "cf") {
    std::cout << cf << "\n";
    return kExitOk;
  }
  hosoya::BigInt oracle = hosoya::hosoya_index(in.graph);
  std::cout << oracle << " " << cf << "\n";
  return oracle == cf ? kExitOk : kExitMismatch;
}

int run_cf(const std::string& path, std::string mode) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("spec file '" + path + "': " + e.what());
  }
  if (mode == "auto") {
    if (j.is_object() && j.contains("a0")) mode = "general";
    else if (j.is_object() && j.contains("M")) mode = "negative";
    else if (j.is_object() && j.contains("pendants")) mode = "tree";
    else throw std::invalid_argument("spec file '" + path + "': unrecognised schema");
  }
  if (mode == "general") {
    hosoya::GeneralCF cf = hosoya::general_cf_from_json(j);
    std::cout << hosoya::to_string(hosoya::eval_bottom_up(cf)) << "\n";
    auto cs = hosoya::convergents(cf);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::cout << k << " " << cs[k].p << "/" << cs[k].q << "\n";
    }
    return kExitOk;
  }
  if (mode == "negative") {
    hosoya::Convergent c = hosoya::eval_negative_ring_cf(hosoya::negative_cf_from_json(j));
    std::cout << c.p << "/" << c.q << "\n";
    return kExitOk;
  }
  std::cout << hosoya::to_string(hosoya::eval_tree_cf(hosoya::tree_cf_from_json(j))) << "\n";
  return kExitOk;
}

int run_seq(const std::string& family, long long r, long long s, long long m, long long count) {
  if (family != "ring") {
    throw std::invalid_argument("seq: unknown family '" + family + "' (only 'ring' is supported)");
  }
  if (count < 1) throw std::invalid_argument("seq: count must be >= 1");
  if (r < 1 || s < 1 || m < 0) throw std::invalid_argument("seq: need r,s >= 1 and m >= 0");
  hosoya::RingParams p{1, m, r, s};
  for (const hosoya::BigInt& u : hosoya::ring_u_sequence(p.M(), p.rs(), count).values) {
    std::cout << u << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed, int samples,
               const std::string& n_range, const std::string& m_range, const std::string& r_range,
               const std::string& s_range, int max_spine, long long max_x, long long max_y,
               int max_vertices, long long max_mult, const std::string& cycle_n,
               const std::string& comb_n, const std::string& comb_a, const std::string& comb_b) {
  auto range_or = [](const std::string& text, const char* fallback) {
    return parse_range(text.empty() ? fallback : text);
  };
  hosoya::VerifyReport rep;
  if (suite == "lemma1") {
    rep = hosoya::verify_lemma1(seed, samples > 0 ? samples : 200, max_spine, max_x, max_y);
  } else if (suite == "lemma2") {
    rep = hosoya::verify_lemma2(seed, samples > 0 ? samples : 100, max_vertices, max_mult);
  } else if (suite == "theorem1") {
    rep = hosoya::verify_theorem1(range_or(n_range, "1..4"), range_or(m_range, "0..2"),
                                  range_or(r_range, "1..3"), range_or(s_range, "1..3"));
  } else if (suite == "remark2") {
    rep = hosoya::verify_remark2(range_or(n_range, "2..5"), range_or(m_range, "0..2"),
                                 range_or(r_range, "1..3"), range_or(s_range, "1..3"));
  } else if (suite == "radial") {
    rep = hosoya::verify_radial(range_or(m_range, "1..8"));
  } else if (suite == "transforms") {
    // comb rows are opt-in: without --comb-n only the cycle rows run
    hosoya::Range comb = comb_n.empty() ? hosoya::Range{1, 0} : parse_range(comb_n);
    rep = hosoya::verify_transforms(range_or(cycle_n, "3..12"), comb, range_or(comb_a, "0..2"),
                                    range_or(comb_b, "1..2"));
  } else {
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  }
  for (const hosoya::VerifyRow& row : rep.rows) {
    std::cout << rep.suite << " " << row.text << (row.ok ? " ok" : " MISMATCH") << "\n";
  }
  std::cout << rep.suite << ": " << rep.passed() << "/" << rep.rows.size() << " passed\n";
  return rep.all_ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hosoya indices and continued fractions"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "write a family graph as an hgraph v1 file");
  std::string build_spec, build_out;
  build->add_option("spec", build_spec, "family spec, e.g. ring:n=3,m=1,r=2,s=1")->required();
  build->add_option("output", build_out, "output path")->required();

  auto* z = app.add_subcommand("z", "Hosoya index of an hgraph file or family spec");
  std::string z_input, z_method = "oracle";
  z->add_option("input", z_input, "hgraph file or family spec")->required();
  z->add_option("--method", z_method, "oracle | cf | both (default oracle)")
      ->check(CLI::IsMember({"oracle", "cf", "both"}));

  auto* cf = app.add_subcommand("cf", "evaluate a continued-fraction spec file");
  std::string cf_path, cf_mode = "auto";
  cf->add_option("file", cf_path, "JSON spec file")->required();
  cf->add_option("--mode", cf_mode, "auto | general | negative | tree")
      ->check(CLI::IsMember({"auto", "general", "negative", "tree"}));

  auto* seq = app.add_subcommand("seq", "print u_0..u_{count-1} of a ring family");
  std::string seq_family = "ring";
  long long seq_r = 1, seq_s = 1, seq_m = 0, seq_count = 0;
  seq->add_option("family", seq_family, "family (ring)")->required();
  seq->add_option("--r", seq_r, "single-bond multiplicity (default 1)");
  seq->add_option("--s", seq_s, "double-bond multiplicity (default 1)");
  seq->add_option("--m", seq_m, "pendants per ring vertex (default 0)");
  seq->add_option("--count", seq_count, "number of terms")->required();

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string n_range, m_range, r_range, s_range;
  int max_spine = 5;
  long long max_x = 3, max_y = 3;
  int max_vertices = 10;
  long long max_mult = 18;
  std::string cycle_n, comb_n, comb_a, comb_b;
  verify->add_option("suite", suite, "lemma1 | lemma2 | theorem1 | remark2 | radial | transforms")
      ->required();
  verify->add_option("--seed", seed, "RNG seed for sampled suites (default 0)");
  verify->add_option("--samples", samples, "number of sampled cases");
  verify->add_option("--n", n_range, "ring size range LO..HI");
  verify->add_option("--m", m_range, "branch count range LO..HI");
  verify->add_option("--r", r_range, "r range LO..HI");
  verify->add_option("--s", s_range, "s range LO..HI");
  verify->add_option("--max-spine", max_spine, "lemma1: max spine length");
  verify->add_option("--max-x", max_x, "lemma1: max branch parameter");
  verify->add_option("--max-y", max_y, "lemma1: max bond multiplicity");
  verify->add_option("--max-vertices", max_vertices, "lemma2: max vertices");
  verify->add_option("--max-mult", max_mult, "lemma2: max total multiplicity");
  verify->add_option("--cycle-n", cycle_n, "transforms: cycle size range");
  verify->add_option("--comb-n", comb_n, "transforms: comb size range (comb rows only run when set)");
  verify->add_option("--comb-a", comb_a, "transforms: comb branch range");
  verify->add_option("--comb-b", comb_b, "transforms: comb bond range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(build)) return run_build(build_spec, build_out);
    if (app.got_subcommand(z)) return run_z(z_input, z_method);
    if (app.got_subcommand(cf)) return run_cf(cf_path, cf_mode);
    if (app.got_subcommand(seq)) return run_seq(seq_family, seq_r, seq_s, seq_m, seq_count);
    if (app.got_subcommand(verify)) {
      return run_verify(suite, seed, samples, n_range, m_range, r_range, s_range, max_spine, max_x,
                        max_y, max_vertices, max_mult, cycle_n, comb_n, comb_a, comb_b);
    }
  } catch (const hosoya::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const hosoya::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
