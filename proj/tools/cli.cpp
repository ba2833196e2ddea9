#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "codelattice/constructions.hpp"
#include "codelattice/error.hpp"
#include "codelattice/gadgets.hpp"
#include "codelattice/matrix_io.hpp"
#include "codelattice/report.hpp"

namespace codelattice::cli {
namespace {

constexpr std::size_t kTextVectorLimit = 1000;
constexpr std::size_t kSampleSize = 16;

struct RunConfig {
  std::string input;
  std::string construction;
  std::string theorem;
  std::string tower;
  std::string out;
  std::string format = "json";
  std::size_t a = 2;
  std::size_t m = 0;
  std::string p;
  std::uint64_t seed = 0;
  std::string delta;
  std::uint64_t budget = EnumerationOptions{}.node_budget;
  unsigned workers = 1;
  bool full_enum = false;
  bool no_timing = false;
  bool a_given = false;
  bool m_given = false;
};

// Accepts "3/2", "2" or "1.5".
Rational parse_rational(const std::string& text, const char* what) {
  Rational q;
  const auto dot = text.find('.');
  bool ok = !text.empty();
  if (ok && dot == std::string::npos) {
    ok = q.set_str(text, 10) == 0 && q.get_den() != 0;
    if (ok) q.canonicalize();
  } else if (ok) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    ok = frac.find_first_not_of("0123456789") == std::string::npos &&
         (whole.empty() || whole.find_first_not_of("0123456789") == std::string::npos) &&
         !(whole.empty() && frac.empty());
    if (ok) {
      Integer num(whole.empty() ? "0" : whole);
      Integer den = 1;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      q = Rational(num, den);
      q.canonicalize();
    }
  }
  if (!ok) throw Error(ErrorCode::kParse, std::string("bad ") + what + " '" + text + "'");
  return q;
}

EnumerationOptions enumeration_options(const RunConfig& cfg) {
  EnumerationOptions options;
  options.node_budget = cfg.budget;
  options.workers = cfg.workers;
  if (!cfg.delta.empty()) options.delta = parse_rational(cfg.delta, "delta");
  return options;
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  bool json() const { return cfg_.format == "json"; }

  void emit(Json j, const std::string& text, double runtime_ms) {
    if (json()) {
      if (!cfg_.no_timing) j["runtime_ms"] = runtime_ms;
      write(j.dump(2) + "\n");
    } else {
      write(text);
    }
  }

  void write(const std::string& content) {
    if (cfg_.out.empty()) {
      out_ << content;
      return;
    }
    std::ofstream file(cfg_.out);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + cfg_.out);
    file << content;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json basis_json(const Lattice& lattice) { return to_json(lattice.basis()); }

Json determinant_json(const Lattice& lattice) {
  if (lattice.rank() == 0) return nullptr;
  const Determinant det = determinant(lattice);
  if (det.squared) return {{"squared", to_json(det.value)}};
  return to_json(det.value);
}

int cmd_code_info(const RunConfig& cfg, std::ostream& out) {
  const Timer timer;
  const Code code(read_binary_matrix(cfg.input));
  Json j;
  j["n"] = code.length();
  j["k"] = code.rank();
  const std::size_t d = min_distance(code);
  const auto shortest = min_weight_codewords(code);
  j["d"] = d;
  j["kappa0"] = shortest.size();
  j["weight_distribution"] = weight_distribution(code);
  Json sample = Json::array();
  for (std::size_t i = 0; i < shortest.size() && i < kSampleSize; ++i) {
    sample.push_back(to_json(shortest[i]));
  }
  j["min_weight_sample"] = sample;

  std::ostringstream text;
  text << "n = " << code.length() << "\nk = " << code.rank() << "\nd = " << d
       << "\nkappa0 = " << shortest.size() << '\n';
  for (const auto& s : sample) text << "  " << s.get<std::string>() << '\n';
  Output(cfg, out).emit(std::move(j), text.str(), timer.ms());
  return kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const Timer timer;
  const std::string& name = cfg.construction;
  Json j;
  j["construction"] = name;
  std::optional<Lattice> lattice;
  std::optional<IntVector> dbar_witness;

  if (name == "a") {
    lattice = construction_a(Code(read_binary_matrix(cfg.input)));
  } else if (name == "simplified-d") {
    lattice = simplified_d(Code(read_binary_matrix(cfg.input)));
  } else if (name == "c-star") {
    const Code code(read_binary_matrix(cfg.input));
    lattice = construction_c_star(code);
    j["definitional_check"] = code.length() <= 8 ? "equal" : "skipped";
  } else if (name == "d") {
    std::vector<BinaryMatrix> blocks;
    {
      const auto manifest = std::filesystem::path(cfg.input);
      std::ifstream in(manifest);
      if (!in) throw Error(ErrorCode::kParse, "cannot open " + cfg.input);
      std::size_t n = 0, a = 0;
      if (!(in >> n >> a) || a == 0) {
        throw Error(ErrorCode::kParse, "block manifest needs '<n> <a>'");
      }
      std::string file;
      while (in >> file) {
        blocks.push_back(read_binary_matrix(manifest.parent_path() / file));
      }
      if (blocks.size() != a) {
        throw Error(ErrorCode::kParse, "block manifest lists " +
                                           std::to_string(blocks.size()) +
                                           " blocks, header says " + std::to_string(a));
      }
      for (const auto& b : blocks) {
        if (b.rows() != n) throw Error(ErrorCode::kParse, "block row count differs from n");
      }
    }
    if (cfg.a_given && cfg.a != blocks.size()) {
      throw Error(ErrorCode::kShapeMismatch, "--a disagrees with the manifest");
    }
    const DTowerInput input = DTowerInput::complete(std::move(blocks), cfg.seed);
    j["a"] = input.depth();
    j["k0_columns"] = input.blocks.front().cols();
    lattice = construction_d(input, /*strict=*/true);
  } else if (name == "d-special") {
    const auto files = read_manifest(cfg.input);
    if (!files.count("Ka")) throw Error(ErrorCode::kParse, "manifest needs 'Ka'");
    const BinaryMatrix ka = read_binary_matrix(files.at("Ka"));
    std::vector<BinaryVector> c_list;
    if (files.count("c")) c_list = read_binary_matrix(files.at("c")).columns();
    const std::size_t a = c_list.size() + 1;
    if (cfg.a_given && cfg.a != a) {
      throw Error(ErrorCode::kShapeMismatch, "--a disagrees with the number of c_i");
    }
    BinaryMatrix k0;
    if (files.count("K0")) {
      k0 = read_binary_matrix(files.at("K0"));
    } else {
      BinaryMatrix upper(ka.rows(), 0);
      for (const auto& c : c_list) {
        upper = upper.hconcat(BinaryMatrix::from_columns(ka.rows(), {c}));
      }
      k0 = complete_to_full_rank(upper.hconcat(ka), cfg.seed);
    }
    j["a"] = a;
    lattice = vladut_special_d(k0, c_list, ka, a);
  } else if (name == "d-bar") {
    const CodeTower tower = read_tower(cfg.input);
    const DBarLatticeCheck check = d_bar_is_lattice(tower);
    j["is_lattice"] = check.is_lattice;
    j["cosets"] = check.cosets;
    if (check.witness) {
      j["witness"] = to_json(*check.witness);
      dbar_witness = check.witness;
    }
    lattice = check.generated;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown construction '" + name + "'");
  }

  j["n"] = lattice->dimension();
  j["rank"] = lattice->rank();
  j["determinant"] = determinant_json(*lattice);
  j["basis"] = basis_json(*lattice);

  std::ostringstream text;
  text << "construction " << name << ": n = " << lattice->dimension()
       << ", rank = " << lattice->rank() << ", det = " << j["determinant"].dump()
       << '\n';
  if (dbar_witness) text << "not a lattice, witness " << j["witness"].dump() << '\n';

  RunConfig report_cfg = cfg;
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + cfg.out);
    file << format_lattice(*lattice);
    report_cfg.out.clear();
  } else if (cfg.format == "text") {
    text << format_lattice(*lattice);
  }
  Output(report_cfg, out).emit(std::move(j), text.str(), timer.ms());
  return dbar_witness ? kConstructionError : kOk;
}

int cmd_lattice_analyze(const RunConfig& cfg, std::ostream& out) {
  const Timer timer;
  const IntMatrix m = read_int_matrix(cfg.input);
  const Lattice lattice = hnf(GeneratingSet(m.rows, m.columns));
  const ShortVectorReport svr = shortest_vectors(lattice, enumeration_options(cfg));
  Json j;
  j["n"] = lattice.dimension();
  j["rank"] = lattice.rank();
  const Json report = to_json(svr);
  for (const auto& [key, value] : report.items()) j[key] = value;
  j["nodes"] = svr.nodes;

  std::ostringstream text;
  text << "lambda1_sq = " << svr.lambda1_sq.get_str() << "\nkissing = " << svr.kissing
       << '\n';
  for (std::size_t i = 0; i < svr.vectors.size() && i < kTextVectorLimit; ++i) {
    text << "  " << to_json(svr.vectors[i]).dump() << '\n';
  }
  if (svr.vectors.size() > kTextVectorLimit) {
    text << "  ... " << svr.vectors.size() - kTextVectorLimit << " more\n";
  }
  Output(cfg, out).emit(std::move(j), text.str(), timer.ms());
  return kOk;
}

Thm22Gadget read_thm22_gadget(const std::string& path) {
  const auto files = read_manifest(path);
  for (const char* key : {"A", "B", "w"}) {
    if (!files.count(key)) throw Error(ErrorCode::kParse, std::string("manifest needs '") + key + "'");
  }
  Thm22Gadget g;
  g.a = read_binary_matrix(files.at("A"));
  g.b = read_binary_matrix(files.at("B"));
  const BinaryMatrix w = read_binary_matrix(files.at("w"));
  if (w.cols() != 1) throw Error(ErrorCode::kParse, "w must be a single column");
  g.w = w.column(0);
  return g;
}

Thm24Gadget read_thm24_gadget(const std::string& path) {
  const auto files = read_manifest(path);
  for (const char* key : {"A", "B", "z"}) {
    if (!files.count(key)) throw Error(ErrorCode::kParse, std::string("manifest needs '") + key + "'");
  }
  Thm24Gadget g;
  g.a = read_binary_matrix(files.at("A"));
  g.b = read_binary_matrix(files.at("B"));
  const IntMatrix z = read_int_matrix(files.at("z"));
  if (z.columns.size() != 1) throw Error(ErrorCode::kParse, "z must be a single column");
  g.z = z.columns.front();
  return g;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const EnumerationOptions options = enumeration_options(cfg);
  const std::string& t = cfg.theorem;
  VerificationReport report;

  if (t == "thm22" || t == "cor23") {
    const std::size_t m = cfg.m_given ? cfg.m : 17;
    if (t == "cor23") {
      report = verify_cor23(m, cfg.seed, cfg.full_enum, options);
    } else {
      Thm22Gadget g = cfg.input.empty() ? cor23_gadget(m) : read_thm22_gadget(cfg.input);
      g.m = m;
      if (cfg.a_given) g.depth = cfg.a;
      report = verify_thm22(g, cfg.seed, cfg.full_enum, options);
    }
  } else if (t == "thm24" || t == "cor25") {
    Thm24Gadget g = (t == "cor25" || cfg.input.empty()) ? cor25_gadget()
                                                         : read_thm24_gadget(cfg.input);
    g.m = cfg.m_given ? cfg.m : (t == "cor25" ? 4 : 0);
    const Rational p = cfg.p.empty() ? Rational(2) : parse_rational(cfg.p, "p");
    if (p < 1) throw Error(ErrorCode::kInvalidArgument, "p must be at least 1");
    report = verify_thm24(g, p, options);
    if (t == "cor25") report.theorem = "cor25";
  } else if (t == "cstar-collapse") {
    if (cfg.input.empty()) throw Error(ErrorCode::kInvalidArgument, "cstar-collapse needs a code file");
    report = verify_cstar_collapse(Code(read_binary_matrix(cfg.input)), options);
  } else if (t == "dbar-schur") {
    const std::string path = cfg.tower.empty() ? cfg.input : cfg.tower;
    if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "dbar-schur needs --tower");
    report = verify_dbar_schur(read_tower(path));
  } else if (t == "golay-lp") {
    const Rational p = cfg.p.empty() ? Rational(1) : parse_rational(cfg.p, "p");
    report = golay_lp_check(p, options);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown theorem '" + t + "'");
  }

  Output output(cfg, out);
  if (output.json()) {
    output.write(report.to_json(!cfg.no_timing).dump(2) + "\n");
  } else {
    output.write(report.to_text());
  }
  if (report.pass()) return kOk;
  if (report.verdict() == "INCONCLUSIVE") return kBudgetExceeded;
  return kVerificationFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kParseError;
    case ErrorCode::kRankTooLarge:
      return kRankTooLarge;
    case ErrorCode::kEnumerationBudgetExceeded:
      return kBudgetExceeded;
    default:
      return kConstructionError;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattices from binary codes: constructions, invariants and checks",
               "codelattice"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the result to this file");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--no-timing", cfg.no_timing, "Omit runtime_ms from JSON");
  };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "Enumeration node budget");
    sub->add_option("--workers", cfg.workers, "Enumeration worker threads")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--delta", cfg.delta, "LLL delta, e.g. 99/100");
  };

  auto* code_info = app.add_subcommand("code-info", "Code parameters and S_C sample");
  code_info->add_option("path", cfg.input, "F2 generator matrix")->required();
  add_common(code_info);

  auto* construct = app.add_subcommand("construct", "Build a lattice from codes");
  construct->add_option("path", cfg.input, "Code, block or tower file")->required();
  construct->add_option("--construction", cfg.construction)
      ->required()
      ->check(CLI::IsMember({"a", "d", "d-special", "simplified-d", "c-star", "d-bar"}));
  auto* construct_a = construct->add_option("--a", cfg.a, "Tower depth");
  construct->add_option("--seed", cfg.seed, "Seed for the K_0 completion");
  add_common(construct);

  auto* analyze = app.add_subcommand("lattice-analyze", "Exact lambda_1 and kissing number");
  analyze->add_option("path", cfg.input, "Z or F2 matrix whose columns generate")->required();
  add_common(analyze);
  add_enumeration(analyze);

  auto* verify = app.add_subcommand("verify", "Run a theorem verifier");
  verify->add_option("theorem", cfg.theorem)
      ->required()
      ->check(CLI::IsMember(
          {"thm22", "cor23", "thm24", "cor25", "cstar-collapse", "dbar-schur", "golay-lp"}));
  verify->add_option("path", cfg.input, "Gadget manifest or code file");
  verify->add_option("--tower", cfg.tower, "Tower manifest");
  auto* verify_a = verify->add_option("--a", cfg.a, "Tower depth");
  auto* verify_m = verify->add_option("--m", cfg.m, "Replication factor");
  verify->add_option("--p", cfg.p, "Norm exponent, e.g. 3/2");
  verify->add_option("--seed", cfg.seed, "Seed for c_i and K_0");
  verify->add_flag("--full-enum", cfg.full_enum, "Also enumerate every short vector");
  add_common(verify);
  add_enumeration(verify);

  std::vector<const char*> argv{"codelattice"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }
  cfg.a_given = construct_a->count() > 0 || verify_a->count() > 0;
  cfg.m_given = verify_m->count() > 0;

  try {
    if (*code_info) return cmd_code_info(cfg, out);
    if (*construct) return cmd_construct(cfg, out);
    if (*analyze) return cmd_lattice_analyze(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConstructionError;
  }
}

}  // namespace codelattice::cli
