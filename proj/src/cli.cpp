#include "negcurve/cli.hpp"
#include "negcurve/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace negcurve {

namespace {

const std::vector<std::string> kind_names{"hesse3", "dual-hesse", "torsion", "fermat-zm", "cubic"};

Configuration build(const std::string& kind, int m, int s) {
  if (kind == "hesse3") return build_hesse_torsion(3);
  if (kind == "dual-hesse") return build_dual_hesse();
  if (kind == "torsion") {
    if (m == 0) throw std::invalid_argument("--kind torsion needs --m");
    return build_hesse_torsion(m);
  }
  if (kind == "fermat-zm") {
    if (m == 0) throw std::invalid_argument("--kind fermat-zm needs --m");
    return build_fermat_zm(m);
  }
  if (s == 0) throw std::invalid_argument("--kind cubic needs --s");
  return build_very_general_cubic(s);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.close();
    if (!f) {
      fs::remove(tmp);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* default_seed = "1;1,0,0,0,0,1,0,0,0";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negative curves on blow-ups of point configurations", "negcurve"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the result to FILE atomically");

  std::string kind;
  int m = 0, s = 0, k = 3, depth = 6;
  std::int64_t max_degree = 10;
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  std::string moves_text, format, seed_text = default_seed, class_text;
  std::string expect_path;
  bool allow_backtrack = false, all_seeds = false, no_symmetry = false;
  const auto kinds = CLI::IsMember(kind_names);

  auto* config = app.add_subcommand("config", "point configurations");
  config->require_subcommand(1);
  auto* config_build = config->add_subcommand("build", "build a configuration and its incidences");
  config_build->add_option("--kind", kind)->required()->check(kinds);
  config_build->add_option("--m", m);
  config_build->add_option("--s", s);

  auto* lemma = app.add_subcommand("lemma", "the k x k sum-of-squares bound");
  lemma->require_subcommand(1);
  auto* lemma_verify = lemma->add_subcommand("verify", "exact vertex enumeration");
  lemma_verify->add_option("--k", k)->check(CLI::Range(1, 8));
  auto* lemma_giants = lemma->add_subcommand("giants", "check the giant covering claim");
  auto* lemma_probe = lemma->add_subcommand("probe", "randomized vertex walk for k >= 4");
  lemma_probe->add_option("--k", k)->required()->check(CLI::Range(2, 8));
  lemma_probe->add_option("--budget", budget);
  lemma_probe->add_option("--seed", seed);

  auto* cremona = app.add_subcommand("cremona", "Cremona moves on the dual Hesse points");
  cremona->require_subcommand(1);
  auto* cremona_trace = cremona->add_subcommand("trace", "apply a move sequence, CSV");
  cremona_trace->add_option("--moves", moves_text)->required();
  cremona_trace->add_option("--seed", seed_text, "starting class d;k1,...,k9");
  cremona_trace->add_option("--expect", expect_path, "exit 1 unless the CSV equals FILE byte for byte");
  auto* cremona_orbit = cremona->add_subcommand("orbit", "breadth-first orbit of (-1)-classes");
  cremona_orbit->add_option("--max-degree", max_degree)->required();
  cremona_orbit->add_flag("--allow-backtrack", allow_backtrack);
  cremona_orbit->add_flag("--all-seeds", all_seeds, "start from every special-pair line");
  cremona_orbit->add_option("--seed", seed_text);
  cremona_orbit->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  auto* cremona_hexal = cremona->add_subcommand("hexal", "degree rows of the orbit of L(Q1,Q6), CSV");
  cremona_hexal->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);
  cremona_hexal->add_option("--expect", expect_path, "exit 1 unless the CSV equals FILE byte for byte");
  auto* cremona_reduce_cmd = cremona->add_subcommand("reduce", "reduce a class by failing triangle moves");
  cremona_reduce_cmd->add_option("--class", class_text)->required();

  auto* classify = app.add_subcommand("classify", "negative classes and b(X)");
  classify->require_subcommand(1);
  auto* classify_search = classify->add_subcommand("search", "pruned search for negative classes");
  classify_search->add_option("--kind", kind)->required()->check(kinds);
  classify_search->add_option("--m", m);
  classify_search->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);
  classify_search->add_flag("--no-symmetry", no_symmetry, "list every search class instead of one per orbit");
  auto* classify_bnc = classify->add_subcommand("bnc", "bounded negativity constant");
  classify_bnc->add_option("--kind", kind)->required()->check(kinds);
  classify_bnc->add_option("--m", m);
  classify_bnc->add_option("--s", s);

  std::vector<std::string> argv_store{"negcurve"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitOk;
  } catch (const CLI::ParseError& e) {
    err << "negcurve: " << e.what() << "\n";
    return ExitUsage;
  }

  std::string text;
  int code = ExitOk;
  try {
    if (config_build->parsed()) {
      text = dump(to_json(build(kind, m, s)));
    } else if (lemma_verify->parsed()) {
      const auto sys = lemma_system(k);
      const auto res = max_sum_squares(sys);
      text = dump(lemma_json(k, sys, res));
      if (res.value > 1) code = ExitVerificationFailed;
    } else if (lemma_giants->parsed()) {
      const auto g = giant_cover_check();
      text = dump(to_json(g));
      if (!g.all_covered) code = ExitVerificationFailed;
    } else if (lemma_probe->parsed()) {
      const auto p = conjecture_probe(k, budget, seed);
      text = dump(to_json(p));
      if (p.refutation) code = ExitVerificationFailed;
    } else if (cremona_trace->parsed()) {
      const auto cfg = build_dual_hesse();
      std::vector<CremonaMove> moves;
      std::stringstream list(moves_text);
      for (std::string item; std::getline(list, item, ',');) moves.push_back(parse_move(cfg, item));
      const auto start = parse_divisor_class(seed_text);
      if (start.points() != cfg.s) throw DimensionError("seed class must have 9 multiplicities");
      text = trace_csv(trace(start, moves));
    } else if (cremona_orbit->parsed()) {
      const auto cfg = build_dual_hesse();
      std::vector<DivisorClass> seeds;
      if (all_seeds) {
        for (const auto& p : cfg.special_pairs) seeds.push_back(line_through(cfg.context(), {p[0], p[1]}));
      } else {
        seeds.push_back(parse_divisor_class(seed_text));
      }
      OrbitOptions opts;
      opts.max_degree = max_degree;
      opts.forbid_backtrack = !allow_backtrack;
      const auto g = orbit(cfg, seeds, opts);
      text = format == "dot" ? to_dot(g) : dump(to_json(g));
    } else if (cremona_hexal->parsed()) {
      const auto cfg = build_dual_hesse();
      OrbitOptions opts;
      opts.max_depth = depth;
      const auto g = orbit(cfg, {parse_divisor_class(default_seed)}, opts);
      text = hexal_csv(hexal(g, depth));
    } else if (cremona_reduce_cmd->parsed()) {
      const auto cfg = build_dual_hesse();
      const auto r = cremona_reduce(cfg, parse_divisor_class(class_text));
      Json moves = Json::array();
      for (const auto& mv : r.moves) moves.push_back(mv.name());
      text = dump({{"class", class_text}, {"terminal", to_string(r.terminal)}, {"moves", moves}});
    } else if (classify_search->parsed()) {
      text = dump(to_json(search_negative(build(kind, m, s), max_degree, !no_symmetry)));
    } else if (classify_bnc->parsed()) {
      const auto cfg = build(kind, m, s);
      text = dump(to_json(bnc_bound(cfg), cfg));
    }
  } catch (const std::invalid_argument& e) {
    err << "negcurve: " << e.what() << "\n";
    return ExitUsage;
  } catch (const std::length_error& e) {
    err << "negcurve: " << e.what() << "\n";
    return ExitUsage;
  } catch (const std::exception& e) {
    err << "negcurve: " << e.what() << "\n";
    return ExitVerificationFailed;
  }

  if (!expect_path.empty()) {
    try {
      if (read_file(expect_path) != text) {
        err << "negcurve: output differs from " << expect_path << "\n";
        code = ExitVerificationFailed;
      }
    } catch (const std::exception& e) {
      err << "negcurve: " << e.what() << "\n";
      return ExitUsage;
    }
  }

  try {
    if (out_path.empty())
      out << text;
    else
      write_atomically(out_path, text);
  } catch (const std::exception& e) {
    err << "negcurve: " << e.what() << "\n";
    return ExitVerificationFailed;
  }
  return code;
}

}  // namespace negcurve
