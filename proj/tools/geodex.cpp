// geodex: command-line front end for the index-iteration and elimination engines.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "geodex/io.hpp"

using namespace geodex;
using io::json;

namespace {

enum Exit { kOk = 0, kError = 1, kNegative = 2 };

struct Common {
  std::string out;
  bool no_timing = false;
};

struct Run {
  io::RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json load_json(const std::string& path) {
    const std::string text = io::read_file(path);
    manifest.inputs.emplace_back(path, io::sha256_hex(text));
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw io::FormatError(path + ": " + e.what());
    }
  }
  std::string load_text(const std::string& path) {
    std::string text = io::read_file(path);
    manifest.inputs.emplace_back(path, io::sha256_hex(text));
    return text;
  }
};

void emit(Run& run, const Common& c, const json& result) {
  if (!c.no_timing)
    run.manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - run.start).count();
  const std::string text = io::envelope(run.manifest, result).dump(2) + "\n";
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw io::FormatError("cannot write " + c.out);
  f << text;
}

Int parse_int_arg(const std::string& s, const char* what) {
  // Accepts plain integers and powers written as 10^k.
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    Int base = io::int_from(json(s.substr(0, caret)));
    long e = std::stol(s.substr(caret + 1));
    Int v = 1;
    for (long i = 0; i < e; ++i) v *= base;
    return v;
  }
  try {
    return io::int_from(json(s));
  } catch (const io::FormatError&) {
    throw io::FormatError(std::string(what) + ": not an integer: '" + s + "'");
  }
}

std::string joined(int argc, char** argv) {
  std::string s = "geodex";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index iteration, common index jumps and case elimination for closed geodesics on spheres"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "write the JSON report here instead of stdout");
  app.add_flag("--no-timing", common.no_timing, "omit wall time from the manifest");

  // iterate
  auto* iterate = app.add_subcommand("iterate", "index and nullity of iterates");
  std::string model_path;
  long mmax = 100;
  iterate->add_option("--model", model_path, "model JSON")->required();
  iterate->add_option("--mmax", mmax, "last iterate")->check(CLI::Range(1L, kMaxProfileLength));

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of the free loop space pair");
  int n = 3;
  long qmax = 50;
  bool alt = false;
  betti_cmd->add_option("--n", n, "sphere dimension")->check(CLI::Range(2, 1000));
  betti_cmd->add_option("--qmax", qmax, "last degree")->check(CLI::NonNegativeNumber);
  betti_cmd->add_flag("--alt", alt, "print the alternating sum up to qmax");

  // identity
  auto* identity = app.add_subcommand("identity", "mean index identity for a dressed configuration");
  std::string config_path;
  identity->add_option("--config", config_path, "configuration JSON")->required();

  // morse
  auto* morse = app.add_subcommand("morse", "Morse inequalities over iterate windows");
  std::string window_path;
  long morse_qmax = 60;
  morse->add_option("--config", config_path, "configuration JSON")->required();
  morse->add_option("--window", window_path, "iterate windows JSON")->required();
  morse->add_option("--qmax", morse_qmax, "last degree")->check(CLI::NonNegativeNumber);

  // jump
  auto* jump = app.add_subcommand("jump", "search for a common index jump");
  std::string eps_str, nbound_str = "1000000";
  int jump_n = 0;
  bool full_window = false;
  jump->add_option("--config", config_path, "configuration JSON")->required();
  jump->add_option("--n", jump_n, "sphere dimension (default: from config)");
  jump->add_option("--eps", eps_str, "approximation tolerance r/s");
  jump->add_option("--nbound", nbound_str, "largest N scanned (integer or 10^k)");
  jump->add_flag("--full-window", full_window, "verify every iterate below and above the window");

  // eliminate
  auto* elim = app.add_subcommand("eliminate", "try to rule out a two-geodesic configuration on S^3");
  std::string c1_path, c2_path;
  EliminateOptions eopt;
  std::string elim_eps, elim_nbound;
  bool no_align = false;
  elim->add_option("--c1", c1_path, "first geodesic model JSON")->required();
  elim->add_option("--c2", c2_path, "second geodesic model JSON")->required();
  elim->add_option("--k-cap", eopt.k_cap, "cap on interior type numbers")->check(CLI::Range(0L, 16L));
  elim->add_option("--eps", elim_eps, "jump tolerance r/s");
  elim->add_option("--nbound", elim_nbound, "largest N scanned");
  elim->add_option("--max-certificates", eopt.max_certificates, "certificates analysed before giving up");
  elim->add_flag("--allow-any-c1", eopt.allow_any_c1, "accept a first geodesic of any shape");
  elim->add_flag("--no-align", no_align, "do not require i+nu(c1^{2m}) = 2N+2");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "eliminate over a grid of second geodesics");
  std::string grid_path;
  unsigned jobs = 1;
  bool details = false;
  sweep_cmd->add_option("--grid", grid_path, "grid TOML")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  sweep_cmd->add_flag("--details", details, "include every cell's report");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a model or configuration");
  validate_cmd->add_option("--model", model_path, "model JSON");
  validate_cmd->add_option("--config", config_path, "configuration JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kError;
  }

  Run run;
  run.manifest.command = joined(argc, argv);
  try {
    if (*iterate) {
      GeodesicModel g = io::model_from(run.load_json(model_path));
      emit(run, common, io::to_json(index_profile(g, mmax)));
      return kOk;
    }
    if (*betti_cmd) {
      if (alt) {
        emit(run, common, {{"n", n}, {"q_max", qmax}, {"alternating_sum", io::to_json(alternating_sum(n, qmax))}});
        return kOk;
      }
      json table = json::object();
      for (const auto& [q, b] : betti_table(n, qmax)) table[std::to_string(q)] = b;
      emit(run, common, table);
      return kOk;
    }
    if (*identity) {
      io::Config cfg = io::config_from(run.load_json(config_path));
      for (const auto& dg : cfg.geodesics) {
        auto errs = check_types(dg);
        if (!errs.empty()) throw io::FormatError("inadmissible type numbers: " + errs.front());
      }
      emit(run, common, io::to_json(mean_index_identity(cfg.geodesics, cfg.n)));
      return kOk;
    }
    if (*morse) {
      io::Config cfg = io::config_from(run.load_json(config_path));
      auto windows = io::windows_from(run.load_json(window_path));
      MorseReport rep = morse_inequalities(cfg.geodesics, cfg.n, morse_qmax, windows);
      emit(run, common, io::to_json(rep));
      return rep.first_violation ? kNegative : kOk;
    }
    if (*jump) {
      io::Config cfg = io::config_from(run.load_json(config_path));
      const int dim = jump_n ? jump_n : cfg.n;
      JumpOptions jo;
      if (!eps_str.empty()) jo.eps = io::rat_from(json(eps_str));
      jo.N_bound = parse_int_arg(nbound_str, "--nbound");
      for (const auto& dg : cfg.geodesics)
        if (!dg.types.by_class.empty()) jo.chi_hats.push_back(average_euler(dg));
      if (jo.chi_hats.size() != cfg.geodesics.size()) jo.chi_hats.clear();
      const auto models = cfg.models();
      JumpSearch js = find_jump(models, dim, jo);
      json result = {{"found", js.cert.has_value()},
                     {"stats",
                      {{"lattice_points", js.stats.lattice_points},
                       {"approx_hits", js.stats.approx_hits},
                       {"exact_hits", js.stats.exact_hits},
                       {"verification_rejects", js.stats.verification_rejects},
                       {"undecided", js.stats.undecided}}},
                     {"warnings", js.warnings}};
      if (js.cert) {
        result["certificate"] = io::to_json(*js.cert);
        result["verification"] = io::to_json(verify_jump(models, dim, *js.cert, full_window));
      }
      emit(run, common, result);
      return js.cert ? kOk : kNegative;
    }
    if (*elim) {
      GeodesicModel c1 = io::model_from(run.load_json(c1_path));
      GeodesicModel c2 = io::model_from(run.load_json(c2_path));
      if (!elim_eps.empty()) eopt.eps = io::rat_from(json(elim_eps));
      if (!elim_nbound.empty()) eopt.N_bound = parse_int_arg(elim_nbound, "--nbound");
      eopt.align_c1_top = !no_align;
      EliminationReport rep = eliminate(c1, c2, eopt);
      emit(run, common, {{"c1", io::to_json(c1)}, {"c2", io::to_json(c2)}, {"report", io::to_json(rep)}});
      return rep.status == Outcome::Eliminated ? kOk : kNegative;
    }
    if (*sweep_cmd) {
      SweepGrid grid = io::grid_from_toml(run.load_text(grid_path));
      grid.jobs = jobs;
      SweepSummary s = sweep(grid);
      emit(run, common, io::to_json(s, details));
      return s.not_eliminated == 0 && s.errors == 0 ? kOk : kNegative;
    }
    if (*validate_cmd) {
      if (model_path.empty() == config_path.empty()) throw io::FormatError("validate needs exactly one of --model, --config");
      std::vector<std::pair<std::string, std::vector<std::string>>> found;
      auto check_model = [&](const GeodesicModel& g, const std::string& tag) {
        auto errs = validate(g.decomposition);
        if (errs.empty()) {
          ParityResult p = parity_check(g);
          if (!p.ok) errs.push_back(p.message);
        }
        found.emplace_back(tag, errs);
      };
      if (!model_path.empty()) {
        check_model(io::model_from(run.load_json(model_path)), "model");
      } else {
        io::Config cfg = io::config_from(run.load_json(config_path));
        for (std::size_t j = 0; j < cfg.geodesics.size(); ++j) {
          check_model(cfg.geodesics[j].model, "geodesic " + std::to_string(j + 1));
          if (found.back().second.empty()) {
            auto terrs = check_types(cfg.geodesics[j]);
            found.back().second.insert(found.back().second.end(), terrs.begin(), terrs.end());
          }
        }
      }
      json violations = json::array();
      for (const auto& [tag, errs] : found)
        for (const auto& e : errs) violations.push_back(tag + ": " + e);
      emit(run, common, {{"valid", violations.empty()}, {"violations", violations}});
      for (const auto& v : violations) std::cerr << v.get<std::string>() << "\n";
      return violations.empty() ? kOk : kError;
    }
  } catch (const std::exception& e) {
    std::cerr << "geodex: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
