// wwm: phase-space quantum mechanics toolbox
//
// Subcommands: wigner, cross-wigner, ambiguity, weak-value, rho, reconstruct,
// mccoy, verify.  Exit codes: 0 ok, 1 verification failure, 2 config/input
// error, 3 numeric precondition failure, 4 orthogonal states.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "wwm/io.hpp"
#include "wwm/reconstruction.hpp"
#include "wwm/states.hpp"
#include "wwm/verify.hpp"
#include "wwm/weak_values.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::string grid_spec = "256,20.0";
  double hbar = 1.0;

  wwm::SpatialGrid grid() const {
    int n = 0;
    double extent = 0.0;
    if (std::sscanf(grid_spec.c_str(), "%d,%lf", &n, &extent) != 2)
      wwm::fail(wwm::Err::ConfigError, "--grid expects 'N,extent'");
    return wwm::make_grid(n, extent, hbar);
  }
};

int exit_code_for(const wwm::Error& e) {
  switch (e.code()) {
    case wwm::Err::ConfigError:
    case wwm::Err::IoError: return 2;
    case wwm::Err::OrthogonalStates:
    case wwm::Err::OrthogonalAuxiliary: return 4;
    default: return 3;
  }
}

json weak_value_json(const wwm::WeakValueResult& r) {
  json j;
  j["re"] = r.re();
  j["im"] = r.im();
  j["overlap_re"] = r.overlap.real();
  j["overlap_im"] = r.overlap.imag();
  j["route"] = wwm::to_string(r.route);
  if (r.diverged) j["diverged"] = true;
  return j;
}

void write_field_outputs(const wwm::PhaseSpaceFunction& f, const std::string& out,
                         const std::string& plot, const std::string& title) {
  wwm::save_phase_space_csv(f, out);
  if (!plot.empty()) wwm::atomic_write(plot, wwm::gnuplot_heatmap_script(out, title));
}

void add_noise(wwm::PhaseSpaceFunction& f, double sigma, unsigned long long seed) {
  if (sigma <= 0.0) return;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);
  for (int i = 0; i < f.x_axis.count; ++i)
    for (int k = 0; k < f.p_axis.count; ++k)
      f.values(i, k) += wwm::cd(gauss(rng), gauss(rng));
}

json reconstruction_json(const wwm::ReconstructionReport& rep, const std::string& state_csv) {
  json j;
  j["method"] = rep.method;
  j["fidelity"] = rep.fidelity;
  j["global_phase_re"] = rep.global_phase.real();
  j["global_phase_im"] = rep.global_phase.imag();
  j["up_to_constant"] = rep.up_to_constant;
  if (state_csv.empty())
    j["state_csv_inline"] = wwm::wavefunction_csv(rep.reconstructed);
  else
    j["state_csv"] = state_csv;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wwm: Wigner / weak-value / reconstruction toolbox"};
  app.set_config("--config", "", "Read options from an INI/TOML config file");

  GlobalOptions g;
  app.add_option("--grid", g.grid_spec, "Grid as 'N,extent' (default 256,20.0)")
      ->capture_default_str();
  app.add_option("--hbar", g.hbar, "Planck constant (default 1.0, env WWM_HBAR)")
      ->envname("WWM_HBAR")
      ->capture_default_str();

  app.require_subcommand(1);

  // ---- field commands -------------------------------------------------
  struct FieldCmd {
    std::string pre, post, out = "out.csv", plot;
  };

  auto add_field_options = [](CLI::App* cmd, FieldCmd& fc, bool two_states) {
    cmd->add_option("--pre", fc.pre, "Pre-selected state spec (e.g. hermite:0)")->required();
    if (two_states)
      cmd->add_option("--post", fc.post, "Post-selected state spec")->required();
    cmd->add_option("-o,--output", fc.out, "Output CSV path")->capture_default_str();
    cmd->add_option("--plot", fc.plot, "Also emit a gnuplot heatmap script at this path");
  };

  FieldCmd wig_fc;
  CLI::App* wig = app.add_subcommand("wigner", "Wigner distribution of a state");
  add_field_options(wig, wig_fc, false);

  FieldCmd cw_fc;
  CLI::App* cw = app.add_subcommand("cross-wigner", "Cross-Wigner transform of a state pair");
  add_field_options(cw, cw_fc, true);

  FieldCmd amb_fc;
  CLI::App* amb = app.add_subcommand("ambiguity", "Cross-ambiguity function of a state pair");
  add_field_options(amb, amb_fc, true);

  FieldCmd rho_fc;
  bool rho_force = false;
  CLI::App* rho_cmd = app.add_subcommand("rho", "Complex quasi-probability distribution");
  add_field_options(rho_cmd, rho_fc, true);
  rho_cmd->add_flag("--force", rho_force, "Proceed below the orthogonality guard");

  // ---- weak-value ------------------------------------------------------
  struct {
    std::string pre, post, symbol = "H", route = "braket", out;
    bool all_routes = false, naive = false, force = false;
  } wv;
  CLI::App* wvc = app.add_subcommand("weak-value", "Weak value of an observable");
  wvc->add_option("--pre", wv.pre, "Pre-selected state spec")->required();
  wvc->add_option("--post", wv.post, "Post-selected state spec")->required();
  wvc->add_option("--symbol", wv.symbol, "Weyl symbol (text form or 1,x,p,xp,H,H2)")
      ->capture_default_str();
  wvc->add_option("--route", wv.route, "braket | phase-space | gr | heisenberg")
      ->capture_default_str();
  wvc->add_flag("--all-routes", wv.all_routes, "Emit the 4-route comparison table");
  wvc->add_flag("--naive", wv.naive,
                "Negative control: apply the phase-space formula to the H2 symbol as if it "
                "were quantization-scheme free");
  wvc->add_flag("--force", wv.force, "Proceed below the orthogonality guard");
  wvc->add_option("-o,--output", wv.out, "Write JSON here instead of stdout");

  // ---- reconstruct -----------------------------------------------------
  struct {
    std::string method = "lundeen", pre, post, lambda = "hermite:0", out = "report.json";
    std::string state_csv;
    double p0 = 0.0, x_ref = 0.0, noise = 0.0;
    unsigned long long seed = 1;
    bool unknown_overlap = false;
  } rc;
  CLI::App* rcc = app.add_subcommand("reconstruct", "Recover the pre-selected wavefunction");
  rcc->add_option("--method", rc.method, "lundeen | inversion | gr")->capture_default_str();
  rcc->add_option("--pre", rc.pre, "True pre-selected state spec")->required();
  rcc->add_option("--post", rc.post, "Post-selected state spec (inversion/gr)");
  rcc->add_option("--lambda", rc.lambda, "Auxiliary state spec (gr)")->capture_default_str();
  rcc->add_option("--p0", rc.p0, "Momentum post-selection (lundeen)");
  rcc->add_option("--x-ref", rc.x_ref, "Reference position (inversion)");
  rcc->add_option("--noise", rc.noise, "Additive Gaussian noise sigma on the Wigner data");
  rcc->add_option("--seed", rc.seed, "Noise RNG seed")->capture_default_str();
  rcc->add_flag("--unknown-overlap", rc.unknown_overlap,
                "Do not use <phi|lambda>; report up to a constant (gr)");
  rcc->add_option("-o,--output", rc.out, "Report JSON path")->capture_default_str();
  rcc->add_option("--state-csv", rc.state_csv,
                  "Write the reconstructed state CSV here (otherwise inlined in the JSON)");

  // ---- mccoy -----------------------------------------------------------
  struct {
    int r = 1, s = 1;
    std::string out;
  } mc;
  CLI::App* mcc = app.add_subcommand("mccoy", "Weyl ordering of x^r p^s and its normal form");
  mcc->add_option("r", mc.r, "x power")->required();
  mcc->add_option("s", mc.s, "p power")->required();
  mcc->add_option("-o,--output", mc.out, "Write the normal form here");

  // ---- verify ----------------------------------------------------------
  struct {
    bool quick = false;
    int n = 256;
    double extent = 20.0;
    std::string report = "wwm_verify_report.xml";
  } vf;
  CLI::App* vfc = app.add_subcommand("verify", "Run the full invariant suite");
  vfc->add_flag("--quick", vf.quick, "N=64 with 100x relaxed tolerances");
  vfc->add_option("--n", vf.n, "Grid points")->capture_default_str();
  vfc->add_option("--extent", vf.extent, "Grid extent")->capture_default_str();
  vfc->add_option("--report", vf.report, "JUnit-style XML report path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : 2;
  }

  try {
    wwm::SpatialGrid grid = g.grid();

    if (*wig) {
      wwm::WaveFunction psi = wwm::parse_state_spec(wig_fc.pre).build(grid);
      write_field_outputs(wwm::wigner(psi), wig_fc.out, wig_fc.plot, "Wigner distribution");
    } else if (*cw) {
      wwm::WaveFunction psi = wwm::parse_state_spec(cw_fc.pre).build(grid);
      wwm::WaveFunction phi = wwm::parse_state_spec(cw_fc.post).build(grid);
      write_field_outputs(wwm::cross_wigner(psi, phi), cw_fc.out, cw_fc.plot, "Cross-Wigner");
    } else if (*amb) {
      wwm::WaveFunction psi = wwm::parse_state_spec(amb_fc.pre).build(grid);
      wwm::WaveFunction phi = wwm::parse_state_spec(amb_fc.post).build(grid);
      write_field_outputs(wwm::cross_ambiguity(psi, phi), amb_fc.out, amb_fc.plot,
                          "Cross-ambiguity");
    } else if (*rho_cmd) {
      wwm::WaveFunction psi = wwm::parse_state_spec(rho_fc.pre).build(grid);
      wwm::WaveFunction phi = wwm::parse_state_spec(rho_fc.post).build(grid);
      wwm::PhaseSpaceFunction r = wwm::rho(psi, phi, rho_force);
      write_field_outputs(r, rho_fc.out, rho_fc.plot, "Complex distribution rho");
      wwm::cd total = wwm::integrate(r);
      std::cout << "integral_re=" << wwm::format_double(total.real())
                << " integral_im=" << wwm::format_double(total.imag()) << "\n";
    } else if (*wvc) {
      wwm::WaveFunction psi = wwm::parse_state_spec(wv.pre).build(grid);
      wwm::WaveFunction phi = wwm::parse_state_spec(wv.post).build(grid);
      wwm::PolynomialSymbol sym = wwm::parse_symbol(wv.symbol, grid.hbar);
      json out;
      if (wv.naive) {
        if (wv.symbol != "H2")
          wwm::fail(wwm::Err::ConfigError, "--naive is the H2 negative control only");
        wwm::WeakValueResult naive = wwm::weak_value_phase_space(sym, psi, phi, wv.force);
        wwm::LinearOperator h = wwm::weyl_quantize(wwm::harmonic_symbol(), grid);
        wwm::LinearOperator h_sq = wwm::compose(h, h);
        wwm::WeakValueResult correct = wwm::weak_value_braket(h_sq, psi, phi, wv.force);
        out = weak_value_json(naive);
        out["correct_re"] = correct.re();
        out["correct_im"] = correct.im();
        out["discrepancy_re"] = naive.re() - correct.re();
        out["discrepancy_im"] = naive.im() - correct.im();
      } else if (wv.all_routes) {
        out = json::array();
        out.push_back(weak_value_json(
            wwm::weak_value_braket(wwm::weyl_quantize(sym, grid), psi, phi, wv.force)));
        out.push_back(weak_value_json(wwm::weak_value_phase_space(sym, psi, phi, wv.force)));
        out.push_back(weak_value_json(wwm::weak_value_via_gr(sym, psi, phi, wv.force)));
        out.push_back(weak_value_json(wwm::weak_value_via_heisenberg(sym, psi, phi, wv.force)));
      } else {
        wwm::WeakValueResult r;
        if (wv.route == "braket")
          r = wwm::weak_value_braket(wwm::weyl_quantize(sym, grid), psi, phi, wv.force);
        else if (wv.route == "phase-space")
          r = wwm::weak_value_phase_space(sym, psi, phi, wv.force);
        else if (wv.route == "gr")
          r = wwm::weak_value_via_gr(sym, psi, phi, wv.force);
        else if (wv.route == "heisenberg")
          r = wwm::weak_value_via_heisenberg(sym, psi, phi, wv.force);
        else
          wwm::fail(wwm::Err::ConfigError, "unknown route '" + wv.route + "'");
        out = weak_value_json(r);
      }
      std::string text = out.dump(2) + "\n";
      if (wv.out.empty())
        std::cout << text;
      else
        wwm::atomic_write(wv.out, text);
    } else if (*rcc) {
      wwm::WaveFunction truth = wwm::parse_state_spec(rc.pre).build(grid);
      wwm::ReconstructionReport rep;
      if (rc.method == "lundeen") {
        auto oracle = wwm::make_lundeen_oracle(truth, rc.p0);
        if (rc.noise > 0.0) {
          std::mt19937_64 rng(rc.seed);
          auto noisy = std::make_shared<std::vector<wwm::cd>>();
          std::normal_distribution<double> gauss(0.0, rc.noise);
          for (int j = 0; j < grid.n; ++j)
            noisy->push_back(oracle(j) + wwm::cd(gauss(rng), gauss(rng)));
          oracle = [noisy](int j) { return (*noisy)[j]; };
        }
        rep = wwm::lundeen_reconstruct(oracle, rc.p0, grid, truth);
      } else {
        if (rc.post.empty())
          wwm::fail(wwm::Err::ConfigError, "--post is required for inversion/gr methods");
        wwm::WaveFunction phi = wwm::parse_state_spec(rc.post).build(grid);
        wwm::PhaseSpaceFunction w = wwm::cross_wigner(truth, phi);
        add_noise(w, rc.noise, rc.seed);
        if (rc.method == "inversion") {
          rep = wwm::inversion_reconstruct(w, rc.x_ref, phi, truth);
        } else if (rc.method == "gr") {
          wwm::WaveFunction lambda = wwm::parse_state_spec(rc.lambda).build(grid);
          std::optional<wwm::cd> overlap;
          if (!rc.unknown_overlap) overlap = wwm::inner_product(phi, lambda);
          rep = wwm::gr_reconstruct(w, lambda, overlap, truth);
        } else {
          wwm::fail(wwm::Err::ConfigError, "unknown method '" + rc.method + "'");
        }
      }
      if (!rc.state_csv.empty()) wwm::save_wavefunction_csv(rep.reconstructed, rc.state_csv);
      wwm::atomic_write(rc.out, reconstruction_json(rep, rc.state_csv).dump(2) + "\n");
      std::cout << "method=" << rep.method
                << " fidelity=" << wwm::format_double(rep.fidelity) << "\n";
    } else if (*mcc) {
      wwm::OrderedOperatorExpr expr = wwm::mccoy_order(mc.r, mc.s);
      std::string text = wwm::to_string(expr.normal_form) + "\n";
      std::cout << "x^" << mc.r << " p^" << mc.s << " -> " << text;
      if (!mc.out.empty()) wwm::atomic_write(mc.out, text);
    } else if (*vfc) {
      wwm::VerifyOptions opt;
      if (vf.quick) {
        opt = wwm::VerifyOptions::quick_mode();
      } else {
        opt.n = vf.n;
        opt.extent = vf.extent;
      }
      opt.hbar = g.hbar;
      auto results = wwm::run_verification(opt);
      int failures = 0;
      for (const auto& r : results) {
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.module << "." << r.name
                  << " measured=" << wwm::format_double(r.measured)
                  << " tol=" << wwm::format_double(r.tolerance) << "\n";
      }
      wwm::atomic_write(vf.report, wwm::junit_report(results));
      std::cout << (failures == 0 ? "VERIFY OK" : "VERIFY FAILED") << " (" << results.size()
                << " checks, " << failures << " failures)\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const wwm::Error& e) {
    std::cerr << "error [" << wwm::to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
