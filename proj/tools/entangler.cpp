// entangler: cavity-fiber ring couplings, three-spin dynamics,
// entanglement curves, and the remote Bell-state protocol, as CSV.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entangler/config.hpp"
#include "entangler/csv.hpp"
#include "entangler/dynamics.hpp"
#include "entangler/entanglement.hpp"
#include "entangler/errors.hpp"
#include "entangler/kernels.hpp"
#include "entangler/model.hpp"
#include "entangler/protocol.hpp"

namespace {

namespace fs = std::filesystem;
using namespace entangler;

constexpr double kPi = 3.141592653589793;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return format_number(v); }

RunConfig load_config(const std::string& path) {
  if (path.empty()) return parse_config("");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + p.string());
  return out;
}

void cmd_couplings(const RunConfig& cfg, const fs::path& dir) {
  const PhysicalParams p = apply_fiber_loss(cfg.physical);
  const CouplingSet c = derive_couplings(p);
  const RegimeReport r = validate_regime(p, c, cfg.thresholds);

  auto out = open_out(dir, "couplings.csv");
  out << csv_stamp(cfg.config_hash);
  out << "chi,m_re,m_im,w3_re,w3_im,"
         "alpha1_re,alpha1_im,alpha2_re,alpha2_im,alpha3_re,alpha3_im,"
         "j12,j23,j31,symmetric\n";
  out << num(c.chi) << ',' << num(c.m.real()) << ',' << num(c.m.imag()) << ','
      << num(c.w_cubed.real()) << ',' << num(c.w_cubed.imag());
  for (const auto& a : c.alpha)
    out << ',' << num(a.real()) << ',' << num(a.imag());
  for (double j : c.j) out << ',' << num(j);
  out << ',' << (c.symmetric ? 1 : 0) << '\n';

  std::cout << "chi = " << num(c.chi) << ", J = [" << num(c.j[0]) << ", "
            << num(c.j[1]) << ", " << num(c.j[2]) << "]"
            << (c.symmetric ? " (symmetric)" : "") << '\n';
  auto flag = [](bool ok) { return ok ? "ok" : "WARN"; };
  std::cout << "regime: delta/g = " << num(r.delta_over_g) << " ["
            << flag(r.delta_large_ok) << "], kappa/g = " << num(r.kappa_over_g)
            << " [" << flag(r.kappa_large_ok) << "], |delta-kappa|/kappa = "
            << num(r.detuning_mismatch) << " [" << flag(r.delta_kappa_close_ok)
            << "], Gamma/min|J| = " << num(r.gamma_over_min_j) << " ["
            << flag(r.adiabatic_ok) << "]\n";
}

void cmd_evolve(const RunConfig& cfg, const fs::path& dir) {
  const std::vector<double> grid = cfg.tau_grid();
  const double gamma = cfg.gamma_list.front();

  auto out = open_out(dir, "evolve.csv");
  out << csv_stamp(cfg.config_hash);
  out << "tau_over_pi";
  for (int i = 1; i <= 6; ++i)
    out << ",c" << i << "_re,c" << i << "_im";
  out << ",norm_sq\n";

  std::vector<SubspaceState> states;
  if (gamma == 0.0) {
    const std::size_t n = grid.size();
    std::vector<double> c1(n), c2i(n), c3(n), c4i(n);
    kernels::closed_form_grid(grid.data(), n, c1.data(), c2i.data(), c3.data(),
                              c4i.data());
    states.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      states[i].c << c1[i], cdouble(0, c2i[i]), c3[i], cdouble(0, c4i[i]),
          c3[i], cdouble(0, c2i[i]);
    }
  } else {
    states = evolve_dissipative_grid(SubspaceState::basis_state(0), grid, gamma);
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << num(grid[i] / kPi);
    for (int k = 0; k < 6; ++k)
      out << ',' << num(states[i].c(k).real()) << ','
          << num(states[i].c(k).imag());
    out << ',' << num(states[i].norm_sq()) << '\n';
  }
}

void cmd_fig2(const RunConfig& cfg, const fs::path& dir) {
  const std::vector<double> grid = cfg.tau_grid();
  const auto reports = entanglement_timeseries(grid, 0.0);

  auto out = open_out(dir, "fig2.csv");
  out << csv_stamp(cfg.config_hash);
  out << "tau_over_pi,C123,tangle_2_rest,C12,C23\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = reports[i];
    out << num(grid[i] / kPi) << ',' << num(r.c_three[0]) << ','
        << num(r.tangle_one_rest[1]) << ',' << num(r.c_pair[0]) << ','
        << num(r.c_pair[2]) << '\n';
  }
}

void cmd_fig3(const RunConfig& cfg, const fs::path& dir) {
  const std::vector<double> grid = cfg.tau_grid();

  std::vector<std::vector<CurvePoint>> curves;
  for (double g : cfg.gamma_list)
    curves.push_back(success_probability_curve(grid, g));

  auto out = open_out(dir, "fig3.csv");
  out << csv_stamp(cfg.config_hash);
  out << "tau_over_pi";
  for (double g : cfg.gamma_list)
    out << ",P_gamma_" << num(g) << ",Pcond_gamma_" << num(g);
  out << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << num(grid[i] / kPi);
    for (const auto& curve : curves)
      out << ',' << num(curve[i].p_joint) << ',' << num(curve[i].p_conditioned);
    out << '\n';
  }
  for (std::size_t k = 0; k < cfg.gamma_list.size(); ++k) {
    const auto [tau_star, p_star] = find_peak(grid, cfg.gamma_list[k]);
    out << "# peak gamma=" << num(cfg.gamma_list[k])
        << " tau_over_pi=" << num(tau_star / kPi) << " P=" << num(p_star)
        << '\n';
  }
}

void cmd_protocol(const RunConfig& cfg, const fs::path& dir) {
  const PhysicalParams p = apply_fiber_loss(cfg.physical);
  const CouplingSet c = derive_couplings(p);
  const RegimeReport r = validate_regime(p, c, cfg.thresholds);

  if (!r.delta_large_ok)
    std::cout << "WARN delta/g = " << num(r.delta_over_g) << " below threshold\n";
  if (!r.kappa_large_ok)
    std::cout << "WARN kappa/g = " << num(r.kappa_over_g) << " below threshold\n";
  if (!r.delta_kappa_close_ok)
    std::cout << "WARN |delta-kappa|/kappa = " << num(r.detuning_mismatch)
              << " above threshold\n";
  if (!r.adiabatic_ok)
    std::cout << "WARN Gamma/min|J| = " << num(r.gamma_over_min_j)
              << " above threshold\n";

  auto out = open_out(dir, "protocol.csv");
  out << csv_stamp(cfg.config_hash);
  out << "gamma_over_laser,turn_off_tau_over_pi,p_no_decay,p_ground,"
         "p_excited,p_success,fidelity_bell,fidelity_recover\n";

  for (double g : cfg.gamma_list) {
    const ProtocolOutcome o = run_protocol(cfg.tau_off, g);
    out << num(g) << ',' << num(o.turn_off_tau / kPi) << ','
        << num(o.p_no_decay) << ',' << num(o.p_ground) << ','
        << num(o.p_excited) << ',' << num(o.p_success) << ','
        << num(o.fidelity_bell) << ',' << num(o.fidelity_recover) << '\n';

    std::cout << "gamma/Gamma = " << num(g) << ": turn-off at tau = "
              << num(o.turn_off_tau / kPi) << " pi\n"
              << "  p_no_decay = " << num(o.p_no_decay)
              << ", p_ground = " << num(o.p_ground)
              << ", p_success = " << num(o.p_success) << '\n'
              << "  fidelity_bell = " << num(o.fidelity_bell)
              << ", failure branch fidelity(|egg>) = "
              << num(o.fidelity_recover) << '\n';
  }
}

void cmd_sweep(const RunConfig& cfg, const fs::path& dir) {
  auto out = open_out(dir, "sweep.csv");
  out << csv_stamp(cfg.config_hash);
  out << "gamma_over_laser,tau_star_over_pi,P_star,P_star_conditioned\n";
  const std::vector<double> grid = cfg.tau_grid();
  for (double g : cfg.gamma_list) {
    const auto [tau_star, p_star] = find_peak(grid, g);
    double p_cond = p_star;
    if (g > 0.0) {
      const SubspaceState s =
          evolve_dissipative(SubspaceState::basis_state(0), tau_star, g);
      p_cond = p_star / s.norm_sq();
    }
    out << num(g) << ',' << num(tau_star / kPi) << ',' << num(p_star) << ','
        << num(p_cond) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cavity-fiber Ising-ring entanglement simulator"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  app.add_option("--config", config_path, "Config file (key = value format)");
  app.add_option("--out", out_dir, "Output directory (overrides config)");

  auto* sc_couplings = app.add_subcommand("couplings", "Effective couplings and regime report");
  auto* sc_evolve = app.add_subcommand("evolve", "Subspace coefficients over the tau grid");
  auto* sc_fig2 = app.add_subcommand("fig2", "Entanglement measures vs time (CSV)");
  auto* sc_fig3 = app.add_subcommand("fig3", "Bell success probability vs time (CSV)");
  auto* sc_protocol = app.add_subcommand("protocol", "Turn-off-and-measure protocol report");
  auto* sc_sweep = app.add_subcommand("sweep", "Peak success probability per decay rate");

  // --config/--out may follow the subcommand name on the command line.
  for (auto* sc : {sc_couplings, sc_evolve, sc_fig2, sc_fig3, sc_protocol,
                   sc_sweep})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    const RunConfig cfg = load_config(config_path);
    const fs::path dir = out_dir.empty() ? fs::path(cfg.output_path)
                                         : fs::path(out_dir);

    if (sc_couplings->parsed()) cmd_couplings(cfg, dir);
    else if (sc_evolve->parsed()) cmd_evolve(cfg, dir);
    else if (sc_fig2->parsed()) cmd_fig2(cfg, dir);
    else if (sc_fig3->parsed()) cmd_fig3(cfg, dir);
    else if (sc_protocol->parsed()) cmd_protocol(cfg, dir);
    else if (sc_sweep->parsed()) cmd_sweep(cfg, dir);
    else {
      // No subcommand: produce everything the config's emit set asks for.
      for (Emit e : cfg.emit) {
        switch (e) {
          case Emit::kCouplings: cmd_couplings(cfg, dir); break;
          case Emit::kEvolution: cmd_evolve(cfg, dir); break;
          case Emit::kEntanglement:
          case Emit::kFig2: cmd_fig2(cfg, dir); break;
          case Emit::kProtocol: cmd_protocol(cfg, dir); break;
          case Emit::kFig3: cmd_fig3(cfg, dir); break;
        }
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
