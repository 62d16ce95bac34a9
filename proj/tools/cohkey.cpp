#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohkey/entanglement.hpp"
#include "cohkey/errors.hpp"
#include "cohkey/finegrained.hpp"
#include "cohkey/keyrate.hpp"
#include "cohkey/mismatch.hpp"
#include "cohkey/numfmt.hpp"
#include "cohkey/qecsim.hpp"
#include "cohkey/qstate.hpp"
#include "cohkey/state_io.hpp"
#include "cohkey/svg.hpp"
#include "cohkey/sweep.hpp"

namespace {

using namespace cohkey;

void print_value(const std::string& key, double v) {
  std::cout << key << ": " << format_sig9(v) << "\n";
}

void print_report(const KeyRateReport& r) {
  std::cout << "protocol: " << r.protocol << "\n";
  print_value("rate", r.rate);
  print_value("coherence_term", r.coherence_term);
  print_value("reconciliation_term", r.reconciliation_term);
  std::cout << "secure: " << (r.secure ? "true" : "false") << "\n";
  if (r.witness) {
    ErrorRates e = error_rates(*r.witness);
    print_value("witness_e_x", e.e_x);
    print_value("witness_e_y", e.e_y);
    print_value("witness_e_z", e.e_z);
  }
}

void maybe_write_csv(const std::string& path, const KeyRateReport& r) {
  if (path.empty()) return;
  CsvTable t;
  t.header = {"rate", "coherence_term", "reconciliation_term"};
  t.rows = {{r.rate, r.coherence_term, r.reconciliation_term}};
  t.write(path);
  std::cout << "wrote: " << path << "\n";
}

void emit_sweep(const CsvTable& table, const std::string& out, const std::string& svg,
                const std::string& title) {
  if (out.empty()) {
    std::cout << table.to_string();
  } else {
    table.write(out);
    std::cout << "rows: " << table.rows.size() << "\n";
    std::cout << "wrote: " << out << "\n";
  }
  if (!svg.empty()) {
    std::ofstream f(svg, std::ios::binary);
    if (!f) throw ParseError(svg + ": cannot open for writing");
    f << emit_line_chart(table, title);
    if (!f) throw ParseError(svg + ": write failed");
    std::cout << "wrote: " << svg << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Coherence-based secret key rates for entanglement-based QKD"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps and searches")
      ->envname("COHERENT_KEYRATE_JOBS")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  // ---- bb84 ----
  auto* bb84 = app.add_subcommand("bb84", "standard BB84 rate from e_b, e_p");
  double bb84_eb = 0.0;
  double bb84_ep = 0.0;
  std::string bb84_csv;
  bb84->add_option("--eb", bb84_eb, "bit error rate")->required();
  bb84->add_option("--ep", bb84_ep, "phase error rate")->required();
  bb84->add_option("--csv", bb84_csv, "write a one-row CSV here");
  bb84->callback([&] {
    KeyRateReport r = bb84_keyrate(bb84_eb, bb84_ep);
    print_report(r);
    maybe_write_csv(bb84_csv, r);
  });

  // ---- bb84-opt ----
  auto* bopt = app.add_subcommand("bb84-opt", "fine-grained BB84 rate from Z-diagonal stats");
  FineGrainedStats bopt_stats;
  std::string bopt_csv;
  bopt->add_option("--m00", bopt_stats.m00, "P(00) in Z (x) Z")->required();
  bopt->add_option("--m11", bopt_stats.m11, "P(01) in Z (x) Z")->required();
  bopt->add_option("--m22", bopt_stats.m22, "P(10) in Z (x) Z")->required();
  bopt->add_option("--m33", bopt_stats.m33, "P(11) in Z (x) Z")->required();
  bopt->add_option("--ep", bopt_stats.e_p, "phase error rate")->required();
  bopt->add_option("--csv", bopt_csv, "write a one-row CSV here");
  bopt->callback([&] {
    Problem1Solution sol = solve_problem1(bopt_stats);
    KeyRateReport r = bb84_opt_keyrate(bopt_stats);
    print_report(r);
    std::cout << "method: "
              << (sol.method == Problem1Solution::Method::closed_form ? "closed_form" : "numeric")
              << "\n";
    print_value("a_bar", sol.a_bar);
    print_value("b_bar", sol.b_bar);
    maybe_write_csv(bopt_csv, r);
  });

  // ---- six ----
  auto* six = app.add_subcommand("six", "standard six-state rate from e_x, e_y, e_z");
  double six_ex = 0.0;
  double six_ey = 0.0;
  double six_ez = 0.0;
  std::string six_csv;
  six->add_option("--ex", six_ex, "X error rate")->required();
  six->add_option("--ey", six_ey, "Y error rate")->required();
  six->add_option("--ez", six_ez, "Z error rate")->required();
  six->add_option("--csv", six_csv, "write a one-row CSV here");
  six->callback([&] {
    KeyRateReport r = sixstate_keyrate(six_ex, six_ey, six_ez);
    print_report(r);
    maybe_write_csv(six_csv, r);
  });

  // ---- six-opt ----
  auto* sopt = app.add_subcommand("six-opt", "fine-grained six-state rate");
  FineGrainedStats sopt_stats;
  double sopt_ex = 0.0;
  double sopt_ey = 0.0;
  std::string sopt_csv;
  sopt->add_option("--m00", sopt_stats.m00, "P(00) in Z (x) Z")->required();
  sopt->add_option("--m11", sopt_stats.m11, "P(01) in Z (x) Z")->required();
  sopt->add_option("--m22", sopt_stats.m22, "P(10) in Z (x) Z")->required();
  sopt->add_option("--m33", sopt_stats.m33, "P(11) in Z (x) Z")->required();
  sopt->add_option("--ex", sopt_ex, "X error rate")->required();
  sopt->add_option("--ey", sopt_ey, "Y error rate")->required();
  sopt->add_option("--csv", sopt_csv, "write a one-row CSV here");
  sopt->callback([&] {
    sopt_stats.e_p = sopt_ex;
    sopt_stats.e_x = sopt_ex;
    sopt_stats.e_y = sopt_ey;
    KeyRateReport r = sixstate_opt_keyrate(sopt_stats);
    print_report(r);
    maybe_write_csv(sopt_csv, r);
  });

  // ---- mismatch ----
  auto* mm = app.add_subcommand("mismatch", "symmetric-attack rates under efficiency mismatch");
  double mm_x = 0.0;
  double mm_eta0 = 0.0;
  double mm_eta1 = 0.0;
  double mm_ep = 0.0;
  double mm_eb = 0.0;
  std::string mm_csv;
  auto* mm_x_opt = mm->add_option("--x", mm_x, "mismatch ratio eta0/(eta0+eta1)");
  auto* mm_e0_opt = mm->add_option("--eta0", mm_eta0, "efficiency of detector 0");
  auto* mm_e1_opt = mm->add_option("--eta1", mm_eta1, "efficiency of detector 1");
  mm->add_option("--ep", mm_ep, "phase error rate")->required();
  mm->add_option("--eb", mm_eb, "bit error rate")->required();
  mm->add_option("--csv", mm_csv, "write a one-row CSV here");
  mm_x_opt->excludes(mm_e0_opt)->excludes(mm_e1_opt);
  mm_e0_opt->needs(mm_e1_opt);
  mm_e1_opt->needs(mm_e0_opt);
  mm->callback([&] {
    double x = mm_x;
    if (mm_e0_opt->count() > 0) {
      DetectorModel det{mm_eta0, mm_eta1};
      det.validate();
      x = det.x();
    } else if (mm_x_opt->count() == 0) {
      throw CLI::ValidationError("mismatch", "pass either --x or --eta0/--eta1");
    }
    KeyRateReport r = mismatch_keyrate(x, mm_ep, mm_eb);
    print_report(r);
    print_value("x", x);
    print_value("K1", discard_keyrate_k1(x, mm_ep, mm_eb));
    print_value("K2", koashi_keyrate_k2(x, mm_ep, mm_eb));
    maybe_write_csv(mm_csv, r);
  });

  // ---- sweep-alpha ----
  auto* swa = app.add_subcommand("sweep-alpha", "diagonal-unbalance sweep of the four rates");
  double swa_e = 0.03;
  double swa_min = 0.38;
  double swa_max = 0.62;
  std::size_t swa_steps = 25;
  std::string swa_out;
  std::string swa_svg;
  swa->add_option("--e", swa_e, "common error rate");
  swa->add_option("--alpha-min", swa_min, "sweep start");
  swa->add_option("--alpha-max", swa_max, "sweep stop");
  swa->add_option("--steps", swa_steps, "grid points");
  swa->add_option("--out", swa_out, "CSV output path (stdout when absent)");
  swa->add_option("--svg", swa_svg, "also render an SVG chart here");
  swa->callback([&] {
    SweepSpec spec;
    spec.variable = "alpha";
    spec.start = swa_min;
    spec.stop = swa_max;
    spec.steps = swa_steps;
    spec.fixed["e"] = swa_e;
    emit_sweep(run_alpha_sweep(spec, jobs), swa_out, swa_svg, "Key rates vs diagonal unbalance");
  });

  // ---- sweep-mismatch ----
  auto* swm = app.add_subcommand("sweep-mismatch", "efficiency-mismatch sweep of K, K1, K2");
  double swm_ep = 0.05;
  double swm_eb = 0.05;
  double swm_min = 0.01;
  double swm_max = 0.5;
  std::size_t swm_steps = 50;
  std::string swm_out;
  std::string swm_svg;
  swm->add_option("--ep", swm_ep, "phase error rate");
  swm->add_option("--eb", swm_eb, "bit error rate");
  swm->add_option("--x-min", swm_min, "sweep start");
  swm->add_option("--x-max", swm_max, "sweep stop");
  swm->add_option("--steps", swm_steps, "grid points");
  swm->add_option("--out", swm_out, "CSV output path (stdout when absent)");
  swm->add_option("--svg", swm_svg, "also render an SVG chart here");
  swm->callback([&] {
    SweepSpec spec;
    spec.variable = "x";
    spec.start = swm_min;
    spec.stop = swm_max;
    spec.steps = swm_steps;
    spec.fixed["ep"] = swm_ep;
    spec.fixed["eb"] = swm_eb;
    emit_sweep(run_mismatch_sweep(spec, jobs), swm_out, swm_svg,
               "Key rates vs detection mismatch");
  });

  // ---- analyze ----
  auto* an = app.add_subcommand("analyze", "full report for a density-matrix file");
  std::string an_file;
  double an_eta0 = 0.0;
  double an_eta1 = 0.0;
  std::size_t an_restarts = 32;
  an->add_option("state_file", an_file, "density matrix in dims/re/im text form")->required();
  auto* an_e0_opt = an->add_option("--eta0", an_eta0, "efficiency of detector 0");
  auto* an_e1_opt = an->add_option("--eta1", an_eta1, "efficiency of detector 1");
  an->add_option("--restarts", an_restarts, "random restarts for the basis search");
  an_e0_opt->needs(an_e1_opt);
  an_e1_opt->needs(an_e0_opt);
  an->callback([&] {
    TwoQubitState rho = read_state_file(an_file);
    ErrorRates e = error_rates(rho);
    print_value("e_x", e.e_x);
    print_value("e_y", e.e_y);
    print_value("e_z", e.e_z);

    Bits iec = binary_entropy(e.e_z);
    print_value("K_state", keyrate_of_state(rho, iec).rate);
    if (e.e_z <= 0.5 && e.e_x <= 0.5)
      print_value("K_bb84", bb84_keyrate(e.e_z, e.e_x).rate);
    else
      std::cout << "K_bb84: n/a\n";
    if (e.e_x <= 0.5 && e.e_y <= 0.5 && e.e_z <= 0.5)
      print_value("K_six", sixstate_keyrate(e.e_x, e.e_y, e.e_z).rate);
    else
      std::cout << "K_six: n/a\n";

    std::array<double, 4> d = rho.diagonal();
    FineGrainedStats stats;
    stats.m00 = d[0];
    stats.m11 = d[1];
    stats.m22 = d[2];
    stats.m33 = d[3];
    stats.e_p = e.e_x;
    stats.e_x = e.e_x;
    stats.e_y = e.e_y;
    print_value("K_bb84_opt", bb84_opt_keyrate(stats).rate);
    print_value("K_six_opt", sixstate_opt_keyrate(stats).rate);

    print_value("hashing_bound", hashing_bound(rho));
    print_value("dw_privacy", devetak_winter_privacy(rho));
    print_value("eof", entanglement_of_formation(rho));
    BasisSearchConfig cfg;
    cfg.restarts = an_restarts;
    cfg.jobs = jobs;
    print_value("K_max_bases", max_keyrate_over_bases(rho, cfg).rate);

    if (an_e0_opt->count() > 0) {
      DetectorModel det{an_eta0, an_eta1};
      det.validate();
      ObservedDiag obs_z = observed_diag(rho, BasisLabel::Z, det);
      ObservedDiag obs_x = observed_diag(rho, BasisLabel::X, det);
      double gamma = gamma_from_observed(obs_z, det);
      double gamma_prime = gamma_from_observed(obs_x, det);
      double e_pp = phase_error_double_prime(obs_x, det);
      print_value("gamma", gamma);
      print_value("gamma_prime", gamma_prime);
      print_value("e_p_double_prime", e_pp);
      print_value("e_p_prime", corrected_phase_error(gamma, e_pp, det));
      print_value("K_pipeline", mismatch_pipeline(rho, det).rate);
    }
  });

  // ---- qec-demo ----
  auto* qec = app.add_subcommand("qec-demo", "compare coherent and classical error correction");
  std::size_t qec_n = 3;
  std::string qec_hashing;
  double qec_eb = -1.0;
  std::vector<double> qec_p;
  std::string qec_state;
  qec->add_option("--n", qec_n, "EPR pairs per block");
  qec->add_option("--hashing", qec_hashing, "hashing matrix file (default: adjacent pairs)");
  auto* qec_eb_opt = qec->add_option("--eb", qec_eb, "bit-flip mixture weight");
  auto* qec_p_opt =
      qec->add_option("--p", qec_p, "four Bell weights p0 p1 p2 p3")->expected(4);
  auto* qec_state_opt = qec->add_option("--state", qec_state, "density matrix file");
  qec_eb_opt->excludes(qec_p_opt)->excludes(qec_state_opt);
  qec_p_opt->excludes(qec_state_opt);
  qec->callback([&] {
    TwoQubitState rho = [&] {
      if (qec_state_opt->count() > 0) return read_state_file(qec_state);
      if (qec_p_opt->count() > 0)
        return bell_diagonal(BellProbs{qec_p[0], qec_p[1], qec_p[2], qec_p[3]});
      double eb = qec_eb_opt->count() > 0 ? qec_eb : 0.1;
      return bell_diagonal(BellProbs{1.0 - eb, 0.0, eb, 0.0});
    }();
    HashingMatrix h = [&] {
      if (qec_hashing.empty()) return HashingMatrix::adjacent_pairs(qec_n);
      std::ifstream in(qec_hashing);
      if (!in) throw ParseError(qec_hashing + ": cannot open");
      std::ostringstream buf;
      buf << in.rdbuf();
      return HashingMatrix::parse(buf.str());
    }();
    KeyDistribution classical = classical_ec_run(rho, qec_n, h);
    KeyDistribution virt = virtual_qec_run(rho, qec_n, h);
    std::cout << "n: " << qec_n << "\n";
    std::cout << "syndrome_bits: " << h.rows << "\n";
    print_value("tv_distance", classical.total_variation(virt));
    print_value("residual_mismatch", classical.mismatch_probability());
    print_value("ec_cost", ec_cost(rho));
    print_value("h_eb", binary_entropy(error_rates(rho).e_z));
  });

  // Global flags (--jobs, --config) stay usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentErrorRates& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotPositive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotHermitian& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TraceNotOne& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VanishingNorm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDistribution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
