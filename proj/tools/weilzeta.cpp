// weilzeta command-line workbench.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weilzeta/commands.hpp"

using namespace weilzeta;

namespace {

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::string norm = s;
  for (char& ch : norm)
    if (ch == ',') ch = ' ';
  std::istringstream in(norm);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "'" + tok + "' is not an integer");
    }
  }
  return out;
}

Int parse_int(const std::string& s, const std::string& flag) {
  Int v;
  if (v.set_str(s, 10) != 0) fail(ErrorKind::InvalidArgument, flag + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions over finite fields and trace-cohomology objects"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string budget, det_check, degrees, betti, pmin = "5", pmax = "97";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    sub->add_option("--budget", budget, "Maximum enumeration size (default 2^24)");
  };
  auto variety_opts = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Variety file")->required();
    sub->add_option("--mmax", cfg.m_max, "Count N_1..N_mmax");
    common(sub);
  };

  auto* count = app.add_subcommand("count", "Point counts N_1..N_mmax of a variety");
  variety_opts(count);

  auto* weil = app.add_subcommand("weil", "Zeta function and Weil checks for a variety");
  variety_opts(weil);
  weil->add_option("--rh-tol", cfg.rh_tol, "Tolerance on root moduli");
  weil->add_option("--weight-tol", cfg.weight_tol, "Tolerance when assigning weights");
  weil->add_option("--degrees", degrees, "Force Pade degrees num,den");
  weil->add_option("--betti", betti, "Expected Betti numbers b_0,...,b_2n");

  auto* cm = app.add_subcommand("cm", "Grossencharacter traces of y^2 = x^3 - x against brute force");
  cm->add_option("--pmin", pmin, "Smallest prime (at least 5)");
  cm->add_option("--pmax", pmax, "Largest prime");
  common(cm);

  auto* lattice = app.add_subcommand("lattice", "Endomorphism ring of a pseudo-lattice");
  lattice->add_option("input", cfg.input, "Lattice file")->required();
  common(lattice);

  auto* dim = app.add_subcommand("dimgroup", "Dimension group of a primitive integer matrix");
  dim->add_option("input", cfg.input, "Matrix file")->required();
  dim->add_option("--det-check", det_check, "Require a symmetric matrix of this determinant");
  common(dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!budget.empty()) cfg.budget = parse_int(budget, "--budget");
    if (!det_check.empty()) cfg.det_check = parse_int(det_check, "--det-check");
    cfg.pmin = parse_int(pmin, "--pmin");
    cfg.pmax = parse_int(pmax, "--pmax");
    if (!degrees.empty()) {
      const auto d = parse_longs(degrees);
      if (d.size() != 2 || d[0] < 0 || d[1] < 0) fail(ErrorKind::InvalidArgument, "--degrees expects num,den");
      cfg.degrees = std::pair<unsigned, unsigned>(static_cast<unsigned>(d[0]), static_cast<unsigned>(d[1]));
    }
    if (!betti.empty()) cfg.betti = parse_longs(betti);

    const Report report = run_command(cfg);
    if (cfg.out.empty()) {
      std::cout << report.text();
    } else {
      std::ofstream out(cfg.out);
      if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + cfg.out);
      out << report.text();
    }
    if (!report.pass()) std::cerr << "weilzeta: " << cfg.command << " FAIL\n";
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << "weilzeta: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "weilzeta: " << e.what() << "\n";
    return 2;
  }
}
