#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/ffield.hpp"
#include "weilzeta/report.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

namespace weilzeta {

struct RunConfig {
  std::string command;
  std::string input;
  Int budget = kDefaultBudget;
  unsigned m_max = 0;  // 0: command default (weil counts adaptively)
  double rh_tol = 1e-9;
  double weight_tol = 0.25;
  std::optional<Int> det_check;
  std::string out;
  std::optional<std::pair<unsigned, unsigned>> degrees;  // forced Pade degrees
  std::optional<std::vector<long>> betti;
  Int pmin = 5, pmax = 97;

  /// InvalidArgument on budget < 1 or tolerances outside (0, 0.5).
  void validate() const;
};

/// Upper bound on the adaptive count in weil.
inline constexpr unsigned kAdaptiveMmax = 8;

/// Everything the weil command computes. Stages after a failed mathematical
/// check are left empty and `failure` holds the error text.
struct WeilResult {
  std::vector<Int> counts;
  std::optional<RationalFunctionQ> z;
  std::size_t spare = 0;
  std::optional<bool> round_trip;
  std::optional<WeilFactorization> factors;  // sign filled in
  std::vector<std::optional<RhReport>> rh;   // per P_i, empty for constant factors
  std::optional<std::vector<bool>> betti;
  std::string failure;
  bool pass() const;
};

/// counts -> series -> Pade -> weight split -> functional equation -> RH -> Betti.
/// Input errors and budget errors propagate as exceptions.
WeilResult weil_pipeline(const VarietySpec& v, const RunConfig& c);

Report cmd_count(const RunConfig& c);
Report cmd_weil(const RunConfig& c);
Report cmd_cm(const RunConfig& c);
Report cmd_lattice(const RunConfig& c);
Report cmd_dimgroup(const RunConfig& c);
Report run_command(const RunConfig& c);

/// 1 for failed mathematical checks, 3 for the enumeration budget, 2 otherwise.
int exit_code_for(ErrorKind kind);

}  // namespace weilzeta
