#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropcat::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long instances = 0;  // number of cases exercised
  std::string detail;       // first failure, empty when passed
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed = false;
};

// Every default below is a pinned acceptance threshold; the CLI may widen or
// narrow them but the defaults are the contract.

CheckResult check_category_laws(int max_period = 4, int max_deg = 3);
CheckResult check_canonical_forms(int max_period = 4, int max_deg = 3,
                                  int samples = 200, std::uint64_t seed = 20260823ULL);
CheckResult check_tropical_semifield(int max_exp = 20, int max_frob = 10,
                                     int max_level = 12);
CheckResult check_circle_geometry(int max_period = 6);
CheckResult check_cyclic_presentation(int max_object = 4, int max_eqmod = 3);
CheckResult check_epicyclic_presentation(int max_object = 4, int max_k = 3);
CheckResult check_power_correspondence(int samples = 500, int max_k = 5,
                                       std::uint64_t seed = 97ULL);
CheckResult check_factorization(int max_period = 4, int max_deg = 3);
CheckResult check_subobject_bijection(int max_period = 5);
CheckResult check_duality_adjunction(int max_period = 5);
CheckResult check_duality_functor(int max_period = 4);
CheckResult check_chain_duality(int max_rank = 4);
CheckResult check_descent_lift(int max_points = 4);
CheckResult check_projection_fullness(int max_points = 4);
CheckResult check_counting_identities(int max_orbit = 3, int max_group = 3,
                                      int max_submodule_rank = 6,
                                      int max_cardinality_rank = 8);
CheckResult check_hypergroup_axioms(int max_rank = 6);
CheckResult check_sign_module_laws(int max_rank = 6);

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite; max_period / max_deg scale the member checks the way
/// the defaults above correspond to max_period 4, max_deg 3.
SuiteReport run_suite(const std::string& name, int max_period = 4, int max_deg = 3);

/// "all" runs every suite in declaration order.
std::vector<SuiteReport> run_suites(const std::string& name_or_all,
                                    int max_period = 4, int max_deg = 3);

std::string reports_to_json(const std::vector<SuiteReport>& reports, int indent = -1);

}  // namespace tropcat::checks
