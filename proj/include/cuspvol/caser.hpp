#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cuspvol/coxeter.hpp"
#include "cuspvol/horoball.hpp"

namespace cuspvol {

enum class Verdict { RealizedBy, ExcludedVolume, ExcludedArithmetic, Impossible, Unresolved };
std::string to_string(Verdict v);

struct Constraint {
    std::string text;
    std::function<double()> closed;
    std::function<double(double)> residual;
    double lo = 0.0;
    double hi = 0.0;
    std::function<double()> solve;  // bracketed solver used instead of residual
};

struct ExactVolume {
    std::string label;
    std::function<double()> eval;
};

struct Impossibility {
    std::string reason;
    std::function<bool()> check;  // empty when the argument is not computable
};

struct Scenario {
    std::string id;
    int group = 0;
    std::string name;
    std::string cusp_type;  // "2,3,6", "2,4,4", "3,3,3", "multi-cusp", "non-rigid"
    int classes = 1;
    std::optional<Placement> placement;
    std::optional<Placement> partner;
    bool mirror = false;
    // Compared against 2 v*: the listed or computed volume belongs to the orientation-preserving subgroup.
    bool oriented = false;
    Constraint constraint;
    std::function<std::optional<double>(double)> theta;
    std::optional<double> listed_volume;
    std::string listed_text;
    std::optional<ExactVolume> exact;
    std::string witness;
    std::optional<Impossibility> impossible;
    std::string description;
    std::string notes;
    // w as a function of d for a (1/w)-ball drawn at the cell centre.
    std::function<double(double)> centre_w;
};

struct ScenarioSolution {
    std::string id;
    int group = 0;
    std::string name;
    std::string cusp_type;
    int classes = 1;
    std::string placement;
    bool mirror = false;
    bool oriented = false;
    std::string constraint;
    std::optional<double> d;
    std::optional<double> d_closed;
    std::optional<double> d_bisection;
    std::optional<double> theta;
    std::optional<double> cusp_volume;
    std::string cusp_formula;
    std::optional<double> volume_bound;
    std::optional<double> exact_volume;
    std::string exact_label;
    double value = 0.0;
    double threshold = 0.0;
    double margin = 0.0;
    std::string basis;  // "exact", "bound", "listed", "none"
    Verdict verdict = Verdict::Unresolved;
    std::string witness;
    std::optional<Arithmeticity> witness_arithmetic;
    std::string description;
    std::string notes;
    std::vector<std::string> failures;
};

inline constexpr double kVerdictTol = 1e-9;

const std::vector<Scenario>& scenario_registry();
const Scenario& find_scenario(const std::string& id);
ScenarioSolution solve_scenario(const Scenario& s);

// Row patches keyed by id: {"rows": {"07": {"witness": ..., "exact_volume": ..., "d_closed": ...}}}
std::vector<Scenario> apply_fixture(std::vector<Scenario> rows, const nlohmann::json& fixture);

struct IdentityForm {
    std::string form;
    double rhs = 0.0;
    double residual = 0.0;
};

struct IdentityCheck {
    std::string name;
    std::string theta_text;
    double theta = 0.0;
    double lhs = 0.0;
    double residual = 0.0;  // of the fully reduced form
    std::vector<IdentityForm> forms;
    std::vector<std::pair<double, bool>> decimal_matches;
    std::string notes;
};

std::vector<IdentityCheck> verify_appendix_identities();

struct Threshold {
    std::string name;
    double closed = 0.0;
    double bisection = 0.0;
};

std::vector<Threshold> scenario_thresholds();

struct RunOptions {
    std::optional<std::string> only;
    nlohmann::json fixture;
};

struct Report {
    std::vector<ScenarioSolution> rows;
    std::optional<double> minimum;
    std::string argmin;
    std::string argmin_id;
    double v_star = 0.0;
    bool full_run = true;
    bool certified = false;
    std::vector<std::string> failures;
    std::vector<Threshold> thresholds;
    std::vector<IdentityCheck> identities;
};

Report run_case_analysis(const RunOptions& options = {});

nlohmann::json solution_json(const ScenarioSolution& s);
nlohmann::json identity_json(const IdentityCheck& c);
nlohmann::json report_json(const Report& r);

// Registry coverage by topic: each entry names a topic and the groups covering it.
struct CoverageTopic {
    std::string topic;
    std::vector<int> groups;
};
const std::vector<CoverageTopic>& coverage_topics();

}  // namespace cuspvol
