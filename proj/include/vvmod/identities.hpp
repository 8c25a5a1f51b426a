#ifndef VVMOD_IDENTITIES_HPP
#define VVMOD_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vvmod/common.hpp"

namespace vvmod {

/// Outcome of one mechanized identity check.
struct CheckReport {
    std::string name;
    std::string anchor; // tag into the identity catalogue (known_anchors)
    std::map<std::string, std::string> parameters;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;
};

/// Shared knobs. tolerance_override relaxes or tightens one check by name.
struct CheckConfig {
    int order = 60;          // q-expansion truncation
    long long radius = 400;  // coset radius where lattice sums appear
    std::uint64_t seed = 1;  // seed for randomized checks
    std::map<std::string, double> tolerance_override;
};

using CheckFn = CheckReport (*)(const CheckConfig&);

/// Name -> runner, in canonical execution order.
const std::vector<std::pair<std::string, CheckFn>>& check_registry();

/// Closed catalogue of anchor tags a report may carry.
const std::vector<std::string>& known_anchors();

/// '*'-wildcard match (no other metacharacters).
bool glob_match(const std::string& pattern, const std::string& text);

/// Run every registered check whose name matches the glob.
std::vector<CheckReport> run_all(const CheckConfig& cfg,
                                 const std::string& name_glob = "*");

std::string report_to_json(const CheckReport& r);

// Exact cancellation of the lowering of e2vec.
CheckReport check_e2vec_holomorphic(const CheckConfig&);
// Slash invariance of e2vec under S and T at sample points.
CheckReport check_e2vec_modular(const CheckConfig&);
// Finite-difference validation of the frame lowering/raising table.
CheckReport check_frame_maass_table(const CheckConfig&);
// Evaluate a random vector form, re-extract frame coordinates, compare.
CheckReport check_decomposition_roundtrip(const CheckConfig&);
// lower(raise(e2)) is proportional to e2 with |c| = 2; laplace(e2) = 0.
CheckReport check_lr_e2_relation(const CheckConfig&);
// The weight-3 pair (e2, raise(e2)/2) lowers onto a single constant frame line.
CheckReport check_bk_case_IIIb_form(const CheckConfig&);
// Direct q-expansion of e2vec vs the analytic series + residue construction.
CheckReport check_e2vec_two_constructions(const CheckConfig&);

} // namespace vvmod

#endif
