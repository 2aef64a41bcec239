#pragma once

#include "apostol/apostol.hpp"

#include <string>
#include <vector>

namespace apostol {

struct VerifyParams {
    DirichletChar chi = trivial_character();
    Rat lambda{2};
    Rat q{2};
    bool q_limit_1 = false;
    int max_m = 10;
    std::vector<Rat> zs = {Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(-1)};
};

/// Outcome of checking one registered identity at one parameter point.
/// status is PASS (as printed), PASS-corrected (fails as printed, holds
/// after the documented fix) or FAIL. left/right hold the values at the
/// first mismatching index of the as-printed reading when there is one.
struct IdentityReport {
    std::string theorem;
    std::string params;
    std::string status;
    std::string left;
    std::string right;
    std::string note;
};

const std::vector<std::string>& theorem_registry();

/// True when the theorem's stated constraints admit these parameters
/// (odd conductor, q != 1, (lambda q)^d away from the excluded roots, ...).
bool theorem_applicable(const std::string& theorem, const VerifyParams& p);

/// Checks one identity; throws std::invalid_argument for unknown theorem
/// ids and for parameters outside the theorem's constraints.
IdentityReport verify_identity(const std::string& theorem, const VerifyParams& p);

/// Runs a theorem (or "all") over the default character/lambda/q grid,
/// skipping inapplicable points.
std::vector<IdentityReport> verify_default_grid(const std::string& theorem, int max_m = 10);

std::string reports_to_json(const std::vector<IdentityReport>& reports);

}  // namespace apostol
