#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "distlab/surfaces.hpp"

namespace distlab {

struct BoundCheck {
    std::string name;
    double bound = 0.0;
    double value = 0.0;
    double margin = 0.0;  // value - (bound - mesh_tol)
    bool applies = false;
    bool pass = true;
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_pass = true;
};

// Universal lower bounds on the distortion of closed subsets: pi/(2 sqrt 2)
// when the complement has a bounded component, pi/2 in the presence of a
// systole (any closed surface of positive genus qualifies).
inline BoundReport verify_lower_bounds(double estimate, bool has_bounded_complement, int genus,
                                       double mesh_tol) {
    BoundReport report;
    BoundCheck enclosing;
    enclosing.name = "bounded-complement bound pi/(2*sqrt(2))";
    enclosing.bound = kPi / (2.0 * std::sqrt(2.0));
    enclosing.value = estimate;
    enclosing.applies = has_bounded_complement;
    enclosing.margin = estimate - (enclosing.bound - mesh_tol);
    enclosing.pass = !enclosing.applies || enclosing.margin >= 0.0;
    report.checks.push_back(enclosing);

    BoundCheck systolic;
    systolic.name = "systole bound pi/2";
    systolic.bound = kPi / 2.0;
    systolic.value = estimate;
    systolic.applies = genus >= 1;
    systolic.margin = estimate - (systolic.bound - mesh_tol);
    systolic.pass = !systolic.applies || systolic.margin >= 0.0;
    report.checks.push_back(systolic);

    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace distlab
