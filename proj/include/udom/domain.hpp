/*
 * Copyright 2026 the udom authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef UDOM_DOMAIN_HPP
#define UDOM_DOMAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "udom/order.hpp"
#include "udom/param.hpp"

namespace udom {

/// Verdict on whether a weight is forward Cauchy.
/// Ideal path: Lambda(phi) = {x : phi(x) = 1} must be a directed set of the
/// underlying order with phi the pointwise join of its representables.
/// Oracle path: inhabitedness plus irreducibility against all grid-quantized
/// weight pairs; doubly exponential, bounded by default to |X| <= 4, grid <= 4.
struct FCReport {
    bool forward_cauchy = false;
    bool inhabited = false;
    bool ideal_directed = false;
    bool join_identity = false;
    std::vector<int> ideal;
    std::string witness;
    std::optional<bool> oracle_verdict;
    bool paths_agree = true;
    nlohmann::json to_json() const;
};

FCReport is_forward_cauchy(const FiniteQOrder& X, const Weight& phi, int oracle_grid = 0,
                           double eps = kEps);

/// All value vectors over {0, 1/n, ..., 1} that are weights of X.
std::vector<std::vector<double>> enumerate_grid_weights(const FiniteQOrder& X, int grid_n,
                                                        double eps = kEps);

/// Inhabited + irreducible, quantified over grid-quantized weight pairs.
bool oracle_inhabited_irreducible(const FiniteQOrder& X, const Weight& phi, int grid_n,
                                  double eps = kEps);

struct WayBelowTable {
    std::vector<std::vector<double>> w;  // w[x][y]
    bool invariants_hold = false;
    std::vector<std::string> violations;
    nlohmann::json to_json() const;
};

/// Basic way-below laws (w <= hom and the two mixed transitivities),
/// checked entrywise against the given hom table.
void check_way_below_invariants(const std::vector<std::vector<double>>& hom,
                                const TNorm& t, WayBelowTable& table, double eps = kEps);

/// Finite mode: the defining meet over the enumerated forward Cauchy weights
/// (ideals of a finite underlying order are principal downsets, so these are
/// exactly the representables).
WayBelowTable way_below_finite(const FiniteQOrder& X, double eps = kEps);

/// Parametric mode: the d-map values on the grid carrier.
WayBelowTable way_below_param(const ParamStructure& s, int grid_n, double eps = kEps);

bool is_compact_finite(const FiniteQOrder& X, int a, double eps = kEps);
/// Column comparison w(-, a) vs hom(-, a) over the grid plus a itself.
bool is_compact_param(const ParamStructure& s, double a, int grid_n, double eps = kEps);

struct ContinuityReport {
    bool is_continuous_lattice = false;
    bool separated = false;
    bool complete = false;
    bool underlying_complete_lattice = false;
    bool cond_adjunction = false;         // the adjunction d -| sup on the sample family
    bool cond_way_below_identity = false; // X(x, sup phi) = meet_{y << x} phi(y)
    bool cond_d_preserves_order = false;  // d(x) = w(-, x) preserves the order
    bool conditions_agree = false;        // the three conditions returned one verdict
    int grid_n = 0;  // 0 = finite-exact
    std::string witness;
    nlohmann::json to_json() const;
};

ContinuityReport check_continuity(const FiniteQOrder& X, double eps = kEps);
ContinuityReport check_continuity(const ParamStructure& s, int grid_n, double eps = kEps);

struct InterpolationReport {
    bool pass = false;
    double max_excess = 0.0;   // amount by which sup_z w(z,y) & w(x,z) exceeds w(x,y)
    double max_deficit = 0.0;  // amount by which it falls short
    double slack = 0.0;
    std::string witness;
    nlohmann::json to_json() const;
};

InterpolationReport check_interpolation(const FiniteQOrder& X, double eps = kEps);
InterpolationReport check_interpolation(const ParamStructure& s, int grid_n, double eps = kEps);

struct PowerWayBelow {
    double upper_bound = 0.0;   // meet_i w(x_i, y_i)
    bool equality = false;      // exact on finite index sets / finite support
};

/// Way-below in a finite power via the product law. Requires the base
/// underlying order to have a bottom element on its grid.
PowerWayBelow way_below_power(const ParamStructure& power, const std::vector<double>& xs,
                              const std::vector<double>& ys, double eps = kEps);

/// slack for one-sided grid comparisons
inline double grid_slack(int grid_n, double eps = kEps) {
    return std::max(1.0 / double(grid_n), eps);
}

}  // namespace udom

#endif
