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

#ifndef UDOM_APPROACH_HPP
#define UDOM_APPROACH_HPP

#include <functional>
#include <string>
#include <vector>

#include "udom/order.hpp"

namespace udom {

/// A finite [0,1]-approach space: delta[point][subset-bitmask].
/// Subset enumeration is exponential by nature; carriers are capped.
struct ApproachTable {
    TNorm tnorm;
    std::vector<std::string> elements;
    std::vector<std::vector<double>> delta;  // [x][mask], mask over 2^n
    std::vector<unsigned> defaulted_masks;   // masks filled in by the Gamma extension

    int size() const { return static_cast<int>(elements.size()); }
    unsigned subsets() const { return 1u << size(); }
    double at(int x, unsigned mask) const { return delta[x][mask]; }

    static constexpr int kMaxPoints = 12;

    static ApproachTable from_json(const nlohmann::json& j);
    static ApproachTable from_file(const std::string& path);
    nlohmann::json to_json() const;
};

struct ApproachCheck {
    bool pass = false;
    bool a1 = false, a2 = false, a3 = false, a4 = false;
    bool separated = false;
    std::vector<std::string> violations;
    nlohmann::json to_json() const;
};

ApproachCheck check_approach_axioms(const ApproachTable& T, double eps = kEps);

/// Gamma: the Alexandroff extension of a [0,1]-order.
ApproachTable gamma(const FiniteQOrder& X);
/// Omega: the specialization [0,1]-order, delta(x, {y}).
FiniteQOrder omega_of(const ApproachTable& T);

/// The space K on the grid carrier: delta(x, A) = (min A) -> x.
ApproachTable space_K(const TNorm& t, int grid_n);

/// Closure of a value vector in the strong cotopology of T, by the level-set
/// formula: sup over p in the value set of lambda of p & delta(-, [lambda >= p]).
/// The restriction to the finite value set is exact, not an approximation.
std::vector<double> closure(const ApproachTable& T, const std::vector<double>& lambda);

/// Membership in kappa(delta): continuity of lambda into the space K.
bool kappa_membership(const ApproachTable& T, const std::vector<double>& lambda,
                      double eps = kEps, std::string* witness = nullptr);

ApproachTable subspace(const ApproachTable& T, unsigned point_mask);

/// A [0,1]-cotopology presented as a membership predicate on value vectors.
struct Cotopology {
    TNorm tnorm;
    std::vector<std::string> elements;
    std::function<bool(const std::vector<double>&)> is_closed;
};

/// zeta(tau) as a table: closures of crisp subsets computed as meets over an
/// enumerated family of tau-closed vectors with values in {0, 1/vn, ..., 1}.
ApproachTable zeta_of_cotopology(const Cotopology& tau, int value_grid, double eps = kEps);

struct RoundTripReport {
    bool zeta_kappa_identity = false;   // zeta(kappa(T)) = T entrywise
    bool kappa_zeta_identity = false;   // kappa(zeta(tau)) = tau on enumerated candidates
    bool omega_gamma_identity = false;  // Omega(Gamma(X)) = X
    std::string witness;
    nlohmann::json to_json() const;
};

/// Round trips of the functor quadruple. The cotopology direction is
/// checked on vectors with values in {0, 1/value_grid, ..., 1}.
RoundTripReport functor_round_trips(const ApproachTable& T, const FiniteQOrder& X,
                                    const Cotopology* tau = nullptr, int value_grid = 4,
                                    double eps = kEps);

/// All subset masks of an n-point carrier in increasing order.
std::vector<unsigned> all_masks(int n);

}  // namespace udom

#endif
