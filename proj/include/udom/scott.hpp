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

#ifndef UDOM_SCOTT_HPP
#define UDOM_SCOTT_HPP

#include <optional>
#include <string>
#include <vector>

#include "udom/approach.hpp"
#include "udom/domain.hpp"

namespace udom {

/// A finite snapshot together with its forward Cauchy weight family (each
/// member with a known supremum) and its way-below table. For plain finite
/// snapshots the family is the representables and w is the alpha table; for
/// grid snapshots of parametric structures the family also carries the
/// d-map weights and w holds the parametric way-below values.
struct ScottContext {
    FiniteQOrder X;
    std::vector<std::vector<double>> fc;  // forward Cauchy family (value vectors)
    std::vector<int> fc_sup;              // supremum index per member
    std::vector<std::vector<double>> w;   // way-below table on the carrier
    bool continuous = false;
    int grid_n = 0;  // 0 = finite-intrinsic
    std::string provenance;
    // set for grid snapshots of parametric structures; closures of crisp
    // subsets then sample the closed-form meet beyond the grid carrier
    bool has_param = false;
    ParamStructure pstruct;
};

ScottContext scott_context_finite(const FiniteQOrder& X, double eps = kEps);
ScottContext scott_context_param(const ParamStructure& s, int grid_n, double eps = kEps);

struct ScottClosedVerdict {
    bool defined = false;  // false when some family member lacks a supremum
    bool closed = false;
    std::string witness;
};
/// sub(lambda, phi) = phi(sup lambda) for every enumerated forward Cauchy
/// lambda. On parametric contexts the grid vector is judged through its
/// canonical lower extension, sampled in closed form beyond the grid.
ScottClosedVerdict is_scott_closed(const ScottContext& ctx, const std::vector<double>& phi,
                                   double eps = kEps);

/// Same check for a weight given in closed form on the whole carrier;
/// parametric contexts only.
ScottClosedVerdict is_scott_closed_fn(const ScottContext& ctx,
                                      const std::function<double(double)>& phi,
                                      double eps = kEps);

/// Least Scott closed weight above phi: a -> sub(w(-, a), phi).
/// Requires ctx.continuous.
std::vector<double> scott_closure(const ScottContext& ctx, const std::vector<double>& phi);

/// The Scott [0,1]-approach structure: closure of the down-extension of the
/// indicator of A, evaluated at x.
double sigma_delta(const ScottContext& ctx, int x, unsigned mask);
/// Full table of sigma_delta.
ApproachTable sigma_table(const ScottContext& ctx);

/// V-valued vectors that are weights and pass is_scott_closed; V is the
/// value set of the context (alpha values, w values, 0, 1).
std::vector<std::vector<double>> enumerate_closed_family(const ScottContext& ctx,
                                                         double eps = kEps);

struct SobrietyWitness {
    bool valid = false;
    bool precondition_ok = false;  // inhabited + irreducible among the closed family
    std::optional<int> sup_point;
    std::vector<double> down_lambda;
    std::string message;
    nlohmann::json to_json(const FiniteQOrder& X) const;
};
SobrietyWitness sobriety_witness(const ScottContext& ctx, const std::vector<double>& lambda,
                                 double eps = kEps);

struct SigmaProductReport {
    bool pass = false;
    bool refused = false;  // size bounds exceeded
    double max_deviation = 0.0;
    int carrier = 0;
    int closed_family = 0;   // generated product cotopology size
    std::string witness;
    nlohmann::json to_json() const;
};

/// Compares Sigma(X^k) with (Sigma X)^k at the approach-table level. The
/// product side is the strong cotopology generated by cylinders of closed
/// sets of Sigma X; the Sigma(X^k) side uses the product way-below law.
SigmaProductReport sigma_product_check(const ScottContext& ctx, int k, double eps = kEps);

enum class InjectivityKind { injective_all, counterexample, inconclusive };

struct InjectivityVerdict {
    InjectivityKind kind = InjectivityKind::inconclusive;
    nlohmann::json certificate;  // replayable evidence
    std::string summary;
    nlohmann::json to_json() const;
};

/// Classification: a single Lukasiewicz piece on [0,1] yields the
/// positive verdict with an isomorphism certificate; every other spec yields
/// a counterexample certificate (two-point non-extendability for condition-S
/// specs, a non-continuity witness otherwise).
InjectivityVerdict classify_injectivity(const TNorm& t, int grid_n = 100, double eps = kEps);

struct ReplayResult {
    bool ok = false;
    std::string detail;
};
/// Re-validates a certificate produced by classify_injectivity.
ReplayResult verify_certificate(const nlohmann::json& certificate, double eps = kEps);

}  // namespace udom

#endif
