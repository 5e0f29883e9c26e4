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

#ifndef UDOM_ORDER_HPP
#define UDOM_ORDER_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udom/tnorm.hpp"

namespace udom {

/// A finite [0,1]-ordered set: alpha[x][y] = X(x, y), row = source.
struct FiniteQOrder {
    TNorm tnorm;
    std::vector<std::string> elements;
    std::vector<std::vector<double>> alpha;

    int size() const { return static_cast<int>(elements.size()); }
    double hom(int x, int y) const { return alpha[x][y]; }
    int index_of(const std::string& label) const;

    /// Underlying order: x <= y iff X(x,y) = 1 (within eps).
    bool und(int x, int y, double eps = kEps) const { return approx_one(alpha[x][y], eps); }
    bool isomorphic_elements(int x, int y, double eps = kEps) const {
        return und(x, y, eps) && und(y, x, eps);
    }

    static FiniteQOrder from_json(const nlohmann::json& j);
    static FiniteQOrder from_file(const std::string& path);
    nlohmann::json to_json() const;
};

struct OrderCheck {
    bool valid = false;        // reflexive and transitive
    bool reflexive = false;
    bool transitive = false;
    bool separated = false;
    std::vector<std::string> violations;
    std::vector<std::vector<bool>> underlying;
    nlohmann::json to_json(const FiniteQOrder& X) const;
};

OrderCheck check_q_order(const FiniteQOrder& X, double eps = kEps);

/// A value vector phi with phi(y) & X(x,y) <= phi(x); validated eagerly.
struct Weight {
    const FiniteQOrder* over = nullptr;
    std::vector<double> values;

    double operator[](int i) const { return values[i]; }
    int size() const { return static_cast<int>(values.size()); }
};

bool is_weight_vector(const FiniteQOrder& X, const std::vector<double>& v, double eps = kEps,
                      std::string* witness = nullptr);
/// Throws input_error on an invalid vector; no silent repair.
Weight make_weight(const FiniteQOrder& X, std::vector<double> v, double eps = kEps);

double sub_weight(const Weight& phi, const Weight& psi);  // fuzzy inclusion sub_X
Weight yoneda(const FiniteQOrder& X, int x);
Weight weight_join(const Weight& a, const Weight& b);
Weight weight_meet(const Weight& a, const Weight& b);
Weight weight_scale(double p, const Weight& a);                 // p & phi
Weight weight_residuate(double p, const Weight& a);             // p -> phi
Weight zero_weight(const FiniteQOrder& X);

struct SupResult {
    std::optional<int> element;  // first matching carrier index
    bool unique = true;          // false only when separation fails
    std::vector<int> matches;
};
/// Exhaustive search for a with X(a,y) = sub(phi, yoneda(y)) for all y.
SupResult supremum_of_weight(const FiniteQOrder& X, const Weight& phi, double eps = kEps);

/// Exhaustive search for the cotensor p -| y: X(x, c) = p -> X(x, y).
std::optional<int> cotensor(const FiniteQOrder& X, double p, int y, double eps = kEps);

struct QMap {
    const FiniteQOrder* source = nullptr;
    const FiniteQOrder* target = nullptr;
    std::vector<int> assignment;

    int operator()(int i) const { return assignment[i]; }
};

bool preserves_qorder(const QMap& f, double eps = kEps, std::string* witness = nullptr);

struct AdjunctionCheck {
    bool adjoint = false;          // direct hom-equation check
    bool characterization = false; // both preserve order + underlying Galois connection
    bool criteria_agree = false;
    std::string witness;
    nlohmann::json to_json() const;
};
AdjunctionCheck check_adjunction(const QMap& f, const QMap& g, double eps = kEps);

FiniteQOrder product_order(const std::vector<FiniteQOrder>& factors);
FiniteQOrder opposite(const FiniteQOrder& X);
FiniteQOrder one_point_order(const TNorm& t);
/// omega: embed a crisp (pre)order with values in {0,1}.
FiniteQOrder omega_order(const TNorm& t, std::vector<std::string> labels,
                         const std::vector<std::vector<bool>>& leq);

Weight push_forward(const QMap& f, const Weight& phi);  // f->
Weight pull_back(const QMap& f, const Weight& psi);     // f<-

/// Cocompleteness of a finite snapshot: all conical joins plus tensors p (x) x
/// for p running over the critical value grid (table values, piece endpoints,
/// midpoints). Exact for the Godel t-norm; grid-resolution elsewhere.
bool snapshot_complete(const FiniteQOrder& X, double eps = kEps, std::string* witness = nullptr);

/// Critical probe values: 0, 1, table values, piece endpoints, and midpoints
/// of consecutive distinct values.
std::vector<double> critical_values(const FiniteQOrder& X);

}  // namespace udom

#endif
