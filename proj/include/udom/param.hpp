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

#ifndef UDOM_PARAM_HPP
#define UDOM_PARAM_HPP

#include <string>
#include <vector>

#include "udom/order.hpp"
#include "udom/tnorm.hpp"

namespace udom {

enum class ShapeKind { alpha_l, alpha_r, x_infinity, power };

/// Carrier point of a parametric structure: a value in [0,1] or the extra
/// point of the X-infinity example.
struct CPoint {
    double v = 0.0;
    bool inf = false;

    static CPoint val(double x) { return CPoint{x, false}; }
    static CPoint infty() { return CPoint{0.0, true}; }
};

std::string label_of(const CPoint& p);

/// A symbolic unit-interval structure with closed-form hom and d maps.
struct ParamStructure {
    TNorm tnorm;
    ShapeKind kind = ShapeKind::alpha_r;
    ShapeKind base = ShapeKind::alpha_r;  // power only
    int exponent = 1;                     // power only

    /// CLI selectors: alphaL | alphaR | xinf | power:<shape>:<k>
    static ParamStructure parse_shape(const TNorm& t, const std::string& selector);
    std::string shape_name() const;
};

/// Closed-form hom. Throws on infinity outside XInfinity and on power shapes.
double param_hom(const ParamStructure& s, const CPoint& x, const CPoint& y);

/// The explicit left-adjoint candidate d(t) evaluated at x. Open-range
/// suprema are resolved per t-norm piece by the limit formulas, never by
/// sampling. Supported for AlphaL, AlphaR, XInfinity.
double param_d(const ParamStructure& s, const CPoint& t, const CPoint& x);

std::vector<CPoint> grid_carrier(const ParamStructure& s, int n);

/// Restriction of hom to the grid {0, 1/n, ..., 1} (plus infinity for
/// XInfinity). Power shapes produce the finite product of base snapshots.
FiniteQOrder grid_snapshot(const ParamStructure& s, int n);

/// Grid-sampling lower bound for the open supremum in d(t)(x); the closed
/// form must dominate it and exceed it by at most the grid pitch.
double d_sampling_lower_bound(const ParamStructure& s, const CPoint& t, const CPoint& x, int n);

}  // namespace udom

#endif
