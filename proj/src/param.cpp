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

#include "udom/param.hpp"

#include <sstream>

namespace udom {

std::string label_of(const CPoint& p) { return p.inf ? "inf" : format_value(p.v); }

ParamStructure ParamStructure::parse_shape(const TNorm& t, const std::string& selector) {
    ParamStructure s;
    s.tnorm = t;
    if (selector == "alphaL") {
        s.kind = ShapeKind::alpha_l;
    } else if (selector == "alphaR") {
        s.kind = ShapeKind::alpha_r;
    } else if (selector == "xinf") {
        s.kind = ShapeKind::x_infinity;
    } else if (selector.rfind("power:", 0) == 0) {
        std::string rest = selector.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw input_error("power selector: power:<shape>:<k>");
        ParamStructure base = parse_shape(t, rest.substr(0, colon));
        if (base.kind == ShapeKind::power) throw input_error("nested power shapes unsupported");
        s.kind = ShapeKind::power;
        s.base = base.kind;
        s.exponent = std::stoi(rest.substr(colon + 1));
        if (s.exponent < 1) throw input_error("power exponent must be >= 1");
    } else {
        throw input_error("unknown shape selector: " + selector);
    }
    return s;
}

std::string ParamStructure::shape_name() const {
    switch (kind) {
        case ShapeKind::alpha_l: return "alphaL";
        case ShapeKind::alpha_r: return "alphaR";
        case ShapeKind::x_infinity: return "xinf";
        case ShapeKind::power: {
            ParamStructure b = *this;
            b.kind = base;
            return "power:" + b.shape_name() + ":" + std::to_string(exponent);
        }
    }
    return "?";
}

double param_hom(const ParamStructure& s, const CPoint& x, const CPoint& y) {
    if (s.kind == ShapeKind::power)
        throw input_error("param_hom: power shapes are handled through product snapshots");
    if (s.kind != ShapeKind::x_infinity && (x.inf || y.inf))
        throw input_error("infinity is only a point of the xinf shape");
    switch (s.kind) {
        case ShapeKind::alpha_l: return s.tnorm.residuum(x.v, y.v);
        case ShapeKind::alpha_r: return s.tnorm.residuum(y.v, x.v);
        case ShapeKind::x_infinity:
            if (x.inf && y.inf) return 1.0;
            if (x.inf) return y.v;
            if (y.inf) return 0.0;
            return s.tnorm.residuum(x.v, y.v);
        default: break;
    }
    throw input_error("param_hom: unsupported shape");
}

namespace {

// d(t)(x) = sup_{b > t} (b -> x) for t < 1; at t = 1 the hom itself.
double d_alpha_r(const TNorm& T, double t, double x) {
    if (t >= 1.0) return x;
    if (x > t) return 1.0;
    if (x < t) return T.residuum(t, x);
    // x == t: limit of residuum(b, t) as b decreases to t
    if (const Piece* p = T.piece_right_of(t)) {
        if (p->kind == Archetype::lukasiewicz) return p->hi;
        return (t > p->lo) ? p->hi : t;
    }
    return t;  // idempotents right above t
}

// d(t)(x) = sup_{b < t} (x -> b) for t > 0; at t = 0 the hom itself.
double d_alpha_l(const TNorm& T, double t, double x) {
    if (t <= 0.0) return T.residuum(x, 0.0);
    if (x < t) return 1.0;
    if (T.is_idempotent(t)) return t;
    if (x > t) return T.residuum(x, t);
    // x == t in the open interior of a piece: limit of residuum(t, b), b up to t
    const Piece* p = T.piece_right_of(t);
    return p ? p->hi : t;
}

}  // namespace

double param_d(const ParamStructure& s, const CPoint& t, const CPoint& x) {
    switch (s.kind) {
        case ShapeKind::alpha_r:
            if (t.inf || x.inf) throw input_error("infinity is only a point of the xinf shape");
            return d_alpha_r(s.tnorm, t.v, x.v);
        case ShapeKind::alpha_l:
            if (t.inf || x.inf) throw input_error("infinity is only a point of the xinf shape");
            return d_alpha_l(s.tnorm, t.v, x.v);
        case ShapeKind::x_infinity:
            if (t.inf) return x.inf ? 1.0 : 0.0;
            if (t.v <= 0.0) return x.inf ? 0.0 : s.tnorm.residuum(x.v, 0.0);
            if (x.inf) return t.v;
            return d_alpha_l(s.tnorm, t.v, x.v);
        case ShapeKind::power:
            throw input_error("param_d: use way_below_power for power shapes");
    }
    throw input_error("param_d: unsupported shape");
}

std::vector<CPoint> grid_carrier(const ParamStructure& s, int n) {
    if (n < 1) throw input_error("grid_carrier: n >= 1 required");
    std::vector<CPoint> pts;
    for (int i = 0; i <= n; ++i) pts.push_back(CPoint::val(double(i) / double(n)));
    if (s.kind == ShapeKind::x_infinity) pts.push_back(CPoint::infty());
    return pts;
}

FiniteQOrder grid_snapshot(const ParamStructure& s, int n) {
    if (s.kind == ShapeKind::power) {
        ParamStructure b = s;
        b.kind = s.base;
        FiniteQOrder base = grid_snapshot(b, n);
        std::vector<FiniteQOrder> fs(s.exponent, base);
        return product_order(fs);
    }
    FiniteQOrder X;
    X.tnorm = s.tnorm;
    auto pts = grid_carrier(s, n);
    for (const auto& p : pts) X.elements.push_back(label_of(p));
    const int m = static_cast<int>(pts.size());
    X.alpha.assign(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) X.alpha[i][j] = param_hom(s, pts[i], pts[j]);
    return X;
}

namespace {

// Sample points for the open range: the grid plus a geometric refinement
// toward t, where the supremum is attained as a limit.
std::vector<double> open_range_samples(int n, double t, bool above) {
    std::vector<double> out;
    for (int i = 0; i <= n; ++i) {
        double b = double(i) / n;
        if ((above && b > t) || (!above && b < t)) out.push_back(b);
    }
    double step = 1.0 / n;
    for (int k = 0; k < 24; ++k) {
        step /= 2.0;
        double b = above ? t + step : t - step;
        if (b > 0.0 && b < 1.0 && ((above && b > t) || (!above && b < t))) out.push_back(b);
    }
    return out;
}

}  // namespace

double d_sampling_lower_bound(const ParamStructure& s, const CPoint& t, const CPoint& x, int n) {
    if (s.kind == ShapeKind::power) throw input_error("d_sampling_lower_bound: power unsupported");
    double best = 0.0;
    if (s.kind == ShapeKind::alpha_r) {
        if (t.v >= 1.0) return s.tnorm.residuum(1.0, x.v);
        for (double b : open_range_samples(n, t.v, true))
            best = std::max(best, s.tnorm.residuum(b, x.v));
        return best;
    }
    // alpha_l and the finite part of xinf share the sup over b < t
    if (s.kind == ShapeKind::x_infinity && t.inf) return param_d(s, t, x);
    if (s.kind == ShapeKind::x_infinity && x.inf) {
        for (double b : open_range_samples(n, t.v, false)) best = std::max(best, b);
        return best;
    }
    if (t.v <= 0.0) return s.tnorm.residuum(x.v, 0.0);
    for (double b : open_range_samples(n, t.v, false))
        best = std::max(best, s.tnorm.residuum(x.v, b));
    return best;
}

}  // namespace udom
