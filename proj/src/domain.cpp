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

#include "udom/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace udom {

nlohmann::json FCReport::to_json() const {
    nlohmann::json j{{"forward_cauchy", forward_cauchy},
                     {"inhabited", inhabited},
                     {"ideal_directed", ideal_directed},
                     {"join_identity", join_identity},
                     {"ideal", ideal},
                     {"witness", witness},
                     {"paths_agree", paths_agree}};
    if (oracle_verdict) j["oracle_verdict"] = *oracle_verdict;
    return j;
}

FCReport is_forward_cauchy(const FiniteQOrder& X, const Weight& phi, int oracle_grid,
                           double eps) {
    FCReport r;
    const int n = X.size();
    double top = 0.0;
    for (int i = 0; i < n; ++i) top = std::max(top, phi.values[i]);
    r.inhabited = approx_one(top, eps);

    for (int i = 0; i < n; ++i)
        if (approx_one(phi.values[i], eps)) r.ideal.push_back(i);

    r.ideal_directed = !r.ideal.empty();
    for (int a : r.ideal)
        for (int b : r.ideal) {
            bool bound = false;
            for (int c : r.ideal)
                if (X.und(a, c, eps) && X.und(b, c, eps)) { bound = true; break; }
            if (!bound) {
                r.ideal_directed = false;
                r.witness = "no upper bound for {" + X.elements[a] + "," + X.elements[b] +
                            "} in Lambda(phi)";
            }
        }
    if (r.ideal.empty()) r.witness = "Lambda(phi) is empty";

    r.join_identity = true;
    for (int z = 0; z < n && r.join_identity; ++z) {
        double join = 0.0;
        for (int a : r.ideal) join = std::max(join, X.alpha[z][a]);
        if (!approx_eq(join, phi.values[z], eps)) {
            r.join_identity = false;
            r.witness = "join over Lambda(phi) at " + X.elements[z] + " = " + format_value(join) +
                        " != phi = " + format_value(phi.values[z]);
        }
    }
    r.forward_cauchy = r.inhabited && r.ideal_directed && r.join_identity;

    if (oracle_grid > 0) {
        r.oracle_verdict = oracle_inhabited_irreducible(X, phi, oracle_grid, eps);
        r.paths_agree = (*r.oracle_verdict == r.forward_cauchy);
    }
    return r;
}

std::vector<std::vector<double>> enumerate_grid_weights(const FiniteQOrder& X, int grid_n,
                                                        double eps) {
    const int n = X.size();
    std::vector<std::vector<double>> out;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = double(idx[i]) / double(grid_n);
        if (is_weight_vector(X, v, eps)) out.push_back(v);
        int k = n - 1;
        while (k >= 0 && idx[k] == grid_n) { idx[k] = 0; --k; }
        if (k < 0) break;
        ++idx[k];
    }
    return out;
}

bool oracle_inhabited_irreducible(const FiniteQOrder& X, const Weight& phi, int grid_n,
                                  double eps) {
    if (X.size() > 4 || grid_n > 4)
        throw input_error("irreducibility oracle bounded to |X| <= 4, grid <= 4");
    double top = 0.0;
    for (double v : phi.values) top = std::max(top, v);
    if (!approx_one(top, eps)) return false;

    auto ws = enumerate_grid_weights(X, grid_n, eps);
    std::vector<Weight> family;
    family.reserve(ws.size());
    for (auto& v : ws) family.push_back(Weight{&X, v});
    for (const Weight& a : family)
        for (const Weight& b : family) {
            Weight j = weight_join(a, b);
            double lhs = sub_weight(phi, j);
            double rhs = std::max(sub_weight(phi, a), sub_weight(phi, b));
            if (!approx_eq(lhs, rhs, eps)) return false;
        }
    return true;
}

void check_way_below_invariants(const std::vector<std::vector<double>>& hom, const TNorm& t,
                                WayBelowTable& table, double eps) {
    const int n = static_cast<int>(hom.size());
    auto& w = table.w;
    table.violations.clear();
    auto note = [&](const std::string& s) {
        if (table.violations.size() < 8) table.violations.push_back(s);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!approx_le(w[x][y], hom[x][y], eps))
                note("(i) w(" + std::to_string(x) + "," + std::to_string(y) + ") > hom");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (!approx_le(t.conj(w[y][z], hom[x][y]), w[x][z], eps))
                    note("(ii) w(y,z) & X(x,y) > w(x,z) at x=" + std::to_string(x) +
                         " y=" + std::to_string(y) + " z=" + std::to_string(z));
                if (!approx_le(t.conj(hom[z][y], w[x][z]), w[x][y], eps))
                    note("(iii) X(z,u) & w(y,z) > w(y,u) at y=" + std::to_string(x) +
                         " z=" + std::to_string(z) + " u=" + std::to_string(y));
            }
    table.invariants_hold = table.violations.empty();
}

nlohmann::json WayBelowTable::to_json() const {
    return {{"w", w}, {"invariants_hold", invariants_hold}, {"violations", violations}};
}

WayBelowTable way_below_finite(const FiniteQOrder& X, double eps) {
    const int n = X.size();
    WayBelowTable t;
    t.w.assign(n, std::vector<double>(n, 1.0));

    // Forward Cauchy weights of a finite carrier are the representables;
    // take each with its searched supremum and evaluate the defining meet.
    std::vector<Weight> fam;
    std::vector<int> sups;
    for (int a = 0; a < n; ++a) {
        Weight ya = yoneda(X, a);
        SupResult s = supremum_of_weight(X, ya, eps);
        if (!s.element)
            throw input_error("way_below_finite: representable without a supremum");
        fam.push_back(std::move(ya));
        sups.push_back(*s.element);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            double m = 1.0;
            for (size_t k = 0; k < fam.size(); ++k)
                m = std::min(m, X.tnorm.residuum(X.alpha[y][sups[k]], fam[k].values[x]));
            t.w[x][y] = m;
        }
    check_way_below_invariants(X.alpha, X.tnorm, t, eps);
    return t;
}

WayBelowTable way_below_param(const ParamStructure& s, int grid_n, double eps) {
    if (s.kind == ShapeKind::power)
        throw input_error("way_below_param: use way_below_power for power shapes");
    auto pts = grid_carrier(s, grid_n);
    const int n = static_cast<int>(pts.size());
    WayBelowTable t;
    t.w.assign(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> hom(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.w[x][y] = param_d(s, pts[y], pts[x]);
            hom[x][y] = param_hom(s, pts[x], pts[y]);
        }
    check_way_below_invariants(hom, s.tnorm, t, eps);
    return t;
}

bool is_compact_finite(const FiniteQOrder& X, int a, double eps) {
    WayBelowTable t = way_below_finite(X, eps);
    for (int x = 0; x < X.size(); ++x)
        if (!approx_eq(t.w[x][a], X.alpha[x][a], eps)) return false;
    return true;
}

bool is_compact_param(const ParamStructure& s, double a, int grid_n, double eps) {
    auto pts = grid_carrier(s, grid_n);
    pts.push_back(CPoint::val(a));
    CPoint ap = CPoint::val(a);
    for (const auto& x : pts) {
        if (x.inf) continue;
        if (!approx_eq(param_d(s, ap, x), param_hom(s, x, ap), eps)) return false;
    }
    return true;
}

nlohmann::json ContinuityReport::to_json() const {
    return {{"is_continuous_lattice", is_continuous_lattice},
            {"separated", separated},
            {"complete", complete},
            {"underlying_complete_lattice", underlying_complete_lattice},
            {"cond_adjunction", cond_adjunction},
            {"cond_way_below_identity", cond_way_below_identity},
            {"cond_d_preserves_order", cond_d_preserves_order},
            {"conditions_agree", conditions_agree},
            {"grid_n", grid_n},
            {"witness", witness}};
}

ContinuityReport check_continuity(const FiniteQOrder& X, double eps) {
    ContinuityReport r;
    r.grid_n = 0;
    const int n = X.size();
    OrderCheck oc = check_q_order(X, eps);
    r.separated = oc.separated;
    r.complete = snapshot_complete(X, eps);

    // Underlying order: all binary joins plus bottom and top.
    auto join_exists = [&](int a, int b) {
        for (int j = 0; j < n; ++j) {
            if (!(X.und(a, j, eps) && X.und(b, j, eps))) continue;
            bool least = true;
            for (int u = 0; u < n && least; ++u)
                if (X.und(a, u, eps) && X.und(b, u, eps) && !X.und(j, u, eps)) least = false;
            if (least) return true;
        }
        return false;
    };
    r.underlying_complete_lattice = true;
    for (int a = 0; a < n && r.underlying_complete_lattice; ++a)
        for (int b = 0; b < n; ++b)
            if (!join_exists(a, b)) { r.underlying_complete_lattice = false; break; }
    bool has_bottom = false;
    for (int a = 0; a < n && !has_bottom; ++a) {
        bool all = true;
        for (int y = 0; y < n; ++y) all = all && X.und(a, y, eps);
        has_bottom = all;
    }
    r.underlying_complete_lattice = r.underlying_complete_lattice && (has_bottom || n == 0);

    WayBelowTable wt = way_below_finite(X, eps);

    // condition: d(x) = w(-, x) preserves the [0,1]-order.
    r.cond_d_preserves_order = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            double m = 1.0;
            for (int z = 0; z < n; ++z)
                m = std::min(m, X.tnorm.residuum(wt.w[z][x], wt.w[z][y]));
            if (!approx_le(X.alpha[x][y], m, eps)) {
                r.cond_d_preserves_order = false;
                r.witness = "d not order-preserving at (" + X.elements[x] + "," + X.elements[y] + ")";
            }
        }

    // condition: each w(-, x) is forward Cauchy with supremum x.
    r.cond_adjunction = true;
    for (int x = 0; x < n; ++x) {
        std::vector<double> col(n);
        for (int z = 0; z < n; ++z) col[z] = wt.w[z][x];
        if (!is_weight_vector(X, col, eps)) { r.cond_adjunction = false; break; }
        Weight wx{&X, col};
        FCReport fc = is_forward_cauchy(X, wx, 0, eps);
        SupResult s = supremum_of_weight(X, wx, eps);
        bool ok = fc.forward_cauchy && s.element && X.isomorphic_elements(*s.element, x, eps);
        if (!ok) {
            r.cond_adjunction = false;
            r.witness = "w(-, " + X.elements[x] + ") fails the left-adjoint characterization";
        }
    }

    // X(x, sup phi) = meet_{y << x} phi(y).  On a finite carrier
    // the classical way-below of the underlying order is the order itself.
    r.cond_way_below_identity = true;
    for (int a = 0; a < n && r.cond_way_below_identity; ++a) {
        Weight ya = yoneda(X, a);
        SupResult s = supremum_of_weight(X, ya, eps);
        for (int x = 0; x < n; ++x) {
            double meet = 1.0;
            for (int y = 0; y < n; ++y)
                if (X.und(y, x, eps)) meet = std::min(meet, ya.values[y]);
            if (!approx_eq(X.alpha[x][*s.element], meet, eps)) {
                r.cond_way_below_identity = false;
                r.witness = "way-below identity fails at (" + X.elements[x] + "," + X.elements[a] + ")";
            }
        }
    }

    r.conditions_agree = (r.cond_adjunction == r.cond_d_preserves_order) &&
                        (r.cond_way_below_identity == r.cond_d_preserves_order);
    r.is_continuous_lattice = r.separated && r.complete && r.underlying_complete_lattice &&
                              r.cond_d_preserves_order && r.cond_adjunction &&
                              r.cond_way_below_identity;
    return r;
}

namespace {

// Sample points for parametric sweeps: the grid plus piece endpoints and
// midpoints, so piece interiors are probed at every resolution.
std::vector<double> continuity_sample(const TNorm& t, int grid_n) {
    std::set<double> s;
    for (int i = 0; i <= grid_n; ++i) s.insert(double(i) / grid_n);
    for (const Piece& p : t.pieces()) {
        s.insert(p.lo);
        s.insert(p.hi);
        s.insert((p.lo + p.hi) / 2.0);
    }
    return std::vector<double>(s.begin(), s.end());
}

// Classical way-below of the underlying order of alphaL ([0,1], usual order)
// and alphaR ([0,1] reversed).
bool classical_wb(ShapeKind kind, double y, double x) {
    if (kind == ShapeKind::alpha_l) return y < x || y == 0.0;
    return y > x || y == 1.0;
}

}  // namespace

ContinuityReport check_continuity(const ParamStructure& s, int grid_n, double eps) {
    if (s.kind == ShapeKind::power)
        throw input_error("check_continuity: power shapes not supported directly");
    ContinuityReport r;
    r.grid_n = grid_n;
    r.separated = true;

    if (s.kind == ShapeKind::x_infinity) {
        // Not a complete [0,1]-lattice: the underlying order has no bottom.
        r.complete = false;
        r.underlying_complete_lattice = false;
        r.cond_d_preserves_order = true;
        r.cond_adjunction = true;
        r.cond_way_below_identity = true;
        r.conditions_agree = true;
        r.is_continuous_lattice = false;
        r.witness = "xinf: underlying order has no bottom element";
        return r;
    }

    r.complete = true;
    r.underlying_complete_lattice = true;
    std::vector<double> sample = continuity_sample(s.tnorm, grid_n);
    const int m = static_cast<int>(sample.size());

    auto d = [&](double t, double x) { return param_d(s, CPoint::val(t), CPoint::val(x)); };
    auto hom = [&](double x, double y) {
        return param_hom(s, CPoint::val(x), CPoint::val(y));
    };

    // d preserves order, sound direction: hom(t,u) <= grid meet over x.
    r.cond_d_preserves_order = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double t = sample[i], u = sample[j];
            double meet = 1.0;
            for (int k = 0; k < m; ++k)
                meet = std::min(meet, s.tnorm.residuum(d(t, sample[k]), d(u, sample[k])));
            if (!approx_le(hom(t, u), meet, eps)) {
                if (r.cond_d_preserves_order)
                    r.witness = "d not order-preserving: hom(" + format_value(t) + "," +
                                format_value(u) + ") = " + format_value(hom(t, u)) +
                                " > meet " + format_value(meet);
                r.cond_d_preserves_order = false;
            }
        }

    // Forward Cauchy sample family: the d weights (sup t) plus representables.
    struct Member { std::vector<double> vals; double sup; };
    std::vector<Member> family;
    for (int i = 0; i < m; ++i) {
        Member dm, ym;
        dm.sup = sample[i];
        ym.sup = sample[i];
        for (int k = 0; k < m; ++k) {
            dm.vals.push_back(d(sample[i], sample[k]));
            ym.vals.push_back(hom(sample[k], sample[i]));
        }
        family.push_back(std::move(dm));
        family.push_back(std::move(ym));
    }

    // way-below identity, sound direction: hom(x, sup phi) <= grid meet over y << x.
    r.cond_way_below_identity = true;
    for (const Member& f : family)
        for (int i = 0; i < m; ++i) {
            double x = sample[i];
            double meet = 1.0;
            for (int k = 0; k < m; ++k)
                if (classical_wb(s.kind, sample[k], x)) meet = std::min(meet, f.vals[k]);
            if (!approx_le(hom(x, f.sup), meet, eps)) {
                if (r.cond_way_below_identity)
                    r.witness = "way-below identity fails at x=" + format_value(x) +
                                ", sup phi=" + format_value(f.sup);
                r.cond_way_below_identity = false;
            }
        }

    // adjunction identity, sound direction of d -| sup:
    // hom(x, sup phi) <= grid sub(d(x), phi).
    r.cond_adjunction = true;
    for (const Member& f : family)
        for (int i = 0; i < m; ++i) {
            double x = sample[i];
            double sb = 1.0;
            for (int k = 0; k < m; ++k)
                sb = std::min(sb, s.tnorm.residuum(d(x, sample[k]), f.vals[k]));
            if (!approx_le(hom(x, f.sup), sb, eps)) {
                if (r.cond_adjunction)
                    r.witness = "adjunction identity fails at x=" + format_value(x) +
                                ", sup phi=" + format_value(f.sup);
                r.cond_adjunction = false;
            }
        }

    r.conditions_agree = (r.cond_adjunction == r.cond_d_preserves_order) &&
                        (r.cond_way_below_identity == r.cond_d_preserves_order);
    r.is_continuous_lattice = r.cond_d_preserves_order && r.cond_adjunction &&
                              r.cond_way_below_identity;
    return r;
}

nlohmann::json InterpolationReport::to_json() const {
    return {{"pass", pass},
            {"max_excess", max_excess},
            {"max_deficit", max_deficit},
            {"slack", slack},
            {"witness", witness}};
}

InterpolationReport check_interpolation(const FiniteQOrder& X, double eps) {
    InterpolationReport r;
    r.slack = eps;
    WayBelowTable wt = way_below_finite(X, eps);
    const int n = X.size();
    r.pass = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            double best = 0.0;
            for (int z = 0; z < n; ++z)
                best = std::max(best, X.tnorm.conj(wt.w[z][y], wt.w[x][z]));
            r.max_excess = std::max(r.max_excess, best - wt.w[x][y]);
            r.max_deficit = std::max(r.max_deficit, wt.w[x][y] - best);
            if (best > wt.w[x][y] + eps || best < wt.w[x][y] - eps) {
                r.pass = false;
                if (r.witness.empty())
                    r.witness = "(" + X.elements[x] + "," + X.elements[y] + ")";
            }
        }
    return r;
}

InterpolationReport check_interpolation(const ParamStructure& s, int grid_n, double eps) {
    if (s.kind == ShapeKind::power)
        throw input_error("check_interpolation: power shapes not supported directly");
    InterpolationReport r;
    r.slack = grid_slack(grid_n, eps);
    std::vector<double> sample = continuity_sample(s.tnorm, grid_n);
    auto d = [&](double t, double x) { return param_d(s, CPoint::val(t), CPoint::val(x)); };
    r.pass = true;
    for (double x : sample)
        for (double y : sample) {
            double target = d(y, x);  // w(x, y)
            std::vector<double> zs = sample;
            zs.push_back((x + y) / 2.0);  // interpolant candidate between the pair
            double best = 0.0;
            for (double z : zs) best = std::max(best, s.tnorm.conj(d(y, z), d(z, x)));
            r.max_excess = std::max(r.max_excess, best - target);
            r.max_deficit = std::max(r.max_deficit, target - best);
            if (best > target + eps || best < target - r.slack) {
                r.pass = false;
                if (r.witness.empty())
                    r.witness = "(x=" + format_value(x) + ", y=" + format_value(y) + ")";
            }
        }
    return r;
}

PowerWayBelow way_below_power(const ParamStructure& power, const std::vector<double>& xs,
                              const std::vector<double>& ys, double eps) {
    if (power.kind != ShapeKind::power) throw input_error("way_below_power: power shape required");
    if (xs.size() != ys.size()) throw input_error("way_below_power: arity mismatch");
    ParamStructure base = power;
    base.kind = power.base;
    if (base.kind == ShapeKind::x_infinity)
        throw input_error("way_below_power: xinf base has no bottom element");

    PowerWayBelow out;
    out.upper_bound = 1.0;
    for (size_t i = 0; i < xs.size(); ++i)
        out.upper_bound =
            std::min(out.upper_bound, param_d(base, CPoint::val(ys[i]), CPoint::val(xs[i])));
    // On a finite index set every tuple has bottom in all but finitely many
    // coordinates, so the product law is an equality.
    out.equality = true;
    (void)eps;
    return out;
}

}  // namespace udom
