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

#include "udom/order.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace udom {

int FiniteQOrder::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == label) return i;
    return -1;
}

FiniteQOrder FiniteQOrder::from_json(const nlohmann::json& j) {
    FiniteQOrder X;
    if (!j.is_object() || !j.contains("elements") || !j.contains("alpha"))
        throw input_error("order file needs \"elements\" and \"alpha\"");
    X.tnorm = j.contains("tnorm") ? TNorm::from_json(j["tnorm"]) : TNorm::godel();
    X.elements = j["elements"].get<std::vector<std::string>>();
    const auto& a = j["alpha"];
    if (!a.is_array() || a.size() != X.elements.size())
        throw input_error("alpha must be a square table matching elements");
    for (const auto& row : a) {
        if (!row.is_array() || row.size() != X.elements.size())
            throw input_error("alpha must be a square table matching elements");
        std::vector<double> r;
        for (const auto& v : row) {
            double d = v.get<double>();
            if (d < -kEps || d > 1 + kEps) throw input_error("alpha entries must lie in [0,1]");
            r.push_back(clamp01(d));
        }
        X.alpha.push_back(std::move(r));
    }
    return X;
}

FiniteQOrder FiniteQOrder::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open order file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json FiniteQOrder::to_json() const {
    return {{"tnorm", tnorm.to_json()}, {"elements", elements}, {"alpha", alpha}};
}

OrderCheck check_q_order(const FiniteQOrder& X, double eps) {
    OrderCheck c;
    const int n = X.size();
    c.reflexive = true;
    c.transitive = true;
    for (int x = 0; x < n; ++x) {
        if (!approx_one(X.alpha[x][x], eps)) {
            c.reflexive = false;
            c.violations.push_back("reflexivity: X(" + X.elements[x] + "," + X.elements[x] +
                                   ") = " + format_value(X.alpha[x][x]));
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                double lhs = X.tnorm.conj(X.alpha[y][z], X.alpha[x][y]);
                if (!approx_le(lhs, X.alpha[x][z], eps)) {
                    c.transitive = false;
                    c.violations.push_back(
                        "transitivity: X(" + X.elements[y] + "," + X.elements[z] + ") & X(" +
                        X.elements[x] + "," + X.elements[y] + ") = " + format_value(lhs) + " > " +
                        format_value(X.alpha[x][z]) + " = X(" + X.elements[x] + "," +
                        X.elements[z] + ")");
                }
            }
    c.valid = c.reflexive && c.transitive;

    c.underlying.assign(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) c.underlying[x][y] = approx_one(X.alpha[x][y], eps);
    c.separated = true;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (c.underlying[x][y] && c.underlying[y][x]) c.separated = false;
    return c;
}

nlohmann::json OrderCheck::to_json(const FiniteQOrder& X) const {
    nlohmann::json und = nlohmann::json::array();
    for (int x = 0; x < X.size(); ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 0; y < X.size(); ++y) row.push_back(static_cast<int>(underlying[x][y]));
        und.push_back(row);
    }
    return {{"valid", valid},
            {"reflexive", reflexive},
            {"transitive", transitive},
            {"separated", separated},
            {"violations", violations},
            {"underlying_order", und}};
}

bool is_weight_vector(const FiniteQOrder& X, const std::vector<double>& v, double eps,
                      std::string* witness) {
    if (static_cast<int>(v.size()) != X.size()) {
        if (witness) *witness = "size mismatch";
        return false;
    }
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y) {
            if (!approx_le(X.tnorm.conj(v[y], X.alpha[x][y]), v[x], eps)) {
                if (witness)
                    *witness = "phi(" + X.elements[y] + ") & X(" + X.elements[x] + "," +
                               X.elements[y] + ") > phi(" + X.elements[x] + ")";
                return false;
            }
        }
    return true;
}

Weight make_weight(const FiniteQOrder& X, std::vector<double> v, double eps) {
    std::string w;
    if (!is_weight_vector(X, v, eps, &w)) throw input_error("invalid weight: " + w);
    return Weight{&X, std::move(v)};
}

double sub_weight(const Weight& phi, const Weight& psi) {
    if (phi.over != psi.over) throw input_error("sub: weights over different carriers");
    const FiniteQOrder& X = *phi.over;
    double m = 1.0;
    for (int x = 0; x < X.size(); ++x)
        m = std::min(m, X.tnorm.residuum(phi.values[x], psi.values[x]));
    return m;
}

Weight yoneda(const FiniteQOrder& X, int x) {
    if (x < 0 || x >= X.size()) throw input_error("yoneda: unknown element");
    std::vector<double> col(X.size());
    for (int z = 0; z < X.size(); ++z) col[z] = X.alpha[z][x];
    return Weight{&X, std::move(col)};
}

Weight weight_join(const Weight& a, const Weight& b) {
    if (a.over != b.over) throw input_error("weight_join: carrier mismatch");
    std::vector<double> v(a.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.values[i], b.values[i]);
    return Weight{a.over, std::move(v)};
}

Weight weight_meet(const Weight& a, const Weight& b) {
    if (a.over != b.over) throw input_error("weight_meet: carrier mismatch");
    std::vector<double> v(a.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::min(a.values[i], b.values[i]);
    return Weight{a.over, std::move(v)};
}

Weight weight_scale(double p, const Weight& a) {
    std::vector<double> v(a.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.over->tnorm.conj(p, a.values[i]);
    return Weight{a.over, std::move(v)};
}

Weight weight_residuate(double p, const Weight& a) {
    std::vector<double> v(a.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.over->tnorm.residuum(p, a.values[i]);
    return Weight{a.over, std::move(v)};
}

Weight zero_weight(const FiniteQOrder& X) {
    return Weight{&X, std::vector<double>(X.size(), 0.0)};
}

SupResult supremum_of_weight(const FiniteQOrder& X, const Weight& phi, double eps) {
    if (phi.over != &X) throw input_error("supremum_of_weight: carrier mismatch");
    std::vector<double> target(X.size());
    for (int y = 0; y < X.size(); ++y) target[y] = sub_weight(phi, yoneda(X, y));
    SupResult r;
    for (int a = 0; a < X.size(); ++a) {
        bool ok = true;
        for (int y = 0; y < X.size() && ok; ++y)
            if (!approx_eq(X.alpha[a][y], target[y], eps)) ok = false;
        if (ok) r.matches.push_back(a);
    }
    if (!r.matches.empty()) r.element = r.matches.front();
    r.unique = r.matches.size() <= 1;
    return r;
}

std::optional<int> cotensor(const FiniteQOrder& X, double p, int y, double eps) {
    if (y < 0 || y >= X.size()) throw input_error("cotensor: unknown element");
    for (int c = 0; c < X.size(); ++c) {
        bool ok = true;
        for (int x = 0; x < X.size() && ok; ++x)
            if (!approx_eq(X.alpha[x][c], X.tnorm.residuum(p, X.alpha[x][y]), eps)) ok = false;
        if (ok) return c;
    }
    return std::nullopt;
}

bool preserves_qorder(const QMap& f, double eps, std::string* witness) {
    const FiniteQOrder& X = *f.source;
    const FiniteQOrder& Y = *f.target;
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
            if (!approx_le(X.alpha[x][y], Y.alpha[f(x)][f(y)], eps)) {
                if (witness)
                    *witness = "X(" + X.elements[x] + "," + X.elements[y] + ") = " +
                               format_value(X.alpha[x][y]) + " > " +
                               format_value(Y.alpha[f(x)][f(y)]) + " = Y(f x, f y)";
                return false;
            }
    return true;
}

AdjunctionCheck check_adjunction(const QMap& f, const QMap& g, double eps) {
    if (f.source != g.target || f.target != g.source)
        throw input_error("check_adjunction: carrier mismatch");
    const FiniteQOrder& X = *f.source;
    const FiniteQOrder& Y = *f.target;
    AdjunctionCheck c;
    c.adjoint = true;
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < Y.size(); ++y)
            if (!approx_eq(Y.alpha[f(x)][y], X.alpha[x][g(y)], eps)) {
                if (c.adjoint)
                    c.witness = "Y(f " + X.elements[x] + ", " + Y.elements[y] + ") = " +
                                format_value(Y.alpha[f(x)][y]) + " != " +
                                format_value(X.alpha[x][g(y)]) + " = X(" + X.elements[x] +
                                ", g " + Y.elements[y] + ")";
                c.adjoint = false;
            }

    // The two-condition characterization: both maps preserve the [0,1]-order
    // and the underlying maps form a Galois connection.
    std::string w;
    bool chr = preserves_qorder(f, eps, &w) && preserves_qorder(g, eps, &w);
    if (chr)
        for (int x = 0; x < X.size() && chr; ++x)
            for (int y = 0; y < Y.size() && chr; ++y)
                if (Y.und(f(x), y, eps) != X.und(x, g(y), eps)) chr = false;
    c.characterization = chr;
    c.criteria_agree = (c.adjoint == c.characterization);
    return c;
}

nlohmann::json AdjunctionCheck::to_json() const {
    return {{"adjoint", adjoint},
            {"characterization", characterization},
            {"criteria_agree", criteria_agree},
            {"witness", witness}};
}

FiniteQOrder product_order(const std::vector<FiniteQOrder>& factors) {
    if (factors.empty()) return one_point_order(TNorm::godel());
    FiniteQOrder P;
    P.tnorm = factors.front().tnorm;
    for (const auto& f : factors)
        if (f.tnorm.to_json() != P.tnorm.to_json())
            throw input_error("product_order: factors must share the t-norm");

    int total = 1;
    for (const auto& f : factors) total *= f.size();

    // mixed-radix decode, first factor most significant
    auto decode = [&](int idx) {
        std::vector<int> c(factors.size());
        for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
            c[k] = idx % factors[k].size();
            idx /= factors[k].size();
        }
        return c;
    };

    for (int i = 0; i < total; ++i) {
        auto c = decode(i);
        std::string lab = "(";
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) lab += ",";
            lab += factors[k].elements[c[k]];
        }
        lab += ")";
        P.elements.push_back(lab);
    }
    P.alpha.assign(total, std::vector<double>(total, 1.0));
    for (int i = 0; i < total; ++i) {
        auto ci = decode(i);
        for (int j = 0; j < total; ++j) {
            auto cj = decode(j);
            double m = 1.0;
            for (size_t k = 0; k < factors.size(); ++k)
                m = std::min(m, factors[k].alpha[ci[k]][cj[k]]);
            P.alpha[i][j] = m;
        }
    }
    return P;
}

FiniteQOrder opposite(const FiniteQOrder& X) {
    FiniteQOrder O = X;
    for (int i = 0; i < X.size(); ++i)
        for (int j = 0; j < X.size(); ++j) O.alpha[i][j] = X.alpha[j][i];
    return O;
}

FiniteQOrder one_point_order(const TNorm& t) {
    FiniteQOrder X;
    X.tnorm = t;
    X.elements = {"*"};
    X.alpha = {{1.0}};
    return X;
}

FiniteQOrder omega_order(const TNorm& t, std::vector<std::string> labels,
                         const std::vector<std::vector<bool>>& leq) {
    FiniteQOrder X;
    X.tnorm = t;
    X.elements = std::move(labels);
    const int n = X.size();
    X.alpha.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) X.alpha[i][j] = leq[i][j] ? 1.0 : 0.0;
    return X;
}

Weight push_forward(const QMap& f, const Weight& phi) {
    const FiniteQOrder& X = *f.source;
    const FiniteQOrder& Y = *f.target;
    if (phi.over != &X) throw input_error("push_forward: carrier mismatch");
    std::vector<double> v(Y.size(), 0.0);
    for (int y = 0; y < Y.size(); ++y)
        for (int x = 0; x < X.size(); ++x)
            v[y] = std::max(v[y], Y.tnorm.conj(phi.values[x], Y.alpha[y][f(x)]));
    return Weight{&Y, std::move(v)};
}

Weight pull_back(const QMap& f, const Weight& psi) {
    const FiniteQOrder& X = *f.source;
    if (psi.over != f.target) throw input_error("pull_back: carrier mismatch");
    std::vector<double> v(X.size());
    for (int x = 0; x < X.size(); ++x) v[x] = psi.values[f(x)];
    return Weight{&X, std::move(v)};
}

std::vector<double> critical_values(const FiniteQOrder& X) {
    std::set<double> s{0.0, 1.0};
    for (const auto& row : X.alpha)
        for (double v : row) s.insert(v);
    for (const Piece& p : X.tnorm.pieces()) {
        s.insert(p.lo);
        s.insert(p.hi);
    }
    std::vector<double> sorted(s.begin(), s.end());
    std::vector<double> out = sorted;
    for (size_t i = 0; i + 1 < sorted.size(); ++i) out.push_back((sorted[i] + sorted[i + 1]) / 2);
    std::sort(out.begin(), out.end());
    return out;
}

bool snapshot_complete(const FiniteQOrder& X, double eps, std::string* witness) {
    const int n = X.size();
    // conical joins of every subset
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<double> row(n, 1.0);
        for (int s = 0; s < n; ++s)
            if (mask & (1u << s))
                for (int z = 0; z < n; ++z) row[z] = std::min(row[z], X.alpha[s][z]);
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
            bool ok = true;
            for (int z = 0; z < n && ok; ++z)
                if (!approx_eq(X.alpha[j][z], row[z], eps)) ok = false;
            found = ok;
        }
        if (!found) {
            if (witness) *witness = "missing conical join of mask " + std::to_string(mask);
            return false;
        }
    }
    // tensors p (x) x against the critical probe values
    for (double p : critical_values(X))
        for (int x = 0; x < n; ++x) {
            bool found = false;
            for (int j = 0; j < n && !found; ++j) {
                bool ok = true;
                for (int z = 0; z < n && ok; ++z)
                    if (!approx_eq(X.alpha[j][z], X.tnorm.residuum(p, X.alpha[x][z]), eps))
                        ok = false;
                found = ok;
            }
            if (!found) {
                if (witness)
                    *witness = "missing tensor p=" + format_value(p) + " with " + X.elements[x];
                return false;
            }
        }
    return true;
}

}  // namespace udom
