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

#include "udom/approach.hpp"

#include <fstream>
#include <set>

namespace udom {

std::vector<unsigned> all_masks(int n) {
    std::vector<unsigned> out(1u << n);
    for (unsigned m = 0; m < out.size(); ++m) out[m] = m;
    return out;
}

namespace {

double min_over_mask(const std::vector<double>& v, unsigned mask) {
    double m = 1.0;
    for (size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) m = std::min(m, v[i]);
    return m;
}

}  // namespace

ApproachTable ApproachTable::from_json(const nlohmann::json& j) {
    ApproachTable T;
    if (!j.contains("elements") || !j.contains("delta"))
        throw input_error("approach file needs \"elements\" and \"delta\"");
    T.tnorm = j.contains("tnorm") ? TNorm::from_json(j["tnorm"]) : TNorm::godel();
    T.elements = j["elements"].get<std::vector<std::string>>();
    const int n = T.size();
    if (n > kMaxPoints) throw input_error("approach table carrier capped at 12 points");
    T.delta.assign(n, std::vector<double>(1u << n, -1.0));
    for (auto it = j["delta"].begin(); it != j["delta"].end(); ++it) {
        unsigned mask = static_cast<unsigned>(std::stoul(it.key()));
        if (mask >= (1u << n)) throw input_error("delta mask out of range: " + it.key());
        auto col = it.value().get<std::vector<double>>();
        if (static_cast<int>(col.size()) != n)
            throw input_error("delta column length mismatch at mask " + it.key());
        for (int x = 0; x < n; ++x) T.delta[x][mask] = clamp01(col[x]);
    }
    // Singletons must be present; omitted masks default to the Gamma
    // extension of the singleton data and are flagged.
    for (int i = 0; i < n; ++i)
        if (T.delta[0][1u << i] < 0)
            throw input_error("approach file must give delta for every singleton");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (T.delta[0][mask] >= 0) continue;
        T.defaulted_masks.push_back(mask);
        for (int x = 0; x < n; ++x) {
            double v = 0.0;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) v = std::max(v, T.delta[x][1u << i]);
            T.delta[x][mask] = v;
        }
    }
    return T;
}

ApproachTable ApproachTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open approach file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json ApproachTable::to_json() const {
    nlohmann::json d = nlohmann::json::object();
    for (unsigned mask = 0; mask < subsets(); ++mask) {
        std::vector<double> col(size());
        for (int x = 0; x < size(); ++x) col[x] = delta[x][mask];
        d[std::to_string(mask)] = col;
    }
    return {{"tnorm", tnorm.to_json()}, {"elements", elements}, {"delta", d}};
}

ApproachCheck check_approach_axioms(const ApproachTable& T, double eps) {
    ApproachCheck c;
    const int n = T.size();
    const unsigned full = T.subsets();
    auto note = [&](const std::string& s) {
        if (c.violations.size() < 8) c.violations.push_back(s);
    };

    c.a1 = c.a2 = c.a3 = c.a4 = true;
    for (int x = 0; x < n; ++x) {
        if (!approx_one(T.at(x, 1u << x), eps)) {
            c.a1 = false;
            note("(A1) delta(" + T.elements[x] + ",{" + T.elements[x] + "}) = " +
                 format_value(T.at(x, 1u << x)));
        }
        if (!approx_zero(T.at(x, 0), eps)) {
            c.a2 = false;
            note("(A2) delta(" + T.elements[x] + ",{}) = " + format_value(T.at(x, 0)));
        }
    }
    for (unsigned A = 0; A < full; ++A)
        for (unsigned B = 0; B < full; ++B) {
            // (A4) needs the meet over B of delta(b, A) once per pair.
            double meet = 1.0;
            for (int b = 0; b < n; ++b)
                if (B & (1u << b)) meet = std::min(meet, T.at(b, A));
            for (int x = 0; x < n; ++x) {
                if (c.a3 || c.violations.size() < 8) {
                    double lhs = T.at(x, A | B);
                    double rhs = std::max(T.at(x, A), T.at(x, B));
                    if (!approx_eq(lhs, rhs, eps)) {
                        c.a3 = false;
                        note("(A3) at " + T.elements[x] + ", masks " + std::to_string(A) + "," +
                             std::to_string(B));
                    }
                }
                if (!approx_le(T.tnorm.conj(meet, T.at(x, B)), T.at(x, A), eps)) {
                    c.a4 = false;
                    note("(A4) at " + T.elements[x] + ", masks A=" + std::to_string(A) +
                         " B=" + std::to_string(B));
                }
            }
        }

    FiniteQOrder om = omega_of(T);
    c.separated = check_q_order(om, eps).separated;
    c.pass = c.a1 && c.a2 && c.a3 && c.a4;
    return c;
}

nlohmann::json ApproachCheck::to_json() const {
    return {{"pass", pass},      {"a1", a1},
            {"a2", a2},          {"a3", a3},
            {"a4", a4},          {"separated", separated},
            {"violations", violations}};
}

ApproachTable gamma(const FiniteQOrder& X) {
    if (X.size() > ApproachTable::kMaxPoints)
        throw input_error("gamma: carrier capped at 12 points");
    ApproachTable T;
    T.tnorm = X.tnorm;
    T.elements = X.elements;
    const int n = X.size();
    T.delta.assign(n, std::vector<double>(1u << n, 0.0));
    for (int x = 0; x < n; ++x)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            double v = 0.0;
            for (int a = 0; a < n; ++a)
                if (mask & (1u << a)) v = std::max(v, X.alpha[x][a]);
            T.delta[x][mask] = v;
        }
    return T;
}

FiniteQOrder omega_of(const ApproachTable& T) {
    FiniteQOrder X;
    X.tnorm = T.tnorm;
    X.elements = T.elements;
    const int n = T.size();
    X.alpha.assign(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) X.alpha[x][y] = T.at(x, 1u << y);
    return X;
}

ApproachTable space_K(const TNorm& t, int grid_n) {
    if (grid_n < 1) throw input_error("space_K: grid_n >= 1");
    if (grid_n + 1 > ApproachTable::kMaxPoints)
        throw input_error("space_K: grid carrier capped at 12 points");
    ApproachTable T;
    T.tnorm = t;
    const int n = grid_n + 1;
    std::vector<double> pts;
    for (int i = 0; i < n; ++i) {
        pts.push_back(double(i) / grid_n);
        T.elements.push_back(format_value(pts.back()));
    }
    T.delta.assign(n, std::vector<double>(1u << n, 0.0));
    for (int x = 0; x < n; ++x)
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            T.delta[x][mask] = t.residuum(min_over_mask(pts, mask), pts[x]);
    return T;
}

std::vector<double> closure(const ApproachTable& T, const std::vector<double>& lambda) {
    const int n = T.size();
    if (static_cast<int>(lambda.size()) != n) throw input_error("closure: vector length mismatch");
    std::set<double> levels{0.0, 1.0};
    for (double v : lambda) levels.insert(v);
    std::vector<double> out(n, 0.0);
    for (double p : levels) {
        unsigned mask = 0;
        for (int y = 0; y < n; ++y)
            if (lambda[y] >= p - kEps) mask |= (1u << y);
        for (int x = 0; x < n; ++x)
            out[x] = std::max(out[x], T.tnorm.conj(p, T.at(x, mask)));
    }
    return out;
}

bool kappa_membership(const ApproachTable& T, const std::vector<double>& lambda, double eps,
                      std::string* witness) {
    const int n = T.size();
    if (static_cast<int>(lambda.size()) != n)
        throw input_error("kappa_membership: vector length mismatch");
    for (int x = 0; x < n; ++x)
        for (unsigned mask = 1; mask < T.subsets(); ++mask) {
            double bound = T.tnorm.residuum(min_over_mask(lambda, mask), lambda[x]);
            if (!approx_le(T.at(x, mask), bound, eps)) {
                if (witness)
                    *witness = "delta(" + T.elements[x] + ", mask " + std::to_string(mask) +
                               ") = " + format_value(T.at(x, mask)) + " > " + format_value(bound);
                return false;
            }
        }
    return true;
}

ApproachTable subspace(const ApproachTable& T, unsigned point_mask) {
    ApproachTable S;
    S.tnorm = T.tnorm;
    std::vector<int> keep;
    for (int i = 0; i < T.size(); ++i)
        if (point_mask & (1u << i)) {
            keep.push_back(i);
            S.elements.push_back(T.elements[i]);
        }
    const int m = static_cast<int>(keep.size());
    S.delta.assign(m, std::vector<double>(1u << m, 0.0));
    for (int x = 0; x < m; ++x)
        for (unsigned sm = 0; sm < (1u << m); ++sm) {
            unsigned big = 0;
            for (int b = 0; b < m; ++b)
                if (sm & (1u << b)) big |= (1u << keep[b]);
            S.delta[x][sm] = T.at(keep[x], big);
        }
    return S;
}

namespace {

std::vector<std::vector<double>> grid_vectors(int n, int value_grid) {
    std::vector<std::vector<double>> out;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = double(idx[i]) / value_grid;
        out.push_back(v);
        int k = n - 1;
        while (k >= 0 && idx[k] == value_grid) { idx[k] = 0; --k; }
        if (k < 0) break;
        ++idx[k];
    }
    return out;
}

}  // namespace

ApproachTable zeta_of_cotopology(const Cotopology& tau, int value_grid, double eps) {
    const int n = static_cast<int>(tau.elements.size());
    if (n > ApproachTable::kMaxPoints) throw input_error("zeta: carrier capped at 12 points");
    std::vector<std::vector<double>> family;
    for (auto& v : grid_vectors(n, value_grid))
        if (tau.is_closed(v)) family.push_back(v);

    ApproachTable T;
    T.tnorm = tau.tnorm;
    T.elements = tau.elements;
    T.delta.assign(n, std::vector<double>(1u << n, 0.0));
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        for (int x = 0; x < n; ++x) {
            double m = 1.0;
            for (const auto& psi : family) {
                bool above = true;
                for (int a = 0; a < n && above; ++a)
                    if ((mask & (1u << a)) && !approx_one(psi[a], eps)) above = false;
                if (above) m = std::min(m, psi[x]);
            }
            T.delta[x][mask] = mask == 0 ? 0.0 : m;
        }
    return T;
}

RoundTripReport functor_round_trips(const ApproachTable& T, const FiniteQOrder& X,
                                    const Cotopology* tau, int value_grid, double eps) {
    RoundTripReport r;
    const int n = T.size();

    // zeta(kappa(T)) = T: the closure of k_A in kappa(T) is the pointwise
    // meet of the kappa-closed family above 1_A; delta(-, A) itself must be
    // in that family, and no member may undercut it.
    r.zeta_kappa_identity = true;
    for (unsigned A = 1; A < T.subsets() && r.zeta_kappa_identity; ++A) {
        std::vector<double> dA(n);
        for (int x = 0; x < n; ++x) dA[x] = T.at(x, A);
        std::string w;
        if (!kappa_membership(T, dA, eps, &w)) {
            r.zeta_kappa_identity = false;
            r.witness = "delta(-, " + std::to_string(A) + ") not kappa-closed: " + w;
            break;
        }
        // candidates above 1_A from the column family
        for (unsigned B = 1; B < T.subsets(); ++B) {
            bool above = true;
            for (int a = 0; a < n && above; ++a)
                if ((A & (1u << a)) && !approx_one(T.at(a, B), eps)) above = false;
            if (!above) continue;
            for (int x = 0; x < n; ++x)
                if (T.at(x, B) < T.at(x, A) - eps) {
                    r.zeta_kappa_identity = false;
                    r.witness = "closure of mask " + std::to_string(A) + " undercut by mask " +
                                std::to_string(B);
                }
        }
    }

    // Omega(Gamma(X)) = X on singletons.
    r.omega_gamma_identity = true;
    FiniteQOrder og = omega_of(gamma(X));
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
            if (!approx_eq(og.alpha[x][y], X.alpha[x][y], eps)) r.omega_gamma_identity = false;

    // kappa(zeta(tau)) = tau on the enumerated candidate vectors.
    r.kappa_zeta_identity = true;
    if (tau) {
        ApproachTable Z = zeta_of_cotopology(*tau, value_grid, eps);
        for (auto& v : grid_vectors(static_cast<int>(tau->elements.size()), value_grid)) {
            bool in_tau = tau->is_closed(v);
            bool in_kappa = kappa_membership(Z, v, eps);
            if (in_tau != in_kappa) {
                r.kappa_zeta_identity = false;
                r.witness = "kappa(zeta(tau)) disagrees with tau on a candidate vector";
                break;
            }
        }
    }
    return r;
}

nlohmann::json RoundTripReport::to_json() const {
    return {{"zeta_kappa_identity", zeta_kappa_identity},
            {"kappa_zeta_identity", kappa_zeta_identity},
            {"omega_gamma_identity", omega_gamma_identity},
            {"witness", witness}};
}

}  // namespace udom
