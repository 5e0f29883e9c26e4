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

#include "udom/scott.hpp"

#include <map>
#include <set>

namespace udom {

ScottContext scott_context_finite(const FiniteQOrder& X, double eps) {
    ScottContext ctx;
    ctx.X = X;
    ctx.provenance = "finite";
    for (int a = 0; a < ctx.X.size(); ++a) {
        ctx.fc.push_back(yoneda(ctx.X, a).values);
        ctx.fc_sup.push_back(a);
    }
    ctx.w = way_below_finite(ctx.X, eps).w;
    ctx.continuous = check_continuity(ctx.X, eps).is_continuous_lattice;
    return ctx;
}

ScottContext scott_context_param(const ParamStructure& s, int grid_n, double eps) {
    if (s.kind == ShapeKind::power)
        throw input_error("scott_context_param: build the base context and use sigma_product_check");
    ScottContext ctx;
    ctx.X = grid_snapshot(s, grid_n);
    ctx.grid_n = grid_n;
    ctx.provenance = s.shape_name();
    ctx.has_param = true;
    ctx.pstruct = s;
    auto pts = grid_carrier(s, grid_n);
    const int n = static_cast<int>(pts.size());
    ctx.w.assign(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) ctx.w[x][y] = param_d(s, pts[y], pts[x]);
    // representables plus the d weights, both with known suprema
    for (int a = 0; a < n; ++a) {
        ctx.fc.push_back(yoneda(ctx.X, a).values);
        ctx.fc_sup.push_back(a);
        std::vector<double> dv(n);
        for (int x = 0; x < n; ++x) dv[x] = ctx.w[x][a];
        ctx.fc.push_back(std::move(dv));
        ctx.fc_sup.push_back(a);
    }
    ctx.continuous = check_continuity(s, grid_n, eps).is_continuous_lattice;
    return ctx;
}

namespace {

// z samples for closed-form meets over a parametric structure: grid points,
// piece endpoints, and one-sided geometric refinements that capture the
// open-range limits the grid itself cannot see.
std::vector<double> refined_samples(const ParamStructure& s, int grid_n) {
    std::set<double> base;
    for (int i = 0; i <= grid_n; ++i) base.insert(double(i) / grid_n);
    for (const Piece& p : s.tnorm.pieces()) {
        base.insert(p.lo);
        base.insert(p.hi);
    }
    std::vector<double> out(base.begin(), base.end());
    for (double b : base) {
        double step = 1.0 / grid_n;
        for (int k = 0; k < 40; ++k) {
            step /= 2.0;
            if (b + step < 1.0) out.push_back(b + step);
            if (b - step > 0.0) out.push_back(b - step);
        }
    }
    return out;
}

bool param_refinable(const ScottContext& ctx) {
    return ctx.has_param && ctx.pstruct.kind != ShapeKind::x_infinity;
}

// Closed-form family check: sub(lambda_t, phi) = phi(t) for the d weights
// and representables of the parametric structure, sampled beyond the grid.
ScottClosedVerdict scott_closed_param(const ScottContext& ctx,
                                      const std::function<double(double)>& phi, double eps) {
    ScottClosedVerdict v;
    v.defined = true;
    v.closed = true;
    const ParamStructure& s = ctx.pstruct;
    auto zs = refined_samples(s, ctx.grid_n);
    for (int a = 0; a <= ctx.grid_n; ++a) {
        double t = double(a) / ctx.grid_n;
        for (int member = 0; member < 2; ++member) {
            double sb = 1.0;
            for (double z : zs) {
                double lam = member == 0 ? param_d(s, CPoint::val(t), CPoint::val(z))
                                         : param_hom(s, CPoint::val(z), CPoint::val(t));
                sb = std::min(sb, s.tnorm.residuum(lam, phi(z)));
            }
            if (!approx_eq(sb, phi(t), eps)) {
                v.closed = false;
                v.witness = std::string("sub(") + (member == 0 ? "d(" : "yoneda(") +
                            format_value(t) + "), phi) = " + format_value(sb) +
                            " != phi(sup) = " + format_value(phi(t));
                return v;
            }
        }
    }
    return v;
}

}  // namespace

ScottClosedVerdict is_scott_closed(const ScottContext& ctx, const std::vector<double>& phi,
                                   double eps) {
    ScottClosedVerdict v;
    if (!is_weight_vector(ctx.X, phi, eps)) {
        v.defined = true;
        v.closed = false;
        v.witness = "not a weight";
        return v;
    }
    if (param_refinable(ctx)) {
        // Judge the canonical lower extension of the grid data (the
        // pushforward along the grid inclusion, which restricts back to phi).
        const ParamStructure& s = ctx.pstruct;
        const int n = ctx.grid_n;
        auto ext = [&](double z) {
            double m = 0.0;
            for (int y = 0; y <= n; ++y)
                m = std::max(m, s.tnorm.conj(phi[y], param_hom(s, CPoint::val(z),
                                                               CPoint::val(double(y) / n))));
            return m;
        };
        return scott_closed_param(ctx, ext, eps);
    }
    Weight phw{&ctx.X, phi};
    for (size_t k = 0; k < ctx.fc.size(); ++k) {
        if (ctx.fc_sup[k] < 0) {
            v.defined = false;
            v.witness = "family member without a supremum";
            return v;
        }
        Weight lam{&ctx.X, ctx.fc[k]};
        double lhs = sub_weight(lam, phw);
        double rhs = phi[ctx.fc_sup[k]];
        if (!approx_eq(lhs, rhs, eps)) {
            v.defined = true;
            v.closed = false;
            v.witness = "sub(lambda, phi) = " + format_value(lhs) + " != phi(sup lambda) = " +
                        format_value(rhs) + " for family member " + std::to_string(k);
            return v;
        }
    }
    v.defined = true;
    v.closed = true;
    return v;
}

ScottClosedVerdict is_scott_closed_fn(const ScottContext& ctx,
                                      const std::function<double(double)>& phi, double eps) {
    if (!param_refinable(ctx))
        throw input_error("is_scott_closed_fn: parametric context required");
    return scott_closed_param(ctx, phi, eps);
}

std::vector<double> scott_closure(const ScottContext& ctx, const std::vector<double>& phi) {
    if (!ctx.continuous)
        throw input_error("scott_closure: structure did not pass check_continuity");
    const int n = ctx.X.size();
    if (static_cast<int>(phi.size()) != n) throw input_error("scott_closure: length mismatch");
    std::vector<double> out(n);
    for (int a = 0; a < n; ++a) {
        double m = 1.0;
        for (int x = 0; x < n; ++x)
            m = std::min(m, ctx.X.tnorm.residuum(ctx.w[x][a], phi[x]));
        out[a] = m;
    }
    return out;
}

double sigma_delta(const ScottContext& ctx, int x, unsigned mask) {
    if (mask == 0) return 0.0;
    const int n = ctx.X.size();
    if (param_refinable(ctx)) {
        if (!ctx.continuous)
            throw input_error("sigma_delta: structure did not pass check_continuity");
        std::vector<double> members;
        for (int a = 0; a < n; ++a)
            if (mask & (1u << a)) members.push_back(double(a) / ctx.grid_n);
        double xv = double(x) / ctx.grid_n;
        double m = 1.0;
        for (double z : refined_samples(ctx.pstruct, ctx.grid_n)) {
            double phi = 0.0;
            for (double a : members)
                phi = std::max(phi, param_hom(ctx.pstruct, CPoint::val(z), CPoint::val(a)));
            m = std::min(m, ctx.X.tnorm.residuum(
                                param_d(ctx.pstruct, CPoint::val(xv), CPoint::val(z)), phi));
        }
        return m;
    }
    std::vector<double> phi(n, 0.0);
    for (int a = 0; a < n; ++a)
        if (mask & (1u << a))
            for (int z = 0; z < n; ++z) phi[z] = std::max(phi[z], ctx.X.alpha[z][a]);
    return scott_closure(ctx, phi)[x];
}

ApproachTable sigma_table(const ScottContext& ctx) {
    const int n = ctx.X.size();
    if (n > ApproachTable::kMaxPoints) throw input_error("sigma_table: carrier capped at 12");
    ApproachTable T;
    T.tnorm = ctx.X.tnorm;
    T.elements = ctx.X.elements;
    T.delta.assign(n, std::vector<double>(1u << n, 0.0));
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<double> phi(n, 0.0);
        for (int a = 0; a < n; ++a)
            if (mask & (1u << a))
                for (int z = 0; z < n; ++z) phi[z] = std::max(phi[z], ctx.X.alpha[z][a]);
        std::vector<double> cl = scott_closure(ctx, phi);
        for (int x = 0; x < n; ++x) T.delta[x][mask] = cl[x];
    }
    return T;
}

namespace {

std::vector<double> context_values(const ScottContext& ctx) {
    std::set<double> s{0.0, 1.0};
    for (const auto& row : ctx.X.alpha)
        for (double v : row) s.insert(v);
    for (const auto& row : ctx.w)
        for (double v : row) s.insert(v);
    return std::vector<double>(s.begin(), s.end());
}

void enumerate_vectors(const std::vector<double>& values, int n,
                       const std::function<void(const std::vector<double>&)>& visit) {
    std::vector<int> idx(n, 0);
    std::vector<double> v(n);
    while (true) {
        for (int i = 0; i < n; ++i) v[i] = values[idx[i]];
        visit(v);
        int k = n - 1;
        while (k >= 0 && idx[k] == static_cast<int>(values.size()) - 1) { idx[k] = 0; --k; }
        if (k < 0) break;
        ++idx[k];
    }
}

}  // namespace

std::vector<std::vector<double>> enumerate_closed_family(const ScottContext& ctx, double eps) {
    if (ctx.X.size() > 6)
        throw input_error("enumerate_closed_family: carrier capped at 6 points");
    std::vector<std::vector<double>> out;
    enumerate_vectors(context_values(ctx), ctx.X.size(), [&](const std::vector<double>& v) {
        if (!is_weight_vector(ctx.X, v, eps)) return;
        if (is_scott_closed(ctx, v, eps).closed) out.push_back(v);
    });
    return out;
}

SobrietyWitness sobriety_witness(const ScottContext& ctx, const std::vector<double>& lambda,
                                 double eps) {
    SobrietyWitness sw;
    const int n = ctx.X.size();
    if (static_cast<int>(lambda.size()) != n)
        throw input_error("sobriety_witness: length mismatch");

    // precondition: closed, inhabited, irreducible among the closed family
    ScottClosedVerdict cv = is_scott_closed(ctx, lambda, eps);
    if (!cv.closed) {
        sw.message = "lambda is not a closed set: " + cv.witness;
        return sw;
    }
    double top = 0.0;
    for (double v : lambda) top = std::max(top, v);
    if (!approx_one(top, eps)) {
        sw.message = "lambda is not inhabited (sup = " + format_value(top) + ")";
        return sw;
    }
    Weight lw{&ctx.X, lambda};
    if (ctx.X.size() <= 6) {
        auto closed = enumerate_closed_family(ctx, eps);
        for (const auto& p1 : closed)
            for (const auto& p2 : closed) {
                Weight w1{&ctx.X, p1}, w2{&ctx.X, p2};
                double lhs = sub_weight(lw, weight_join(w1, w2));
                double rhs = std::max(sub_weight(lw, w1), sub_weight(lw, w2));
                if (!approx_eq(lhs, rhs, eps)) {
                    sw.message = "lambda is not irreducible among the enumerated closed family";
                    return sw;
                }
            }
    }
    sw.precondition_ok = true;

    // down(lambda) = join_a lambda(a) & w(-, a)
    sw.down_lambda.assign(n, 0.0);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            sw.down_lambda[x] =
                std::max(sw.down_lambda[x], ctx.X.tnorm.conj(lambda[a], ctx.w[x][a]));

    if (!is_weight_vector(ctx.X, sw.down_lambda, eps)) {
        sw.message = "down(lambda) is not a weight at this resolution";
        return sw;
    }
    Weight dl{&ctx.X, sw.down_lambda};
    FCReport fc = is_forward_cauchy(ctx.X, dl, 0, eps);
    if (!fc.forward_cauchy) {
        sw.message = "down(lambda) is not forward Cauchy: " + fc.witness;
        return sw;
    }
    SupResult s = supremum_of_weight(ctx.X, dl, eps);
    if (!s.element) {
        sw.message = "down(lambda) has no supremum in the snapshot";
        return sw;
    }
    sw.sup_point = *s.element;
    Weight rep = yoneda(ctx.X, *s.element);
    for (int x = 0; x < n; ++x)
        if (!approx_eq(rep.values[x], lambda[x], eps)) {
            sw.message = "lambda differs from the closure of its candidate point at " +
                         ctx.X.elements[x];
            return sw;
        }
    sw.valid = true;
    return sw;
}

nlohmann::json SobrietyWitness::to_json(const FiniteQOrder& X) const {
    nlohmann::json j{{"valid", valid},
                     {"precondition_ok", precondition_ok},
                     {"down_lambda", down_lambda},
                     {"message", message}};
    if (sup_point) j["sup_point"] = X.elements[*sup_point];
    return j;
}

namespace {

double quantize(double v) { return std::round(v * 1e9) / 1e9; }

struct VectorSet {
    std::set<std::vector<double>> items;
    bool insert(std::vector<double> v) {
        for (double& x : v) x = quantize(x);
        return items.insert(std::move(v)).second;
    }
};

}  // namespace

SigmaProductReport sigma_product_check(const ScottContext& ctx, int k, double eps) {
    SigmaProductReport rep;
    if (k < 1 || k > 2 || ctx.X.size() > 3) {
        rep.refused = true;
        rep.witness = "size bounds exceeded (k <= 2, |X| <= 3)";
        return rep;
    }
    const int nb = ctx.X.size();
    if (k == 1) {
        rep.pass = true;
        rep.carrier = nb;
        return rep;
    }

    std::vector<FiniteQOrder> fs(k, ctx.X);
    FiniteQOrder P = product_order(fs);
    const int np = P.size();
    rep.carrier = np;

    // The comparison runs at snapshot level: the finite carrier is its own
    // [0,1]-domain, with the representables as forward Cauchy family.
    ScottContext fin = ctx.grid_n == 0 && !ctx.has_param ? ctx : scott_context_finite(ctx.X, eps);
    auto decode = [&](int idx) {
        std::vector<int> c(k);
        for (int t = k - 1; t >= 0; --t) { c[t] = idx % nb; idx /= nb; }
        return c;
    };

    // way-below on the power via the product law
    std::vector<std::vector<double>> wP(np, std::vector<double>(np, 1.0));
    for (int i = 0; i < np; ++i) {
        auto ci = decode(i);
        for (int j = 0; j < np; ++j) {
            auto cj = decode(j);
            double m = 1.0;
            for (int t = 0; t < k; ++t) m = std::min(m, fin.w[ci[t]][cj[t]]);
            wP[i][j] = m;
        }
    }

    // Sigma(X^k): closure of the down-extension of 1_A through wP
    auto lhs_delta = [&](int x, unsigned mask) {
        if (mask == 0) return 0.0;
        std::vector<double> phi(np, 0.0);
        for (int a = 0; a < np; ++a)
            if (mask & (1u << a))
                for (int z = 0; z < np; ++z) phi[z] = std::max(phi[z], P.alpha[z][a]);
        double m = 1.0;
        for (int z = 0; z < np; ++z)
            m = std::min(m, P.tnorm.residuum(wP[z][x], phi[z]));
        return m;
    };

    // (Sigma X)^k: the strong cotopology generated by cylinders of closed
    // sets of Sigma X, saturated over the context value set.
    auto base_closed = enumerate_closed_family(fin, eps);
    std::vector<double> values = context_values(fin);

    VectorSet family;
    std::vector<std::vector<double>> work;
    auto add = [&](std::vector<double> v) {
        if (family.insert(v)) work.push_back(std::move(v));
    };
    add(std::vector<double>(np, 0.0));
    add(std::vector<double>(np, 1.0));
    for (const auto& psi : base_closed)
        for (int t = 0; t < k; ++t) {
            std::vector<double> cyl(np);
            for (int i = 0; i < np; ++i) cyl[i] = psi[decode(i)[t]];
            add(std::move(cyl));
        }

    const size_t kCap = 300000;
    for (size_t head = 0; head < work.size(); ++head) {
        if (family.items.size() > kCap) {
            rep.refused = true;
            rep.witness = "generated cotopology exceeded the saturation cap";
            return rep;
        }
        std::vector<double> cur = work[head];
        for (double p : values) {
            std::vector<double> rs(np), sc(np);
            for (int i = 0; i < np; ++i) {
                rs[i] = P.tnorm.residuum(p, cur[i]);
                sc[i] = P.tnorm.conj(p, cur[i]);
            }
            add(std::move(rs));
            add(std::move(sc));
        }
        for (size_t other = 0; other <= head; ++other) {
            const auto& o = work[other];
            std::vector<double> jn(np), mt(np);
            for (int i = 0; i < np; ++i) {
                jn[i] = std::max(cur[i], o[i]);
                mt[i] = std::min(cur[i], o[i]);
            }
            add(std::move(jn));
            add(std::move(mt));
        }
    }
    rep.closed_family = static_cast<int>(family.items.size());

    auto rhs_delta = [&](int x, unsigned mask) {
        if (mask == 0) return 0.0;
        double m = 1.0;
        for (const auto& psi : family.items) {
            bool above = true;
            for (int a = 0; a < np && above; ++a)
                if ((mask & (1u << a)) && !approx_one(psi[a], eps)) above = false;
            if (above) m = std::min(m, psi[x]);
        }
        return m;
    };

    rep.pass = true;
    for (unsigned mask = 0; mask < (1u << np); ++mask)
        for (int x = 0; x < np; ++x) {
            double dev = std::fabs(lhs_delta(x, mask) - rhs_delta(x, mask));
            if (dev > rep.max_deviation) {
                rep.max_deviation = dev;
                if (dev > eps)
                    rep.witness = "mask " + std::to_string(mask) + " at " + P.elements[x];
            }
        }
    rep.pass = rep.max_deviation <= eps;
    return rep;
}

nlohmann::json SigmaProductReport::to_json() const {
    return {{"pass", pass},
            {"refused", refused},
            {"max_deviation", max_deviation},
            {"carrier", carrier},
            {"closed_family", closed_family},
            {"witness", witness}};
}

namespace {

// First non-Lukasiewicz region scanning from 0: either a gap between pieces
// (an interval of idempotents) or a product piece. Pairs (p, q, kind).
struct Region {
    double p, q;
    std::string kind;  // "godel-gap" | "product-piece"
};

std::optional<Region> first_non_l_region(const TNorm& t) {
    double cursor = 0.0;
    for (const Piece& pc : t.pieces()) {
        if (pc.lo > cursor + kEps) return Region{cursor, pc.lo, "godel-gap"};
        if (pc.kind == Archetype::product) return Region{pc.lo, pc.hi, "product-piece"};
        cursor = pc.hi;
    }
    if (cursor < 1.0 - kEps) return Region{cursor, 1.0, "godel-gap"};
    return std::nullopt;
}

}  // namespace

InjectivityVerdict classify_injectivity(const TNorm& t, int grid_n, double eps) {
    InjectivityVerdict v;
    nlohmann::json cert;
    cert["tnorm"] = t.to_json();
    cert["grid_n"] = grid_n;

    if (t.is_single_lukasiewicz()) {
        // x -> x -> 0 is an isomorphism between alphaL and alphaR.
        double max_dev = 0.0;
        for (int i = 0; i <= grid_n; ++i)
            for (int j = 0; j <= grid_n; ++j) {
                double x = double(i) / grid_n, y = double(j) / grid_n;
                double lhs = t.residuum(x, y);
                double rhs = t.residuum(1.0 - y, 1.0 - x);
                max_dev = std::max(max_dev, std::fabs(lhs - rhs));
            }
        cert["type"] = "lukasiewicz-isomorphism";
        cert["max_deviation"] = max_dev;
        v.kind = max_dev <= eps ? InjectivityKind::injective_all : InjectivityKind::inconclusive;
        v.summary = "alphaL and alphaR are isomorphic via x -> residuum(x, 0); every continuous "
                    "[0,1]-lattice carries an injective Scott structure";
        v.certificate = cert;
        return v;
    }

    if (!t.classify().satisfies_condition_s) {
        // Non-(S): alphaL is not continuous, so Sigma(alphaL) is not injective.
        const Piece* bad = nullptr;
        for (const Piece& pc : t.pieces())
            if (pc.lo > eps && pc.kind == Archetype::lukasiewicz) { bad = &pc; break; }
        double p = bad->lo, q = bad->hi;
        double wt = (p + q) / 2.0;
        // snap the witness to the grid when possible, keeping it interior
        for (int i = 0; i <= grid_n; ++i) {
            double g = double(i) / grid_n;
            if (g > p + (q - p) / 4 && g < q - (q - p) / 4) { wt = g; break; }
        }
        ParamStructure al;
        al.tnorm = t;
        al.kind = ShapeKind::alpha_l;
        double meet = 1.0;
        for (int i = 0; i <= grid_n; ++i) {
            double x = double(i) / grid_n;
            meet = std::min(meet, t.residuum(param_d(al, CPoint::val(wt), CPoint::val(x)),
                                             param_d(al, CPoint::val(p), CPoint::val(x))));
        }
        meet = std::min(meet, t.residuum(param_d(al, CPoint::val(wt), CPoint::val(wt)),
                                         param_d(al, CPoint::val(p), CPoint::val(wt))));
        cert["type"] = "non-condition-s";
        cert["piece_lo"] = p;
        cert["piece_hi"] = q;
        cert["witness_t"] = wt;
        cert["meet_bound"] = meet;
        cert["hom_value"] = t.residuum(wt, p);
        v.kind = InjectivityKind::counterexample;
        v.summary = "condition (S) fails: alphaL is not a continuous [0,1]-lattice, so its Scott "
                    "structure is not injective";
        v.certificate = cert;
        return v;
    }

    // (S) but not Lukasiewicz: a two-point subspace of K does not extend.
    auto region = first_non_l_region(t);
    if (!region) {
        v.kind = InjectivityKind::inconclusive;
        v.summary = "no non-Lukasiewicz region found";
        v.certificate = cert;
        return v;
    }
    double p = region->p, q = region->q;
    // bound chain: any continuous extension fbar with fbar(q) = p satisfies
    // fbar(x) <= residuum(alphaR(x, q), p) for x in (p, q], hence sup <= p < q.
    double sup_bound = 0.0;
    std::vector<double> samples;
    for (int i = 1; i <= grid_n; ++i) {
        double x = p + (q - p) * double(i) / grid_n;
        samples.push_back(x);
    }
    for (int i = 0; i <= grid_n; ++i) {
        double x = double(i) / grid_n;
        if (x > p && x <= q) samples.push_back(x);
    }
    for (double x : samples)
        sup_bound = std::max(sup_bound, t.residuum(t.residuum(q, x), p));
    cert["type"] = "two-point-subspace";
    cert["region_kind"] = region->kind;
    cert["p"] = p;
    cert["q"] = q;
    cert["map"] = {{"p", q}, {"q", p}};
    cert["sup_bound"] = sup_bound;
    v.kind = InjectivityKind::counterexample;
    v.summary = "the map {p,q} -> Sigma(alphaL) swapping " + format_value(p) + " and " +
                format_value(q) + " has no continuous extension along the subspace of K";
    v.certificate = cert;
    return v;
}

nlohmann::json InjectivityVerdict::to_json() const {
    std::string k = kind == InjectivityKind::injective_all ? "injective-all-continuous-lattices"
                    : kind == InjectivityKind::counterexample ? "counterexample"
                                                              : "inconclusive";
    return {{"verdict", k}, {"summary", summary}, {"certificate", certificate}};
}

ReplayResult verify_certificate(const nlohmann::json& cert, double eps) {
    ReplayResult r;
    if (!cert.contains("type") || !cert.contains("tnorm") || !cert.contains("grid_n")) {
        r.detail = "certificate missing type/tnorm/grid_n";
        return r;
    }
    TNorm t = TNorm::from_json(cert["tnorm"]);
    int grid_n = cert["grid_n"].get<int>();
    std::string type = cert["type"].get<std::string>();

    if (type == "lukasiewicz-isomorphism") {
        double max_dev = 0.0;
        for (int i = 0; i <= grid_n; ++i)
            for (int j = 0; j <= grid_n; ++j) {
                double x = double(i) / grid_n, y = double(j) / grid_n;
                max_dev = std::max(max_dev,
                                   std::fabs(t.residuum(x, y) - t.residuum(1.0 - y, 1.0 - x)));
            }
        r.ok = max_dev <= eps && t.is_single_lukasiewicz();
        r.detail = "isomorphism deviation " + format_value(max_dev);
        return r;
    }
    if (type == "two-point-subspace") {
        double p = cert["p"].get<double>(), q = cert["q"].get<double>();
        if (!(t.is_idempotent(p, eps) && t.is_idempotent(q, eps) && p < q)) {
            r.detail = "certificate endpoints are not an idempotent pair";
            return r;
        }
        double sup_bound = 0.0;
        for (int i = 1; i <= grid_n; ++i) {
            double x = p + (q - p) * double(i) / grid_n;
            sup_bound = std::max(sup_bound, t.residuum(t.residuum(q, x), p));
        }
        r.ok = approx_le(sup_bound, p, eps) && p < q - eps;
        r.detail = "sup_{x>p} bound = " + format_value(sup_bound) + " vs required target " +
                   format_value(q);
        return r;
    }
    if (type == "non-condition-s") {
        double p = cert["piece_lo"].get<double>();
        double wt = cert["witness_t"].get<double>();
        ParamStructure al;
        al.tnorm = t;
        al.kind = ShapeKind::alpha_l;
        double meet = 1.0;
        for (int i = 0; i <= grid_n; ++i) {
            double x = double(i) / grid_n;
            meet = std::min(meet, t.residuum(param_d(al, CPoint::val(wt), CPoint::val(x)),
                                             param_d(al, CPoint::val(p), CPoint::val(x))));
        }
        meet = std::min(meet, t.residuum(param_d(al, CPoint::val(wt), CPoint::val(wt)),
                                         param_d(al, CPoint::val(p), CPoint::val(wt))));
        double hom = t.residuum(wt, p);
        r.ok = meet <= p + grid_slack(grid_n, eps) && hom > meet + eps;
        r.detail = "meet bound " + format_value(meet) + " < hom " + format_value(hom);
        return r;
    }
    r.detail = "unknown certificate type: " + type;
    return r;
}

}  // namespace udom
