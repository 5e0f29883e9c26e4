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

#include "udom/tnorm.hpp"

#include <fstream>
#include <sstream>

namespace udom {

std::string archetype_name(Archetype a) {
    return a == Archetype::lukasiewicz ? "lukasiewicz" : "product";
}

TNorm TNorm::lukasiewicz() {
    return ordinal_sum({Piece{0.0, 1.0, Archetype::lukasiewicz}});
}

TNorm TNorm::product() {
    return ordinal_sum({Piece{0.0, 1.0, Archetype::product}});
}

TNorm TNorm::ordinal_sum(std::vector<Piece> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    double prev_hi = 0.0;
    bool first = true;
    for (const Piece& p : pieces) {
        if (!(p.lo >= 0.0 && p.hi <= 1.0 && p.lo < p.hi))
            throw input_error("t-norm piece must satisfy 0 <= lo < hi <= 1");
        if (!first && p.lo < prev_hi - kEps)
            throw input_error("t-norm pieces overlap; rejecting rather than merging");
        prev_hi = p.hi;
        first = false;
    }
    TNorm t;
    t.pieces_ = std::move(pieces);
    return t;
}

bool TNorm::has_product_piece() const {
    for (const Piece& p : pieces_)
        if (p.kind == Archetype::product) return true;
    return false;
}

bool TNorm::is_single_lukasiewicz() const {
    return pieces_.size() == 1 && pieces_[0].kind == Archetype::lukasiewicz &&
           approx_zero(pieces_[0].lo) && approx_one(pieces_[0].hi);
}

const Piece* TNorm::piece_containing(double lo_arg, double hi_arg) const {
    for (const Piece& p : pieces_)
        if (p.lo <= lo_arg && hi_arg <= p.hi) return &p;
    return nullptr;
}

const Piece* TNorm::piece_right_of(double t) const {
    for (const Piece& p : pieces_)
        if (p.lo <= t && t < p.hi) return &p;
    return nullptr;
}

const Piece* TNorm::piece_left_of(double t) const {
    for (const Piece& p : pieces_)
        if (p.lo < t && t <= p.hi) return &p;
    return nullptr;
}

bool TNorm::is_idempotent(double v, double eps) const {
    for (const Piece& p : pieces_)
        if (v > p.lo + eps && v < p.hi - eps) return false;
    return true;
}

double TNorm::conj(double x, double y) const {
    double a = std::min(x, y), b = std::max(x, y);
    // The piece formula applies only strictly inside a piece; whenever an
    // idempotent sits between the arguments the result is min, returned
    // directly so boundary cases stay bit-exact.
    if (const Piece* p = piece_containing(a, b)) {
        if (p->lo < a && b < p->hi) {
            if (p->kind == Archetype::lukasiewicz) return std::max(p->lo, x + y - p->hi);
            double s = p->hi - p->lo;
            return p->lo + s * ((x - p->lo) / s) * ((y - p->lo) / s);
        }
    }
    return a;
}

double TNorm::residuum(double x, double y) const {
    if (x <= y) return 1.0;
    // Piece formula unless an idempotent lands in (y, x]; x = hi counts as
    // separated, so the second argument is returned bit-exactly there.
    for (const Piece& p : pieces_)
        if (p.lo <= y && x < p.hi) {
            if (p.kind == Archetype::lukasiewicz) return std::min(p.hi, p.hi - x + y);
            double s = p.hi - p.lo;
            // x > y >= lo, so h(x) > 0.
            return p.lo + s * ((y - p.lo) / (x - p.lo));
        }
    // An idempotent separates y from x.
    return y;
}

Rat TNorm::conj_exact(const Rat& x, const Rat& y) const {
    if (has_product_piece())
        throw input_error("exact mode is unavailable when a product piece is present");
    Rat a = rmin(x, y), b = rmax(x, y);
    for (const Piece& p : pieces_) {
        Rat lo = Rat::from_double(p.lo), hi = Rat::from_double(p.hi);
        if (lo < a && b < hi) return rmax(lo, x + y - hi);
    }
    return a;
}

Rat TNorm::residuum_exact(const Rat& x, const Rat& y) const {
    if (has_product_piece())
        throw input_error("exact mode is unavailable when a product piece is present");
    if (x <= y) return Rat::one();
    for (const Piece& p : pieces_) {
        Rat lo = Rat::from_double(p.lo), hi = Rat::from_double(p.hi);
        if (lo <= y && x < hi) return rmin(hi, hi - x + y);
    }
    return y;
}

TNorm::Classification TNorm::classify() const {
    Classification c;
    c.satisfies_condition_s = true;
    for (const Piece& p : pieces_)
        if (p.lo > kEps && p.kind == Archetype::lukasiewicz) c.satisfies_condition_s = false;
    c.archimedean = pieces_.size() == 1 && approx_zero(pieces_[0].lo) && approx_one(pieces_[0].hi);

    // Sample idempotents: 0, 1, piece endpoints, and gap midpoints.
    auto push = [&](double v) {
        for (double u : c.idempotent_samples)
            if (approx_eq(u, v)) return;
        c.idempotent_samples.push_back(v);
    };
    push(0.0);
    double cursor = 0.0;
    for (const Piece& p : pieces_) {
        if (p.lo > cursor + kEps) push((cursor + p.lo) / 2.0);
        push(p.lo);
        push(p.hi);
        cursor = p.hi;
    }
    if (cursor < 1.0 - kEps) push((cursor + 1.0) / 2.0);
    push(1.0);
    std::sort(c.idempotent_samples.begin(), c.idempotent_samples.end());
    return c;
}

TNorm TNorm::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw input_error("t-norm spec must be an object with a \"pieces\" array");
    std::vector<Piece> ps;
    for (const auto& pj : j["pieces"]) {
        if (!pj.contains("lo") || !pj.contains("hi") || !pj.contains("kind"))
            throw input_error("t-norm piece needs lo, hi, kind");
        Piece p;
        p.lo = pj["lo"].get<double>();
        p.hi = pj["hi"].get<double>();
        std::string k = pj["kind"].get<std::string>();
        if (k == "lukasiewicz")
            p.kind = Archetype::lukasiewicz;
        else if (k == "product")
            p.kind = Archetype::product;
        else
            throw input_error("unknown piece kind: " + k);
        ps.push_back(p);
    }
    return ordinal_sum(std::move(ps));
}

TNorm TNorm::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open t-norm spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json TNorm::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Piece& p : pieces_)
        arr.push_back({{"lo", p.lo}, {"hi", p.hi}, {"kind", archetype_name(p.kind)}});
    return {{"pieces", arr}};
}

nlohmann::json LawReport::to_json() const {
    nlohmann::json laws_j = nlohmann::json::array();
    for (const auto& e : laws)
        laws_j.push_back({{"law", e.law}, {"violation", e.violation}, {"witness", e.witness}});
    return {{"grid_n", grid_n},
            {"exact", exact},
            {"max_violation", max_violation},
            {"laws", laws_j}};
}

namespace {

// The law sweep, shared between float and exact arithmetic.
template <typename S, typename Ops>
LawReport run_laws(int grid_n, bool exact, Ops ops) {
    LawReport rep;
    rep.grid_n = grid_n;
    rep.exact = exact;

    std::vector<S> grid;
    grid.reserve(grid_n + 1);
    for (int i = 0; i <= grid_n; ++i) grid.push_back(ops.grid_point(i, grid_n));

    struct Acc {
        double worst = 0.0;
        std::string witness;
        void note(double v, const std::string& w) {
            if (v > worst) { worst = v; witness = w; }
        }
    };
    Acc assoc, comm, unit, mono, adj;

    const int n = grid_n;
    for (int i = 0; i <= n; ++i) {
        S x = grid[i];
        unit.note(ops.dist(ops.conj(grid[n], x), x), "x=" + ops.str(x));
        for (int j = 0; j <= n; ++j) {
            S y = grid[j];
            comm.note(ops.dist(ops.conj(x, y), ops.conj(y, x)),
                      "x=" + ops.str(x) + " y=" + ops.str(y));
            // x <= x' => x & y <= x' & y
            if (i + 1 <= n)
                mono.note(ops.excess(ops.conj(x, y), ops.conj(grid[i + 1], y)),
                          "x=" + ops.str(x) + " y=" + ops.str(y));
            // counit: x & (x -> y) <= y
            S r = ops.residuum(x, y);
            adj.note(ops.excess(ops.conj(x, r), y),
                     "counit x=" + ops.str(x) + " y=" + ops.str(y));
            for (int k = 0; k <= n; ++k) {
                S z = grid[k];
                assoc.note(ops.dist(ops.conj(ops.conj(x, y), z), ops.conj(x, ops.conj(y, z))),
                           "x=" + ops.str(x) + " y=" + ops.str(y) + " z=" + ops.str(z));
                // completeness of the residuum: x & z <= y => z <= x -> y
                if (ops.le(ops.conj(x, z), y))
                    adj.note(ops.excess(z, r), "adjoint x=" + ops.str(x) + " y=" + ops.str(y) +
                                                   " z=" + ops.str(z));
            }
        }
    }

    auto add = [&](const char* name, const Acc& a) {
        rep.laws.push_back({name, a.worst, a.witness});
        rep.max_violation = std::max(rep.max_violation, a.worst);
    };
    add("associativity", assoc);
    add("commutativity", comm);
    add("unit", unit);
    add("monotonicity", mono);
    add("adjunction", adj);
    return rep;
}

struct DoubleOps {
    const TNorm& t;
    double grid_point(int i, int n) const { return double(i) / double(n); }
    double conj(double a, double b) const { return t.conj(a, b); }
    double residuum(double a, double b) const { return t.residuum(a, b); }
    double dist(double a, double b) const { return std::fabs(a - b); }
    double excess(double a, double b) const { return std::max(0.0, a - b); }
    bool le(double a, double b) const { return a <= b + kEps; }
    std::string str(double v) const { return format_value(v); }
};

struct RatOps {
    const TNorm& t;
    Rat grid_point(int i, int n) const { return Rat(i, n); }
    Rat conj(const Rat& a, const Rat& b) const { return t.conj_exact(a, b); }
    Rat residuum(const Rat& a, const Rat& b) const { return t.residuum_exact(a, b); }
    double dist(const Rat& a, const Rat& b) const {
        return a == b ? 0.0 : std::fabs((a - b).to_double());
    }
    double excess(const Rat& a, const Rat& b) const {
        return a <= b ? 0.0 : (a - b).to_double();
    }
    bool le(const Rat& a, const Rat& b) const { return a <= b; }
    std::string str(const Rat& v) const { return v.str(); }
};

}  // namespace

LawReport verify_quantale_laws(const TNorm& t, int grid_n, bool exact_mode) {
    if (grid_n < 2) throw input_error("verify_quantale_laws requires grid_n >= 2");
    if (exact_mode) {
        if (t.has_product_piece())
            throw input_error("exact mode is unavailable when a product piece is present");
        return run_laws<Rat>(grid_n, true, RatOps{t});
    }
    return run_laws<double>(grid_n, false, DoubleOps{t});
}

}  // namespace udom
