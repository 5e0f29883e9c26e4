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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "udom/approach.hpp"
#include "udom/domain.hpp"
#include "udom/scott.hpp"

using namespace udom;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

// exit codes: 0 all checks pass, 1 violations found, 2 input error
enum Exit { kPass = 0, kFail = 1, kInputError = 2 };

struct Options {
    int grid = 32;
    double eps = 1e-9;
    std::string report = "text";
    bool exact = false;
};

struct Report {
    ordered_json j;
    bool pass = true;

    Report(const std::string& command, const Options& o) {
        j["schema_version"] = kSchemaVersion;
        j["command"] = command;
        j["grid"] = o.grid;
        j["eps"] = o.eps;
        j["checks"] = ordered_json::array();
    }
    void check(const std::string& name, bool ok, const ordered_json& detail = {}) {
        ordered_json c{{"name", name}, {"pass", ok}};
        if (!detail.is_null() && !detail.empty()) c["detail"] = detail;
        j["checks"].push_back(c);
        pass = pass && ok;
    }
    void data(const std::string& key, const ordered_json& v) { j[key] = v; }

    int emit(const Options& o) {
        j["outcome"] = pass ? "pass" : "fail";
        if (o.report == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "== " << j["command"].get<std::string>() << " (grid " << o.grid
                      << ", eps " << o.eps << ")\n";
            for (const auto& c : j["checks"]) {
                std::cout << (c["pass"].get<bool>() ? "  [pass] " : "  [FAIL] ")
                          << c["name"].get<std::string>();
                if (c.contains("detail")) std::cout << "  " << c["detail"].dump();
                std::cout << "\n";
            }
            for (auto& [k, v] : j.items())
                if (k != "checks" && k != "schema_version" && k != "command" && k != "outcome")
                    std::cout << "  " << k << ": " << v.dump() << "\n";
            std::cout << "outcome: " << (pass ? "pass" : "FAIL") << "\n";
        }
        return pass ? kPass : kFail;
    }
};

TNorm load_tnorm(const std::string& path) { return TNorm::from_file(path); }

int run_check_tnorm(const std::string& spec, const Options& o) {
    TNorm t = load_tnorm(spec);
    if (o.exact && t.has_product_piece())
        throw input_error("--exact rejected: the spec has a product piece");
    Report rep("check-tnorm", o);
    LawReport laws = verify_quantale_laws(t, o.grid, o.exact);
    rep.data("tnorm", ordered_json::parse(t.to_json().dump()));
    rep.data("exact", o.exact);
    for (const auto& e : laws.laws)
        rep.check(e.law, e.violation <= o.eps,
                  ordered_json{{"violation", e.violation}, {"witness", e.witness}});
    auto cls = t.classify();
    rep.data("classification",
             ordered_json{{"satisfies_condition_s", cls.satisfies_condition_s},
                          {"archimedean", cls.archimedean},
                          {"idempotent_samples", cls.idempotent_samples}});
    return rep.emit(o);
}

int run_check_order(const std::string& file, const Options& o) {
    FiniteQOrder X = FiniteQOrder::from_file(file);
    Report rep("check-order", o);
    OrderCheck c = check_q_order(X, o.eps);
    rep.check("reflexivity", c.reflexive);
    rep.check("transitivity", c.transitive,
              c.violations.empty() ? ordered_json{} : ordered_json{{"witness", c.violations}});
    rep.data("separated", c.separated);
    ordered_json und = ordered_json::array();
    for (int x = 0; x < X.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (int y = 0; y < X.size(); ++y) row.push_back(int(c.underlying[x][y]));
        und.push_back(row);
    }
    rep.data("underlying_order", und);
    return rep.emit(o);
}

int run_check_approach(const std::string& file, const Options& o) {
    ApproachTable T = ApproachTable::from_file(file);
    Report rep("check-approach", o);
    ApproachCheck c = check_approach_axioms(T, o.eps);
    rep.check("A1", c.a1);
    rep.check("A2", c.a2);
    rep.check("A3", c.a3);
    rep.check("A4", c.a4);
    rep.data("separated", c.separated);
    rep.data("violations", c.violations);
    if (!T.defaulted_masks.empty()) rep.data("defaulted_masks", T.defaulted_masks);
    return rep.emit(o);
}

int run_way_below(const std::string& spec, const std::string& shape, const std::string& file,
                  const Options& o) {
    Report rep("way-below", o);
    WayBelowTable t;
    if (!file.empty()) {
        FiniteQOrder X = FiniteQOrder::from_file(file);
        t = way_below_finite(X, o.eps);
        rep.data("carrier", X.elements);
    } else {
        ParamStructure s = ParamStructure::parse_shape(load_tnorm(spec), shape);
        t = way_below_param(s, o.grid, o.eps);
        rep.data("shape", s.shape_name());
    }
    rep.check("basic_laws", t.invariants_hold,
              t.violations.empty() ? ordered_json{} : ordered_json{{"witness", t.violations}});
    rep.data("w", t.w);
    return rep.emit(o);
}

int run_check_continuity(const std::string& spec, const std::string& shape,
                         const std::string& file, const Options& o) {
    Report rep("check-continuity", o);
    ContinuityReport r;
    if (!file.empty()) {
        r = check_continuity(FiniteQOrder::from_file(file), o.eps);
    } else {
        ParamStructure s = ParamStructure::parse_shape(load_tnorm(spec), shape);
        r = check_continuity(s, o.grid, o.eps);
        rep.data("shape", s.shape_name());
    }
    rep.check("continuous_lattice", r.is_continuous_lattice,
              ordered_json{{"witness", r.witness}});
    rep.data("separated", r.separated);
    rep.data("complete", r.complete);
    rep.data("cond_adjunction", r.cond_adjunction);
    rep.data("cond_way_below_identity", r.cond_way_below_identity);
    rep.data("cond_d_preserves_order", r.cond_d_preserves_order);
    rep.data("conditions_agree", r.conditions_agree);
    return rep.emit(o);
}

int run_scott_delta(const std::string& spec, const std::string& shape, const std::string& set,
                    double point, const Options& o) {
    TNorm t = load_tnorm(spec);
    ParamStructure s = ParamStructure::parse_shape(t, shape);
    if (s.kind == ShapeKind::power) throw input_error("scott-delta: power shapes unsupported");
    if (o.grid > 30) throw input_error("scott-delta: subset masks cap the grid at 30");
    Report rep("scott-delta", o);
    ScottContext ctx = scott_context_param(s, o.grid, o.eps);
    // parse the subset as comma-separated grid values
    unsigned mask = 0;
    std::stringstream ss(set);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        double v = std::stod(tok);
        int idx = int(std::lround(v * o.grid));
        if (idx < 0 || idx > o.grid || std::fabs(double(idx) / o.grid - v) > o.eps)
            throw input_error("set member " + tok + " is not a grid point");
        mask |= (1u << idx);
    }
    int x = int(std::lround(point * o.grid));
    if (x < 0 || x > o.grid) throw input_error("point off the grid");
    double sd = sigma_delta(ctx, x, mask);
    double kd = mask == 0 ? 0.0 : 1.0;
    if (mask != 0) {
        double mn = 1.0;
        for (int i = 0; i <= o.grid; ++i)
            if (mask & (1u << i)) mn = std::min(mn, double(i) / o.grid);
        kd = t.residuum(mn, point);
    }
    rep.data("sigma_delta", sd);
    rep.data("space_k_delta", kd);
    rep.check("matches_space_k_within_pitch", std::fabs(sd - kd) <= 1.0 / o.grid + o.eps);
    return rep.emit(o);
}

int run_sobriety(const std::string& spec, const std::string& shape, double point,
                 const Options& o) {
    TNorm t = load_tnorm(spec);
    ParamStructure s = ParamStructure::parse_shape(t, shape);
    Report rep("sobriety", o);
    ScottContext ctx = scott_context_finite(grid_snapshot(s, o.grid), o.eps);
    int b = int(std::lround(point * o.grid));
    if (b < 0 || b >= ctx.X.size()) throw input_error("point off the grid");
    SobrietyWitness w = sobriety_witness(ctx, yoneda(ctx.X, b).values, o.eps);
    rep.check("witness_valid", w.valid, ordered_json{{"message", w.message}});
    if (w.sup_point) {
        rep.data("sup_point", ctx.X.elements[*w.sup_point]);
        rep.check("sup_is_representing_point", *w.sup_point == b);
    }
    return rep.emit(o);
}

int run_sigma_product(const std::string& spec, const std::string& shape, const std::string& file,
                      int power, const Options& o) {
    Report rep("sigma-product", o);
    ScottContext ctx;
    if (!file.empty()) {
        ctx = scott_context_finite(FiniteQOrder::from_file(file), o.eps);
    } else {
        ParamStructure s = ParamStructure::parse_shape(load_tnorm(spec), shape);
        ctx = scott_context_param(s, o.grid, o.eps);
    }
    SigmaProductReport r = sigma_product_check(ctx, power, o.eps);
    if (r.refused) throw input_error("sigma-product: " + r.witness);
    rep.check("tables_equal", r.pass,
              ordered_json{{"max_deviation", r.max_deviation}, {"witness", r.witness}});
    rep.data("carrier", r.carrier);
    rep.data("closed_family", r.closed_family);
    return rep.emit(o);
}

int run_classify_injectivity(const std::string& spec, const Options& o) {
    TNorm t = load_tnorm(spec);
    Report rep("classify-injectivity", o);
    InjectivityVerdict v = classify_injectivity(t, o.grid, o.eps);
    rep.data("verdict", v.to_json()["verdict"]);
    rep.data("summary", v.summary);
    rep.data("certificate", ordered_json::parse(v.certificate.dump()));
    ReplayResult replay = verify_certificate(v.certificate, o.eps);
    rep.check("certificate_replays", replay.ok, ordered_json{{"detail", replay.detail}});
    return rep.emit(o);
}

int run_verify_certificate(const std::string& file, const Options& o) {
    std::ifstream in(file);
    if (!in) throw input_error("cannot open certificate: " + file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error(std::string("certificate parse error: ") + e.what());
    }
    if (j.contains("certificate")) j = j["certificate"];  // accept whole reports
    Report rep("verify-certificate", o);
    ReplayResult r = verify_certificate(j, o.eps);
    rep.check("certificate_replays", r.ok, ordered_json{{"detail", r.detail}});
    return rep.emit(o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for [0,1]-valued orders, domains and approach spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options o;
    app.add_option("--grid", o.grid, "grid subdivision count")->capture_default_str();
    app.add_option("--eps", o.eps, "comparison tolerance")->capture_default_str();
    app.add_option("--report", o.report, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--exact", o.exact, "exact rational mode (no product pieces)");

    std::string spec, file, shape = "alphaR", set, cert;
    double point = 0.0;
    int power = 2;

    auto* ct = app.add_subcommand("check-tnorm", "quantale law suite for a t-norm spec");
    ct->add_option("--spec", spec, "t-norm spec file")->required();

    auto* co = app.add_subcommand("check-order", "[0,1]-order axioms for a structure file");
    co->add_option("--file", file, "order file")->required();

    auto* ca = app.add_subcommand("check-approach", "approach axioms for a table file");
    ca->add_option("--file", file, "approach table file")->required();

    auto* wb = app.add_subcommand("way-below", "way-below table and its basic laws");
    wb->add_option("--spec", spec, "t-norm spec file");
    wb->add_option("--shape", shape, "alphaL|alphaR|xinf")->capture_default_str();
    wb->add_option("--file", file, "finite order file (instead of a shape)");

    auto* cc = app.add_subcommand("check-continuity", "continuous [0,1]-lattice check");
    cc->add_option("--spec", spec, "t-norm spec file");
    cc->add_option("--shape", shape, "alphaL|alphaR|xinf")->capture_default_str();
    cc->add_option("--file", file, "finite order file (instead of a shape)");

    auto* sd = app.add_subcommand("scott-delta", "Scott approach distance vs the space K");
    sd->add_option("--spec", spec, "t-norm spec file")->required();
    sd->add_option("--shape", shape, "alphaL|alphaR")->capture_default_str();
    sd->add_option("--set", set, "comma-separated grid values")->required();
    sd->add_option("--point", point, "evaluation point")->required();

    auto* sb = app.add_subcommand("sobriety", "sobriety witness for a representable closed set");
    sb->add_option("--spec", spec, "t-norm spec file")->required();
    sb->add_option("--shape", shape, "alphaL|alphaR")->capture_default_str();
    sb->add_option("--point", point, "representing point")->required();

    auto* sp = app.add_subcommand("sigma-product", "Sigma(X^k) vs (Sigma X)^k");
    sp->add_option("--spec", spec, "t-norm spec file");
    sp->add_option("--shape", shape, "alphaL|alphaR")->capture_default_str();
    sp->add_option("--file", file, "finite order file (instead of a shape)");
    sp->add_option("--power", power, "exponent k")->capture_default_str();

    auto* ci = app.add_subcommand("classify-injectivity", "Scott-structure injectivity verdict");
    ci->add_option("--spec", spec, "t-norm spec file")->required();

    auto* vc = app.add_subcommand("verify-certificate", "replay a classification certificate");
    vc->add_option("--file", cert, "certificate or report file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ct->parsed()) return run_check_tnorm(spec, o);
        if (co->parsed()) return run_check_order(file, o);
        if (ca->parsed()) return run_check_approach(file, o);
        if (wb->parsed()) {
            if (file.empty() && spec.empty())
                throw input_error("way-below requires --file or --spec");
            return run_way_below(spec, shape, file, o);
        }
        if (cc->parsed()) {
            if (file.empty() && spec.empty())
                throw input_error("check-continuity requires --file or --spec");
            return run_check_continuity(spec, shape, file, o);
        }
        if (sd->parsed()) return run_scott_delta(spec, shape, set, point, o);
        if (sb->parsed()) return run_sobriety(spec, shape, point, o);
        if (sp->parsed()) {
            if (file.empty() && spec.empty())
                throw input_error("sigma-product requires --file or --spec");
            return run_sigma_product(spec, shape, file, power, o);
        }
        if (ci->parsed()) return run_classify_injectivity(spec, o);
        if (vc->parsed()) return run_verify_certificate(cert, o);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
