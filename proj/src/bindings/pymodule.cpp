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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "udom/approach.hpp"
#include "udom/domain.hpp"
#include "udom/scott.hpp"

namespace py = pybind11;
using namespace udom;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

FiniteQOrder order_from_json_str(const std::string& s) {
    return FiniteQOrder::from_json(nlohmann::json::parse(s));
}

}  // namespace

PYBIND11_MODULE(_udom, m) {
    m.doc() = "computations with continuous t-norms, [0,1]-orders, way-below relations "
              "and [0,1]-approach spaces";

    py::register_exception<input_error>(m, "InputError");

    py::class_<TNorm>(m, "TNorm")
        .def_static("godel", &TNorm::godel)
        .def_static("lukasiewicz", &TNorm::lukasiewicz)
        .def_static("product", &TNorm::product)
        .def_static("from_json",
                    [](const std::string& s) { return TNorm::from_json(nlohmann::json::parse(s)); })
        .def("to_json", [](const TNorm& t) { return t.to_json().dump(); })
        .def("conj", py::overload_cast<double, double>(&TNorm::conj, py::const_))
        .def("residuum", py::overload_cast<double, double>(&TNorm::residuum, py::const_))
        .def("is_idempotent", &TNorm::is_idempotent, py::arg("v"), py::arg("eps") = kEps)
        .def("classify", [](const TNorm& t) {
            auto c = t.classify();
            py::dict d;
            d["idempotent_samples"] = c.idempotent_samples;
            d["satisfies_condition_s"] = c.satisfies_condition_s;
            d["archimedean"] = c.archimedean;
            return d;
        });

    m.def("verify_quantale_laws",
          [](const TNorm& t, int grid_n, bool exact) {
              return json_to_py(verify_quantale_laws(t, grid_n, exact).to_json());
          },
          py::arg("t"), py::arg("grid_n"), py::arg("exact") = false);

    py::class_<FiniteQOrder>(m, "FiniteQOrder")
        .def_static("from_json", &order_from_json_str)
        .def("to_json", [](const FiniteQOrder& X) { return X.to_json().dump(); })
        .def_property_readonly("elements", [](const FiniteQOrder& X) { return X.elements; })
        .def_property_readonly("alpha", [](const FiniteQOrder& X) { return X.alpha; })
        .def("hom", &FiniteQOrder::hom)
        .def("index_of", &FiniteQOrder::index_of);

    m.def("check_q_order", [](const FiniteQOrder& X) {
        return json_to_py(check_q_order(X).to_json(X));
    });
    m.def("sub", [](const FiniteQOrder& X, std::vector<double> a, std::vector<double> b) {
        Weight wa = make_weight(X, std::move(a)), wb = make_weight(X, std::move(b));
        return sub_weight(wa, wb);
    });
    m.def("yoneda", [](const FiniteQOrder& X, int x) { return yoneda(X, x).values; });
    m.def("supremum_of_weight", [](const FiniteQOrder& X, std::vector<double> v) {
        SupResult s = supremum_of_weight(X, make_weight(X, std::move(v)));
        py::dict d;
        d["element"] = s.element ? py::cast(X.elements[*s.element]) : py::none();
        d["unique"] = s.unique;
        return d;
    });
    m.def("cotensor", [](const FiniteQOrder& X, double p, int y) -> py::object {
        auto c = cotensor(X, p, y);
        return c ? py::cast(X.elements[*c]) : py::none();
    });
    m.def("product_order", [](const std::vector<FiniteQOrder>& fs) { return product_order(fs); });
    m.def("is_forward_cauchy",
          [](const FiniteQOrder& X, std::vector<double> v, int oracle_grid) {
              return json_to_py(
                  is_forward_cauchy(X, make_weight(X, std::move(v)), oracle_grid).to_json());
          },
          py::arg("X"), py::arg("phi"), py::arg("oracle_grid") = 0);

    py::class_<ParamStructure>(m, "ParamStructure")
        .def(py::init([](const TNorm& t, const std::string& sel) {
                 return ParamStructure::parse_shape(t, sel);
             }),
             py::arg("tnorm"), py::arg("shape"))
        .def_property_readonly("shape", &ParamStructure::shape_name);

    m.def("hom", [](const ParamStructure& s, double x, double y) {
        return param_hom(s, CPoint::val(x), CPoint::val(y));
    });
    m.def("d_map", [](const ParamStructure& s, double t, double x) {
        return param_d(s, CPoint::val(t), CPoint::val(x));
    });
    m.def("grid_snapshot", [](const ParamStructure& s, int n) { return grid_snapshot(s, n); });

    m.def("way_below", [](const FiniteQOrder& X) {
        return json_to_py(way_below_finite(X).to_json());
    });
    m.def("way_below_param", [](const ParamStructure& s, int grid_n) {
        return json_to_py(way_below_param(s, grid_n).to_json());
    });
    m.def("is_compact", [](const ParamStructure& s, double a, int grid_n) {
        return is_compact_param(s, a, grid_n);
    });
    m.def("check_continuity", [](const ParamStructure& s, int grid_n) {
        return json_to_py(check_continuity(s, grid_n).to_json());
    });
    m.def("check_continuity_finite", [](const FiniteQOrder& X) {
        return json_to_py(check_continuity(X).to_json());
    });
    m.def("check_interpolation", [](const ParamStructure& s, int grid_n) {
        return json_to_py(check_interpolation(s, grid_n).to_json());
    });

    py::class_<ApproachTable>(m, "ApproachTable")
        .def_static("from_json",
                    [](const std::string& s) {
                        return ApproachTable::from_json(nlohmann::json::parse(s));
                    })
        .def("to_json", [](const ApproachTable& T) { return T.to_json().dump(); })
        .def_property_readonly("elements", [](const ApproachTable& T) { return T.elements; })
        .def("at", &ApproachTable::at);

    m.def("check_approach_axioms", [](const ApproachTable& T) {
        return json_to_py(check_approach_axioms(T).to_json());
    });
    m.def("space_k", &space_K, py::arg("tnorm"), py::arg("grid_n"));
    m.def("gamma", [](const FiniteQOrder& X) { return udom::gamma(X); });
    m.def("omega_of", &omega_of);
    m.def("closure", &closure);
    m.def("kappa_membership", [](const ApproachTable& T, const std::vector<double>& lam) {
        return kappa_membership(T, lam);
    });

    py::class_<ScottContext>(m, "ScottContext")
        .def_property_readonly("continuous",
                               [](const ScottContext& c) { return c.continuous; })
        .def_property_readonly("elements", [](const ScottContext& c) { return c.X.elements; });
    m.def("scott_context_finite",
          [](const FiniteQOrder& X) { return scott_context_finite(X); });
    m.def("scott_context_param",
          [](const ParamStructure& s, int n) { return scott_context_param(s, n); });
    m.def("sigma_delta", [](const ScottContext& c, int x, unsigned mask) {
        return sigma_delta(c, x, mask);
    });
    m.def("scott_closure", [](const ScottContext& c, const std::vector<double>& phi) {
        return scott_closure(c, phi);
    });
    m.def("is_scott_closed", [](const ScottContext& c, const std::vector<double>& phi) {
        auto v = is_scott_closed(c, phi);
        py::dict d;
        d["defined"] = v.defined;
        d["closed"] = v.closed;
        d["witness"] = v.witness;
        return d;
    });
    m.def("sobriety_witness", [](const ScottContext& c, const std::vector<double>& lam) {
        return json_to_py(sobriety_witness(c, lam).to_json(c.X));
    });
    m.def("sigma_product_check", [](const ScottContext& c, int k) {
        return json_to_py(sigma_product_check(c, k).to_json());
    });
    m.def("classify_injectivity",
          [](const TNorm& t, int grid_n) {
              return json_to_py(classify_injectivity(t, grid_n).to_json());
          },
          py::arg("t"), py::arg("grid_n") = 100);
    m.def("verify_certificate", [](const std::string& cert_json) {
        ReplayResult r = verify_certificate(nlohmann::json::parse(cert_json));
        py::dict d;
        d["ok"] = r.ok;
        d["detail"] = r.detail;
        return d;
    });
}
