#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgeom/cpolytope.hpp"
#include "qgeom/feasibility.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/selberg.hpp"
#include "qgeom/statespace.hpp"

namespace py = pybind11;
using namespace qgeom;

namespace {

py::dict table_to_dict(const IntrinsicVolumeTable& t) {
    py::dict out;
    out["d"] = t.dims.d;
    out["D"] = t.dims.D;
    py::list entries;
    for (const auto& e : t.entries) {
        py::dict row;
        row["N"] = e.N;
        row["V"] = e.V.to_double();
        row["V_log"] = e.V.log_magnitude();
        row["Vtilde"] = e.Vtilde.to_double();
        row["Vtilde_log"] = e.Vtilde.log_magnitude();
        entries.append(row);
    }
    out["entries"] = entries;
    return out;
}

feasibility::PrescriptionMatrix matrix_from_rows(int d, const std::vector<std::vector<double>>& rows) {
    feasibility::PrescriptionMatrix p;
    p.d = d;
    p.n = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != p.n)
            throw std::invalid_argument("prescription matrix must be square");
        p.M.insert(p.M.end(), row.begin(), row.end());
    }
    return p;
}

} // namespace

PYBIND11_MODULE(_qgeom, m) {
    m.doc() = "intrinsic volumes of the quantum state space S_d and the complementarity polytope P_d";

    py::class_<LogReal>(m, "LogReal")
        .def_static("from_float", &LogReal::from_double)
        .def_static("from_log", &LogReal::from_log, py::arg("logmag"), py::arg("sign") = 1)
        .def_property_readonly("sign", &LogReal::sign)
        .def_property_readonly("logmag", &LogReal::log_magnitude)
        .def("__float__", &LogReal::to_double)
        .def("__mul__", &LogReal::operator*)
        .def("__truediv__", &LogReal::operator/)
        .def("__add__", static_cast<LogReal (LogReal::*)(const LogReal&) const>(&LogReal::operator+))
        .def("__lt__", &LogReal::operator<)
        .def("__repr__", [](const LogReal& v) {
            return "LogReal(sign=" + std::to_string(v.sign()) +
                   ", logmag=" + std::to_string(v.log_magnitude()) + ")";
        });

    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("ball_volume", [](int k) { return ball_volume(k).to_double(); }, py::arg("k"));
    m.def("spherical_triangle_area", &spherical_triangle_area, py::arg("a"), py::arg("b"),
          py::arg("c"));

    // state space
    m.def("statespace_volume", [](int d) { return statespace::volume(d); }, py::arg("d"));
    m.def("statespace_surface", [](int d) { return statespace::surface(d); }, py::arg("d"));
    m.def("statespace_p2", [](int d) { return statespace::p2_at_zero(d); }, py::arg("d"));
    m.def("statespace_p3", [](int d) { return statespace::p3_at_zero(d); }, py::arg("d"));
    m.def("flag_manifold_volume", [](int d) { return statespace::flag_manifold_volume(d); },
          py::arg("d"));
    m.def("statespace_table", [](int d) { return table_to_dict(statespace::intrinsic_table(d)); },
          py::arg("d"));

    // selberg
    m.def(
        "selberg_laguerre",
        [](int n, double alpha, double gamma, int k, int mm) {
            return selberg::selberg_laguerre({n, alpha, gamma, k, mm});
        },
        py::arg("n"), py::arg("alpha"), py::arg("gamma"), py::arg("k") = 0, py::arg("m") = 0);
    m.def(
        "simplex_selberg",
        [](int n, double alpha, double gamma, int k, int mm) {
            return selberg::simplex_selberg({n, alpha, gamma, k, mm});
        },
        py::arg("n"), py::arg("alpha"), py::arg("gamma"), py::arg("k") = 0, py::arg("m") = 0);
    m.def(
        "simplex_quadrature_oracle",
        [](int n, double alpha, double gamma, int k, int mm) {
            return selberg::simplex_quadrature_oracle({n, alpha, gamma, k, mm});
        },
        py::arg("n"), py::arg("alpha"), py::arg("gamma"), py::arg("k") = 0, py::arg("m") = 0);

    // complementarity polytope
    m.def("polytope_volume", [](int d) { return cpolytope::closed_form_volume(d); }, py::arg("d"));
    m.def("polytope_surface", [](int d) { return cpolytope::closed_form_surface(d); }, py::arg("d"));
    m.def("polytope_vtilde_dm2", [](int d) { return cpolytope::vtilde_Dm2(d); }, py::arg("d"));
    m.def("polytope_vtilde_dm3", [](int d) { return cpolytope::vtilde_Dm3(d); }, py::arg("d"));
    m.def("polytope_table", [](int d) { return table_to_dict(cpolytope::intrinsic_table(d)); },
          py::arg("d"));
    m.def(
        "polytope_face_counts",
        [](int d) {
            auto fc = cpolytope::face_counts(d);
            py::dict out;
            out["facets"] = cpolytope::facet_count(d);
            out["codim2"] = fc[0].count;
            out["codim3_type1"] = fc[1].count;
            out["codim3_type2"] = fc[2].count;
            return out;
        },
        py::arg("d"));
    m.def(
        "polytope_angles",
        [](int d) {
            auto mm = cpolytope::normal_cone_measures(d);
            py::dict out;
            out["alpha"] = mm.alpha;
            out["beta"] = mm.beta;
            out["codim2_measure"] = mm.codim2;
            out["codim3_type1_measure"] = mm.codim3_type1;
            out["codim3_type2_measure"] = mm.codim3_type2;
            return out;
        },
        py::arg("d"));
    m.def(
        "polytope_vertices",
        [](int d) {
            auto model = cpolytope::build_polytope(d);
            std::vector<std::vector<double>> rows;
            for (int i = 0; i < model.num_vertices(); ++i) {
                auto v = model.vertex(i);
                rows.emplace_back(v.begin(), v.end());
            }
            return rows;
        },
        py::arg("d"));

    // projections and Monte Carlo
    m.def("project_to_probability_simplex",
          [](const std::vector<double>& x) { return montecarlo::project_to_probability_simplex(x); },
          py::arg("x"));
    m.def("distance_to_statespace",
          [](const std::vector<double>& x, int d) { return montecarlo::distance_to_statespace(x, d); },
          py::arg("x"), py::arg("d"));
    m.def("distance_to_cpolytope",
          [](const std::vector<double>& x, int d) { return montecarlo::distance_to_cpolytope(x, d); },
          py::arg("x"), py::arg("d"));
    m.def(
        "estimate_neighborhood_volume",
        [](const std::string& body, int d, double epsilon, long long samples, std::uint64_t seed,
           int dim, int jobs) {
            montecarlo::ProjectionOracle oracle;
            if (body == "statespace") oracle = montecarlo::ProjectionOracle::state_space(d);
            else if (body == "polytope") oracle = montecarlo::ProjectionOracle::cpolytope(d);
            else if (body == "cone")
                oracle = montecarlo::ProjectionOracle::spherical_cone(d, dim > 0 ? dim : d * d - 1);
            else throw std::invalid_argument("body must be statespace, polytope or cone");
            auto e = montecarlo::estimate_neighborhood_volume(oracle, epsilon, samples, seed, jobs);
            py::dict out;
            out["value"] = e.value;
            out["stderr"] = e.stderr_;
            out["samples"] = e.samples;
            out["seed"] = e.seed;
            out["epsilon"] = e.epsilon;
            return out;
        },
        py::arg("body"), py::arg("d"), py::arg("epsilon"), py::arg("samples"), py::arg("seed"),
        py::arg("dim") = 0, py::arg("jobs") = 0);
    m.def(
        "fit_steiner_coefficients",
        [](const std::string& body, int d, long long samples, std::uint64_t seed, int points,
           int jobs) {
            montecarlo::ProjectionOracle oracle;
            if (body == "statespace") oracle = montecarlo::ProjectionOracle::state_space(d);
            else if (body == "polytope") oracle = montecarlo::ProjectionOracle::cpolytope(d);
            else throw std::invalid_argument("body must be statespace or polytope");
            auto grid = montecarlo::default_eps_grid(oracle.circumradius, points);
            auto fit = montecarlo::fit_steiner_coefficients(oracle, grid, samples, seed, jobs);
            py::dict out;
            out["coefficients"] = fit.coefficients;
            std::vector<double> sig;
            for (int k = 0; k < 4; ++k) sig.push_back(fit.coefficient_sigma(k));
            out["sigma"] = sig;
            out["eps_grid"] = fit.eps_grid;
            out["residual"] = fit.residual;
            return out;
        },
        py::arg("body"), py::arg("d"), py::arg("samples"), py::arg("seed"),
        py::arg("points") = 12, py::arg("jobs") = 0);

    // feasibility
    py::enum_<feasibility::PrescriptionKind>(m, "PrescriptionKind")
        .value("SIC", feasibility::PrescriptionKind::Sic)
        .value("MUB", feasibility::PrescriptionKind::Mub)
        .value("ORTHOSET", feasibility::PrescriptionKind::OrthoSet);
    m.def(
        "generate_prescription",
        [](feasibility::PrescriptionKind kind, int d, int n) {
            auto p = feasibility::generate_prescription(kind, d, n);
            std::vector<std::vector<double>> rows(p.n, std::vector<double>(p.n));
            for (int i = 0; i < p.n; ++i)
                for (int j = 0; j < p.n; ++j) rows[i][j] = p.at(i, j);
            return rows;
        },
        py::arg("kind"), py::arg("d"), py::arg("n") = -1);
    m.def(
        "check_trivial_requirements",
        [](int d, const std::vector<std::vector<double>>& rows, double tol_psd, double tol_rank) {
            feasibility::Tolerances tol;
            tol.psd = tol_psd;
            tol.rank = tol_rank;
            auto r = feasibility::check_trivial_requirements(matrix_from_rows(d, rows), tol);
            py::dict out;
            out["diag_ok"] = r.diag_ok;
            out["nonneg_ok"] = r.nonneg_ok;
            out["psd_ok"] = r.psd_ok;
            out["min_eigenvalue"] = r.min_eigenvalue;
            out["rank"] = r.rank;
            out["rank_ok"] = r.rank_ok;
            out["sum"] = r.sum;
            out["sum_bound"] = r.sum_bound;
            out["sum_ok"] = r.sum_ok;
            out["all_ok"] = r.all_ok();
            return out;
        },
        py::arg("d"), py::arg("M"), py::arg("tol_psd") = 1e-9, py::arg("tol_rank") = 1e-8);
    m.def(
        "exclusion_report",
        [](int d) {
            py::list rows;
            for (const auto& r : feasibility::exclusion_report(d)) {
                py::dict row;
                row["k"] = r.k;
                row["dim"] = r.dim;
                row["V_cone"] = r.cone_value.to_double();
                row["V_cone_log"] = r.cone_value.log_magnitude();
                row["V_statespace"] = r.statespace_value.to_double();
                row["V_statespace_log"] = r.statespace_value.log_magnitude();
                row["excluded"] = r.excluded;
                rows.append(row);
            }
            return rows;
        },
        py::arg("d"));
    m.def(
        "compare_polytope_statespace",
        [](int d) {
            py::list rows;
            for (const auto& r : feasibility::compare_polytope_statespace(d)) {
                py::dict row;
                row["N"] = r.N;
                row["V_polytope"] = r.polytope_value.to_double();
                row["V_statespace"] = r.statespace_value.to_double();
                row["ratio"] = r.ratio;
                row["flagged"] = r.violates;
                rows.append(row);
            }
            return rows;
        },
        py::arg("d"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
