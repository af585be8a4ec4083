// qgeom: closed-form and Monte-Carlo intrinsic-volume computations for the
// quantum state space S_d and the complementarity polytope P_d, plus the
// feasibility screen for prescribed inner-product configurations.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeom/cpolytope.hpp"
#include "qgeom/feasibility.hpp"
#include "qgeom/montecarlo.hpp"
#include "qgeom/statespace.hpp"

namespace {

using qgeom::LogReal;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---- deterministic JSON writer (ordered keys, %.17g floats) -------------

class JsonWriter {
public:
    JsonWriter& begin_object() { return token("{"); }
    JsonWriter& end_object() { comma_ = true; out_ += "}"; return *this; }
    JsonWriter& begin_array() { return token("["); }
    JsonWriter& end_array() { comma_ = true; out_ += "]"; return *this; }
    JsonWriter& key(const std::string& k) {
        maybe_comma();
        out_ += "\"" + k + "\":";
        comma_ = false;
        return *this;
    }
    JsonWriter& value(double v) { maybe_comma(); out_ += fmt_double(v); comma_ = true; return *this; }
    JsonWriter& value(long long v) { maybe_comma(); out_ += std::to_string(v); comma_ = true; return *this; }
    JsonWriter& value(unsigned long long v) { maybe_comma(); out_ += std::to_string(v); comma_ = true; return *this; }
    JsonWriter& value(int v) { maybe_comma(); out_ += std::to_string(v); comma_ = true; return *this; }
    JsonWriter& value(bool v) { maybe_comma(); out_ += v ? "true" : "false"; comma_ = true; return *this; }
    JsonWriter& value(const std::string& v) {
        maybe_comma();
        out_ += "\"";
        for (char c : v) {
            if (c == '"' || c == '\\') out_ += '\\';
            out_ += c;
        }
        out_ += "\"";
        comma_ = true;
        return *this;
    }
    JsonWriter& log_value(const LogReal& v) {
        begin_object();
        key("log");
        value(v.is_zero() ? -std::numeric_limits<double>::infinity() : v.log_magnitude());
        key("value");
        value(v.to_double());
        end_object();
        return *this;
    }
    const std::string& str() const { return out_; }

private:
    JsonWriter& token(const char* t) { maybe_comma(); out_ += t; comma_ = false; return *this; }
    void maybe_comma() {
        if (comma_) out_ += ",";
        comma_ = false;
    }
    std::string out_;
    bool comma_ = false;
};

// ---- simple aligned table ------------------------------------------------

struct TableRow {
    std::string name;
    std::string log;
    std::string value;
    std::string note;
};

std::string render_table(const std::string& title, const std::vector<TableRow>& rows,
                         const std::vector<std::string>& headers) {
    std::vector<size_t> w(4, 0);
    for (size_t c = 0; c < 4; ++c) w[c] = headers[c].size();
    for (const auto& r : rows) {
        w[0] = std::max(w[0], r.name.size());
        w[1] = std::max(w[1], r.log.size());
        w[2] = std::max(w[2], r.value.size());
        w[3] = std::max(w[3], r.note.size());
    }
    std::ostringstream os;
    os << title << "\n";
    auto line = [&](const std::string& a, const std::string& b, const std::string& c,
                    const std::string& d) {
        os << "  " << a;
        os << std::string(w[0] - a.size() + 2, ' ') << b;
        os << std::string(w[1] - b.size() + 2, ' ') << c;
        if (!d.empty()) os << std::string(w[2] - c.size() + 2, ' ') << d;
        os << "\n";
    };
    line(headers[0], headers[1], headers[2], headers[3]);
    for (const auto& r : rows) line(r.name, r.log, r.value, r.note);
    return os.str();
}

TableRow log_row(const std::string& name, const LogReal& v, const std::string& note = "") {
    double lm = v.is_zero() ? -std::numeric_limits<double>::infinity() : v.log_magnitude();
    return {name, fmt_short(lm), fmt_double(v.to_double()), note};
}

TableRow num_row(const std::string& name, double v, const std::string& note = "") {
    return {name, "", fmt_double(v), note};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct CommonOpts {
    int d = 2;
    std::string format = "table";
    std::string out;
};

// ---- statespace -----------------------------------------------------------

std::string statespace_note(int d, const std::string& which) {
    if (d == 2) {
        if (which == "volume") return "pi*sqrt(2)/3";
        if (which == "surface") return "2*pi";
        if (which == "p2") return "4*sqrt(2)*pi";
        if (which == "p3") return "8*pi";
        if (which == "V_{D-2}") return "2*sqrt(2)";
        if (which == "V_{D-3}") return "1";
    }
    if (d == 3) {
        if (which == "volume") return "sqrt(3)*pi^3/2520";
        if (which == "surface") return "sqrt(2)*pi^3/105";
        if (which == "p2") return "2*pi^3/(5*sqrt(3))";
        if (which == "p3") return "12*sqrt(2)*pi^3/5";
    }
    return "";
}

int run_statespace(const CommonOpts& o) {
    auto v = qgeom::statespace::evaluate(o.d);
    int D = v.dims.D;
    if (o.format == "json") {
        JsonWriter j;
        j.begin_object();
        j.key("schema").value(std::string("qgeom/1"));
        j.key("command").value(std::string("statespace"));
        j.key("d").value(o.d);
        j.key("D").value(D);
        j.key("results").begin_object();
        j.key("volume").log_value(v.vol_D);
        j.key("surface").log_value(v.surface);
        j.key("p2_at_0").log_value(v.p2_at_0);
        j.key("p3_at_0").log_value(v.p3_at_0);
        j.key("table").begin_array();
        for (const auto& e : v.table.entries) {
            j.begin_object();
            j.key("N").value(e.N);
            j.key("V").log_value(e.V);
            j.key("Vtilde").log_value(e.Vtilde);
            j.end_object();
        }
        j.end_array();
        j.end_object();
        j.end_object();
        emit(j.str(), o.out);
        return 0;
    }
    if (o.format == "csv") {
        std::string s = "quantity,log,value\n";
        auto row = [&](const std::string& n, const LogReal& x) {
            s += n + "," + fmt_double(x.log_magnitude()) + "," + fmt_double(x.to_double()) + "\n";
        };
        row("volume", v.vol_D);
        row("surface", v.surface);
        row("p2_at_0", v.p2_at_0);
        row("p3_at_0", v.p3_at_0);
        for (const auto& e : v.table.entries) {
            row("V_" + std::to_string(e.N), e.V);
            row("Vtilde_" + std::to_string(e.N), e.Vtilde);
        }
        emit(s, o.out);
        return 0;
    }
    std::vector<TableRow> rows;
    rows.push_back(log_row("vol_D(S_d)", v.vol_D, statespace_note(o.d, "volume")));
    rows.push_back(log_row("vol_{D-1}(boundary)", v.surface, statespace_note(o.d, "surface")));
    rows.push_back(log_row("p''(0)", v.p2_at_0, statespace_note(o.d, "p2")));
    rows.push_back(log_row("p'''(0)", v.p3_at_0, statespace_note(o.d, "p3")));
    for (const auto& e : v.table.entries) {
        std::string label = "V_" + std::to_string(e.N);
        std::string note;
        if (e.N == D - 2) note = statespace_note(o.d, "V_{D-2}");
        if (e.N == D - 3) note = statespace_note(o.d, "V_{D-3}");
        rows.push_back(log_row(label, e.V, note));
    }
    emit(render_table("state space S_" + std::to_string(o.d) + "  (D = " + std::to_string(D) + ")",
                      rows, {"quantity", "log", "value", "closed form"}),
         o.out);
    return 0;
}

// ---- polytope --------------------------------------------------------------

int run_polytope(const CommonOpts& o) {
    namespace cp = qgeom::cpolytope;
    int d = o.d;
    int D = d * d - 1;
    auto table = cp::intrinsic_table(d);
    auto m = cp::normal_cone_measures(d);
    auto counts = cp::face_counts(d);
    unsigned long long facets = cp::facet_count(d);

    char alpha_note[96];
    std::snprintf(alpha_note, sizeof(alpha_note), "arccos(%d/%d)", d * d - d - 1, d * d - 1);
    char beta_note[96];
    std::snprintf(beta_note, sizeof(beta_note), "arccos(%d/%d)", d * d - 2 * d - 1, d * d - 1);
    // Vtilde_{D-2} = C * alpha with C from the closed form
    double C = cp::vtilde_Dm2(d).to_double() / m.alpha;
    std::string vt2_note = fmt_short(C) + "*" + alpha_note;

    if (o.format == "json") {
        JsonWriter j;
        j.begin_object();
        j.key("schema").value(std::string("qgeom/1"));
        j.key("command").value(std::string("polytope"));
        j.key("d").value(d);
        j.key("D").value(D);
        j.key("results").begin_object();
        j.key("volume").log_value(table.at(D).Vtilde);
        j.key("surface").log_value(table.at(D - 1).Vtilde);
        j.key("Vtilde_Dm2").log_value(table.at(D - 2).Vtilde);
        j.key("Vtilde_Dm3").log_value(table.at(D - 3).Vtilde);
        j.key("table").begin_array();
        for (const auto& e : table.entries) {
            j.begin_object();
            j.key("N").value(e.N);
            j.key("V").log_value(e.V);
            j.key("Vtilde").log_value(e.Vtilde);
            j.end_object();
        }
        j.end_array();
        j.key("alpha").value(m.alpha);
        j.key("beta").value(m.beta);
        j.key("face_counts").begin_object();
        j.key("facets").value(facets);
        j.key("codim2").value(counts[0].count);
        j.key("codim3_type1").value(counts[1].count);
        j.key("codim3_type2").value(counts[2].count);
        j.end_object();
        j.key("normal_cone_measures").begin_object();
        j.key("codim2").value(m.codim2);
        j.key("codim3_type1").value(m.codim3_type1);
        j.key("codim3_type2").value(m.codim3_type2);
        j.end_object();
        j.key("origin_distances").begin_object();
        j.key("facet").value(cp::face_origin_distance(cp::FaceKind::Facet, d));
        j.key("codim2").value(counts[0].origin_distance);
        if (d >= 3) j.key("codim3_type1").value(counts[1].origin_distance);
        j.key("codim3_type2").value(counts[2].origin_distance);
        j.end_object();
        j.end_object();
        j.end_object();
        emit(j.str(), o.out);
        return 0;
    }
    if (o.format == "csv") {
        std::string s = "quantity,log,value\n";
        auto row = [&](const std::string& n, const LogReal& x) {
            s += n + "," + fmt_double(x.log_magnitude()) + "," + fmt_double(x.to_double()) + "\n";
        };
        auto nrow = [&](const std::string& n, double x) {
            s += n + ",," + fmt_double(x) + "\n";
        };
        row("volume", table.at(D).Vtilde);
        row("surface", table.at(D - 1).Vtilde);
        row("Vtilde_Dm2", table.at(D - 2).Vtilde);
        row("Vtilde_Dm3", table.at(D - 3).Vtilde);
        for (const auto& e : table.entries) row("V_" + std::to_string(e.N), e.V);
        nrow("alpha", m.alpha);
        nrow("beta", m.beta);
        nrow("facets", static_cast<double>(facets));
        nrow("codim2_count", static_cast<double>(counts[0].count));
        nrow("codim3_type1_count", static_cast<double>(counts[1].count));
        nrow("codim3_type2_count", static_cast<double>(counts[2].count));
        emit(s, o.out);
        return 0;
    }
    std::vector<TableRow> rows;
    rows.push_back(log_row("vol_D(P_d)", table.at(D).Vtilde));
    rows.push_back(log_row("vol_{D-1}(boundary)", table.at(D - 1).Vtilde));
    rows.push_back(log_row("Vtilde_{D-2}", table.at(D - 2).Vtilde, vt2_note));
    rows.push_back(log_row("Vtilde_{D-3}", table.at(D - 3).Vtilde));
    for (const auto& e : table.entries)
        rows.push_back(log_row("V_" + std::to_string(e.N), e.V));
    rows.push_back(num_row("alpha", m.alpha, alpha_note));
    rows.push_back(num_row("beta", m.beta, beta_note));
    rows.push_back({"facets", "", std::to_string(facets), ""});
    rows.push_back({"codim-2 faces", "", std::to_string(counts[0].count), ""});
    rows.push_back({"codim-3 faces (kind 1)", "", std::to_string(counts[1].count), ""});
    rows.push_back({"codim-3 faces (kind 2)", "", std::to_string(counts[2].count), ""});
    rows.push_back(num_row("dist(0, facet)", cp::face_origin_distance(cp::FaceKind::Facet, d)));
    rows.push_back(num_row("dist(0, codim-2)", counts[0].origin_distance));
    if (d >= 3) rows.push_back(num_row("dist(0, codim-3 kind 1)", counts[1].origin_distance));
    rows.push_back(num_row("dist(0, codim-3 kind 2)", counts[2].origin_distance));
    rows.push_back(num_row("cone measure codim-2", m.codim2, "alpha/2"));
    rows.push_back(num_row("cone measure codim-3 kind 1", m.codim3_type1));
    rows.push_back(num_row("cone measure codim-3 kind 2", m.codim3_type2));
    emit(render_table("complementarity polytope P_" + std::to_string(d) + "  (D = " +
                          std::to_string(D) + ")",
                      rows, {"quantity", "log", "value", "closed form"}),
         o.out);
    return 0;
}

// ---- compare ----------------------------------------------------------------

int run_compare(const CommonOpts& o) {
    auto rows = qgeom::feasibility::compare_polytope_statespace(o.d);
    bool any = false;
    for (const auto& r : rows) any = any || r.violates;
    if (o.format == "json") {
        JsonWriter j;
        j.begin_object();
        j.key("schema").value(std::string("qgeom/1"));
        j.key("command").value(std::string("compare"));
        j.key("d").value(o.d);
        j.key("rows").begin_array();
        for (const auto& r : rows) {
            j.begin_object();
            j.key("N").value(r.N);
            j.key("V_polytope").log_value(r.polytope_value);
            j.key("V_statespace").log_value(r.statespace_value);
            j.key("ratio").value(r.ratio);
            j.key("flagged").value(r.violates);
            j.end_object();
        }
        j.end_array();
        j.key("inscription_ruled_out").value(any);
        j.end_object();
        emit(j.str(), o.out);
        return 0;
    }
    if (o.format == "csv") {
        std::string s = "N,V_polytope,V_statespace,ratio,flagged\n";
        for (const auto& r : rows)
            s += std::to_string(r.N) + "," + fmt_double(r.polytope_value.to_double()) + "," +
                 fmt_double(r.statespace_value.to_double()) + "," + fmt_double(r.ratio) + "," +
                 (r.violates ? "1" : "0") + "\n";
        emit(s, o.out);
        return 0;
    }
    std::vector<TableRow> t;
    for (const auto& r : rows) {
        t.push_back({"V_" + std::to_string(r.N),
                     fmt_double(r.polytope_value.to_double()),
                     fmt_double(r.statespace_value.to_double()),
                     fmt_short(r.ratio) + (r.violates ? "  FLAG" : "")});
    }
    std::string title = "V_N(P_" + std::to_string(o.d) + ") vs V_N(S_" + std::to_string(o.d) + ")";
    std::string body = render_table(title, t, {"N", "polytope", "state space", "ratio"});
    body += any ? "verdict: some intrinsic volume exceeds the state space (inscription impossible)\n"
                : "verdict: no intrinsic volume rules out an inscription\n";
    emit(body, o.out);
    return 0;
}

// ---- exclude -----------------------------------------------------------------

int run_exclude(const CommonOpts& o) {
    auto rows = qgeom::feasibility::exclusion_report(o.d);
    if (o.format == "json") {
        JsonWriter j;
        j.begin_object();
        j.key("schema").value(std::string("qgeom/1"));
        j.key("command").value(std::string("exclude"));
        j.key("d").value(o.d);
        j.key("rows").begin_array();
        for (const auto& r : rows) {
            j.begin_object();
            j.key("k").value(r.k);
            j.key("dim").value(r.dim);
            j.key("V_cone").log_value(r.cone_value);
            j.key("V_statespace").log_value(r.statespace_value);
            j.key("excluded").value(r.excluded);
            j.end_object();
        }
        j.end_array();
        j.end_object();
        emit(j.str(), o.out);
        return 0;
    }
    if (o.format == "csv") {
        std::string s = "k,dim,V_cone,V_statespace,excluded\n";
        for (const auto& r : rows)
            s += std::to_string(r.k) + "," + std::to_string(r.dim) + "," +
                 fmt_double(r.cone_value.to_double()) + "," +
                 fmt_double(r.statespace_value.to_double()) + "," + (r.excluded ? "1" : "0") + "\n";
        emit(s, o.out);
        return 0;
    }
    std::vector<TableRow> t;
    int n_excluded = 0;
    for (const auto& r : rows) {
        n_excluded += r.excluded ? 1 : 0;
        t.push_back({"k=" + std::to_string(r.k) + " (dim " + std::to_string(r.dim) + ")",
                     fmt_double(r.cone_value.to_double()),
                     fmt_double(r.statespace_value.to_double()),
                     r.excluded ? "excluded" : "not excluded"});
    }
    std::string body = render_table("spherical-cone configurations C_{d,D-k} vs S_" +
                                        std::to_string(o.d),
                                    t, {"case", "V(cone)", "V(state space)", "verdict"});
    body += "excluded: " + std::to_string(n_excluded) + " of 4\n";
    emit(body, o.out);
    return 0;
}

// ---- feasible -----------------------------------------------------------------

int run_feasible(const std::string& path, int d_flag, const CommonOpts& o,
                 const qgeom::feasibility::Tolerances& tol) {
    namespace fs = qgeom::feasibility;
    fs::PrescriptionMatrix p;
    bool is_csv = path.size() > 4 && path.substr(path.size() - 4) == ".csv";
    if (is_csv) {
        if (d_flag < 2) {
            std::cerr << "error: CSV input requires --d\n";
            return 2;
        }
        p = fs::load_prescription_csv(path, d_flag);
    } else {
        p = fs::load_prescription_json(path);
        if (d_flag >= 2) p.d = d_flag;
    }
    auto r = fs::check_trivial_requirements(p, tol);

    if (o.format == "json") {
        emit(fs::gram_report_json(p, r), o.out);
    } else if (o.format == "csv") {
        std::string s = "check,ok,detail\n";
        s += std::string("diag,") + (r.diag_ok ? "1" : "0") + ",\n";
        s += std::string("nonneg,") + (r.nonneg_ok ? "1" : "0") + ",\n";
        s += std::string("psd,") + (r.psd_ok ? "1" : "0") + "," + fmt_double(r.min_eigenvalue) + "\n";
        s += std::string("rank,") + (r.rank_ok ? "1" : "0") + "," + std::to_string(r.rank) + "\n";
        s += std::string("sum,") + (r.sum_ok ? "1" : "0") + "," + fmt_double(r.sum) + "\n";
        emit(s, o.out);
    } else {
        std::vector<TableRow> t;
        t.push_back({"diagonal = 1", r.diag_ok ? "pass" : "FAIL", "", ""});
        t.push_back({"entries >= 0", r.nonneg_ok ? "pass" : "FAIL", "", ""});
        t.push_back({"M - J/d psd", r.psd_ok ? "pass" : "FAIL",
                     "min eigenvalue " + fmt_short(r.min_eigenvalue), ""});
        t.push_back({"rank <= d^2-1", r.rank_ok ? "pass" : "FAIL",
                     "rank " + std::to_string(r.rank) + " (threshold " + fmt_short(r.rank_threshold) + ")",
                     ""});
        t.push_back({"sum >= n^2/d", r.sum_ok ? "pass" : "FAIL",
                     fmt_short(r.sum) + " vs " + fmt_short(r.sum_bound), ""});
        std::string body = render_table("trivial requirements on " + path + "  (n = " +
                                            std::to_string(p.n) + ", d = " + std::to_string(p.d) + ")",
                                        t, {"check", "verdict", "detail", ""});
        body += r.all_ok() ? "all checks passed\n" : "some checks FAILED\n";
        emit(body, o.out);
    }
    return r.all_ok() ? 0 : 1;
}

// ---- montecarlo -----------------------------------------------------------------

int run_montecarlo(const std::string& body_name, const CommonOpts& o, int k, long long samples,
                   std::uint64_t seed, double eps_min, double eps_max, int eps_points, int jobs) {
    namespace mc = qgeom::montecarlo;
    mc::ProjectionOracle oracle;
    std::vector<LogReal> closed(4);
    bool have_closed = true;
    if (body_name == "statespace") {
        oracle = mc::ProjectionOracle::state_space(o.d);
        auto t = qgeom::statespace::intrinsic_table(o.d);
        int D = o.d * o.d - 1;
        for (int i = 0; i < 4; ++i) closed[i] = t.at(D - i).Vtilde;
    } else if (body_name == "polytope") {
        oracle = mc::ProjectionOracle::cpolytope(o.d);
        auto t = qgeom::cpolytope::intrinsic_table(o.d);
        int D = o.d * o.d - 1;
        for (int i = 0; i < 4; ++i) closed[i] = t.at(D - i).Vtilde;
    } else if (body_name == "cone") {
        oracle = mc::ProjectionOracle::spherical_cone(o.d, o.d * o.d - 1 - k);
        closed[0] = qgeom::feasibility::cone_intrinsic_volume(
            qgeom::feasibility::ConeFamily::make(o.d, k));
        have_closed = false; // only a_0 known
    } else {
        std::cerr << "error: --body must be statespace, polytope or cone\n";
        return 2;
    }

    std::vector<double> grid(eps_points);
    if (eps_min <= 0.0) eps_min = 0.02 * oracle.circumradius;
    if (eps_max <= 0.0) eps_max = 0.5 * oracle.circumradius;
    double ratio = std::log(eps_max / eps_min) / std::max(1, eps_points - 1);
    for (int i = 0; i < eps_points; ++i) grid[i] = eps_min * std::exp(ratio * i);

    auto fit = mc::fit_steiner_coefficients(oracle, grid, samples, seed, jobs);

    auto zscore = [&](int i) {
        double sigma = fit.coefficient_sigma(i);
        if (sigma <= 0.0) return 0.0;
        return (fit.coefficients[i] - closed[i].to_double()) / sigma;
    };

    if (o.format == "json") {
        JsonWriter j;
        j.begin_object();
        j.key("schema").value(std::string("qgeom/1"));
        j.key("command").value(std::string("montecarlo"));
        j.key("body").value(body_name);
        j.key("d").value(o.d);
        if (body_name == "cone") j.key("k").value(k);
        j.key("samples").value(static_cast<long long>(samples));
        j.key("seed").value(static_cast<unsigned long long>(seed));
        j.key("estimates").begin_array();
        for (const auto& e : fit.estimates) {
            j.begin_object();
            j.key("epsilon").value(e.epsilon);
            j.key("value").value(e.value);
            j.key("stderr").value(e.stderr_);
            j.end_object();
        }
        j.end_array();
        j.key("fit").begin_array();
        for (int i = 0; i < 4 && i < static_cast<int>(fit.coefficients.size()); ++i) {
            j.begin_object();
            j.key("k").value(i);
            j.key("a").value(fit.coefficients[i]);
            j.key("sigma").value(fit.coefficient_sigma(i));
            if (have_closed || i == 0) {
                j.key("closed_form").value(closed[i].to_double());
                j.key("z").value(zscore(i));
            }
            j.end_object();
        }
        j.end_array();
        j.key("residual").value(fit.residual);
        j.end_object();
        emit(j.str(), o.out);
        return 0;
    }
    if (o.format == "csv") {
        std::string s = "epsilon,value,stderr\n";
        for (const auto& e : fit.estimates)
            s += fmt_double(e.epsilon) + "," + fmt_double(e.value) + "," + fmt_double(e.stderr_) + "\n";
        s += "coefficient,a,sigma,closed_form,z\n";
        for (int i = 0; i < 4 && i < static_cast<int>(fit.coefficients.size()); ++i) {
            s += std::to_string(i) + "," + fmt_double(fit.coefficients[i]) + "," +
                 fmt_double(fit.coefficient_sigma(i));
            if (have_closed || i == 0)
                s += "," + fmt_double(closed[i].to_double()) + "," + fmt_double(zscore(i));
            else
                s += ",,";
            s += "\n";
        }
        emit(s, o.out);
        return 0;
    }
    std::vector<TableRow> t;
    for (const auto& e : fit.estimates)
        t.push_back({fmt_short(e.epsilon), fmt_short(e.value), fmt_short(e.stderr_), ""});
    std::string bodytxt =
        render_table("hit-or-miss estimates (" + body_name + ", d = " + std::to_string(o.d) +
                         ", samples = " + std::to_string(samples) + ", seed = " + std::to_string(seed) + ")",
                     t, {"epsilon", "estimate", "stderr", ""});
    std::vector<TableRow> f;
    for (int i = 0; i < 4 && i < static_cast<int>(fit.coefficients.size()); ++i) {
        std::string cf, z;
        if (have_closed || i == 0) {
            cf = fmt_short(closed[i].to_double());
            z = fmt_short(zscore(i));
        }
        f.push_back({"a_" + std::to_string(i), fmt_short(fit.coefficients[i]) + " +- " +
                                                    fmt_short(fit.coefficient_sigma(i)),
                     cf, z});
    }
    bodytxt += render_table("Steiner coefficients", f, {"coefficient", "fit", "closed form", "z"});
    emit(bodytxt, o.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intrinsic volumes of the quantum state space and the complementarity polytope"};
    app.require_subcommand(1);

    CommonOpts oss, opoly, ocomp, oexc, ofea, omc;
    int k = 0;
    long long samples = 1000000;
    std::int64_t seed_flag = -1;
    double eps_min = 0.0, eps_max = 0.0;
    int eps_points = 12;
    int jobs = 0;
    std::string body_name = "statespace";
    std::string feasible_path;
    int feasible_d = 0;
    qgeom::feasibility::Tolerances tol;

    auto add_common = [](CLI::App* cmd, CommonOpts& o, bool need_d = true) {
        if (need_d) cmd->add_option("--d", o.d, "Hilbert-space dimension (>= 2)")->required();
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", o.out, "write output to this path instead of stdout");
    };

    auto* c_ss = app.add_subcommand("statespace", "closed-form volumes of S_d");
    add_common(c_ss, oss);
    auto* c_poly = app.add_subcommand("polytope", "closed-form data of P_d");
    add_common(c_poly, opoly);
    auto* c_cmp = app.add_subcommand("compare", "V_N(P_d) vs V_N(S_d)");
    add_common(c_cmp, ocomp);
    auto* c_exc = app.add_subcommand("exclude", "spherical-cone exclusion table");
    add_common(c_exc, oexc);

    auto* c_fea = app.add_subcommand("feasible", "trivial-requirement screen on a prescription");
    c_fea->add_option("path", feasible_path, "prescription file (.json or .csv)")->required();
    c_fea->add_option("--d", feasible_d, "Hilbert-space dimension (required for CSV)");
    c_fea->add_option("--tol-psd", tol.psd, "PSD tolerance");
    c_fea->add_option("--tol-rank", tol.rank, "rank threshold (relative to the top eigenvalue)");
    c_fea->add_option("--format", ofea.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    c_fea->add_option("--out", ofea.out, "write output to this path instead of stdout");

    auto* c_mc = app.add_subcommand("montecarlo", "hit-or-miss verification of the closed forms");
    add_common(c_mc, omc);
    c_mc->add_option("--body", body_name, "statespace | polytope | cone");
    c_mc->add_option("--k", k, "codimension for --body cone (0..3)");
    c_mc->add_option("--samples", samples, "samples per grid point");
    c_mc->add_option("--seed", seed_flag, "RNG seed (fallback: QGEOM_SEED, then 12345)");
    c_mc->add_option("--eps-min", eps_min, "smallest epsilon (default 0.02 R)");
    c_mc->add_option("--eps-max", eps_max, "largest epsilon (default 0.5 R)");
    c_mc->add_option("--eps-points", eps_points, "grid size");
    c_mc->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_ss->parsed()) {
            if (oss.d < 2) throw std::domain_error("--d must be >= 2");
            return run_statespace(oss);
        }
        if (c_poly->parsed()) {
            if (opoly.d < 2) throw std::domain_error("--d must be >= 2");
            return run_polytope(opoly);
        }
        if (c_cmp->parsed()) {
            if (ocomp.d < 2) throw std::domain_error("--d must be >= 2");
            return run_compare(ocomp);
        }
        if (c_exc->parsed()) {
            if (oexc.d < 2) throw std::domain_error("--d must be >= 2");
            return run_exclude(oexc);
        }
        if (c_fea->parsed()) return run_feasible(feasible_path, feasible_d, ofea, tol);
        if (c_mc->parsed()) {
            if (omc.d < 2) throw std::domain_error("--d must be >= 2");
            if (samples < 1) throw std::domain_error("--samples must be >= 1");
            if (eps_points < 8) throw std::domain_error("--eps-points must be >= 8");
            if (k < 0 || k > 3) throw std::domain_error("--k must be in 0..3");
            std::uint64_t seed = 12345;
            if (seed_flag >= 0) {
                seed = static_cast<std::uint64_t>(seed_flag);
            } else if (const char* env = std::getenv("QGEOM_SEED")) {
                char* end = nullptr;
                unsigned long long v = std::strtoull(env, &end, 10);
                if (end && *end == '\0') seed = v;
            }
            return run_montecarlo(body_name, omc, k, samples, seed, eps_min, eps_max, eps_points,
                                  jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
