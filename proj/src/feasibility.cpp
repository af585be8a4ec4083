#include "qgeom/feasibility.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qgeom/cpolytope.hpp"
#include "qgeom/jacobi.hpp"
#include "qgeom/statespace.hpp"

namespace qgeom::feasibility {

namespace {

void require_square(const PrescriptionMatrix& p) {
    if (p.n < 1 || p.d < 2 || p.M.size() != static_cast<size_t>(p.n) * p.n)
        throw std::invalid_argument("PrescriptionMatrix: inconsistent dimensions");
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (!std::isfinite(p.at(i, j)))
                throw std::invalid_argument("PrescriptionMatrix: non-finite entry");
            if (std::fabs(p.at(i, j) - p.at(j, i)) > 1e-12)
                throw std::invalid_argument("PrescriptionMatrix: matrix not symmetric");
        }
}

} // namespace

SumBound sum_bound(const PrescriptionMatrix& p) {
    require_square(p);
    SumBound s;
    for (double v : p.M) s.sum += v;
    s.bound = static_cast<double>(p.n) * p.n / p.d;
    s.ok = s.sum >= s.bound - 1e-9 * std::max(1.0, s.bound);
    return s;
}

GramReport check_trivial_requirements(const PrescriptionMatrix& p, const Tolerances& tol) {
    require_square(p);
    const int n = p.n;
    GramReport r;

    r.diag_ok = true;
    r.nonneg_ok = true;
    for (int i = 0; i < n; ++i) {
        if (std::fabs(p.at(i, i) - 1.0) > tol.entry) r.diag_ok = false;
        for (int j = 0; j < n; ++j)
            if (p.at(i, j) < -tol.entry) r.nonneg_ok = false;
    }

    // G = M - J/d
    std::vector<double> G(static_cast<size_t>(n) * n);
    double gmax = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            G[i * n + j] = p.at(i, j) - 1.0 / p.d;
            gmax = std::max(gmax, std::fabs(G[i * n + j]));
        }

    std::vector<double> work(G), evals(n), evecs(static_cast<size_t>(n) * n);
    if (jacobi_symmetric(work.data(), n, evals.data(), evecs.data()) < 0)
        throw std::runtime_error("check_trivial_requirements: eigensolver did not converge");

    r.min_eigenvalue = evals[0];
    r.psd_ok = evals[0] >= -tol.psd * n * std::max(gmax, 1e-300);

    double lmax = evals[n - 1];
    r.rank_threshold = tol.rank * std::max(lmax, 0.0);
    r.rank = 0;
    for (double l : evals)
        if (l > r.rank_threshold && lmax > 0.0) ++r.rank;
    r.rank_ok = r.rank <= p.d * p.d - 1;

    SumBound s = sum_bound(p);
    r.sum = s.sum;
    r.sum_bound = s.bound;
    r.sum_ok = s.ok;

    if (r.psd_ok) {
        // rows of sqrt(clamped Lambda) * evecs realize G
        r.gram_vectors.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                double l = std::max(evals[k], 0.0);
                r.gram_vectors[i * n + k] = std::sqrt(l) * evecs[k * n + i];
            }
        }
    }
    return r;
}

PrescriptionMatrix generate_prescription(PrescriptionKind kind, int d, int n) {
    if (d < 2) throw std::domain_error("generate_prescription: d must be >= 2");
    PrescriptionMatrix p;
    p.d = d;
    switch (kind) {
        case PrescriptionKind::Sic: {
            p.n = d * d;
            p.M.assign(static_cast<size_t>(p.n) * p.n, 1.0 / (d + 1));
            for (int i = 0; i < p.n; ++i) p.at(i, i) = 1.0;
            break;
        }
        case PrescriptionKind::Mub: {
            p.n = d * (d + 1);
            p.M.assign(static_cast<size_t>(p.n) * p.n, 1.0 / d);
            for (int b = 0; b <= d; ++b)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        p.at(b * d + i, b * d + j) = (i == j) ? 1.0 : 0.0;
            break;
        }
        case PrescriptionKind::OrthoSet: {
            p.n = (n > 0) ? n : d;
            p.M.assign(static_cast<size_t>(p.n) * p.n, 0.0);
            for (int i = 0; i < p.n; ++i) p.at(i, i) = 1.0;
            break;
        }
    }
    return p;
}

ConeFamily ConeFamily::make(int d, int k) {
    if (d < 2 || k < 0 || k > 3) throw std::domain_error("ConeFamily: need d >= 2, k in 0..3");
    ConeFamily f;
    f.d = d;
    f.k = k;
    f.dim = d * d - 1 - k;
    f.circumradius = std::sqrt((d - 1.0) / d);
    return f;
}

LogReal cone_intrinsic_volume(const ConeFamily& f) {
    // orthant fraction 2^{-dim} of the dim-ball of radius R_d
    double lg = f.dim * (std::log(f.circumradius) - std::log(2.0));
    return ball_volume(f.dim) * LogReal::from_log(lg);
}

std::vector<ExclusionRow> exclusion_report(int d) {
    if (d < 2) throw std::domain_error("exclusion_report: d must be >= 2");
    auto table = statespace::intrinsic_table(d);
    int D = d * d - 1;
    std::vector<ExclusionRow> rows;
    for (int k = 0; k <= 3; ++k) {
        ExclusionRow row;
        row.k = k;
        row.dim = D - k;
        row.cone_value = cone_intrinsic_volume(ConeFamily::make(d, k));
        row.statespace_value = table.at(D - k).V;
        row.excluded = row.cone_value > row.statespace_value;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CompareRow> compare_polytope_statespace(int d) {
    if (d < 2) throw std::domain_error("compare_polytope_statespace: d must be >= 2");
    auto ps = cpolytope::intrinsic_table(d);
    auto ss = statespace::intrinsic_table(d);
    int D = d * d - 1;
    std::vector<CompareRow> rows;
    for (int N = D; N >= D - 3; --N) {
        CompareRow row;
        row.N = N;
        row.polytope_value = ps.at(N).V;
        row.statespace_value = ss.at(N).V;
        row.ratio = (row.polytope_value / row.statespace_value).to_double();
        row.violates = row.polytope_value > row.statespace_value;
        rows.push_back(row);
    }
    return rows;
}

PrescriptionMatrix parse_prescription_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("d") || !j.contains("M"))
        throw std::invalid_argument("prescription JSON: expected {\"d\": int, \"M\": [[...]]}");
    PrescriptionMatrix p;
    p.d = j.at("d").get<int>();
    const auto& rows = j.at("M");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("prescription JSON: M must be a nonempty array of rows");
    p.n = static_cast<int>(rows.size());
    p.M.reserve(static_cast<size_t>(p.n) * p.n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != p.n)
            throw std::invalid_argument("prescription JSON: M must be square");
        for (const auto& v : row) p.M.push_back(v.get<double>());
    }
    require_square(p);
    return p;
}

PrescriptionMatrix load_prescription_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_prescription_json(buf.str());
}

PrescriptionMatrix load_prescription_csv(const std::string& path, int d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            size_t pos = 0;
            double v = std::stod(cell, &pos);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("prescription CSV: empty file");
    PrescriptionMatrix p;
    p.d = d;
    p.n = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != p.n)
            throw std::invalid_argument("prescription CSV: grid is not square");
        for (double v : row) p.M.push_back(v);
    }
    require_square(p);
    return p;
}

std::string gram_report_json(const PrescriptionMatrix& p, const GramReport& r) {
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string s = "{\"schema\":\"qgeom/1\",\"report\":\"feasibility\"";
    s += ",\"n\":" + std::to_string(p.n) + ",\"d\":" + std::to_string(p.d);
    auto flag = [](bool b) { return b ? "true" : "false"; };
    s += std::string(",\"diag_ok\":") + flag(r.diag_ok);
    s += std::string(",\"nonneg_ok\":") + flag(r.nonneg_ok);
    s += std::string(",\"psd_ok\":") + flag(r.psd_ok);
    s += ",\"min_eigenvalue\":" + num(r.min_eigenvalue);
    s += ",\"rank\":" + std::to_string(r.rank);
    s += ",\"rank_threshold\":" + num(r.rank_threshold);
    s += std::string(",\"rank_ok\":") + flag(r.rank_ok);
    s += ",\"sum\":" + num(r.sum);
    s += ",\"sum_bound\":" + num(r.sum_bound);
    s += std::string(",\"sum_ok\":") + flag(r.sum_ok);
    s += std::string(",\"all_ok\":") + flag(r.all_ok());
    s += "}";
    return s;
}

} // namespace qgeom::feasibility
