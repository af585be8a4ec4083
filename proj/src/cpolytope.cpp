#include "qgeom/cpolytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgeom::cpolytope {

namespace {

void require_d(int d, int min_d = 2) {
    if (d < min_d) throw std::domain_error("cpolytope: d out of range");
}

double log_d(int d) { return std::log(static_cast<double>(d)); }

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > ~0ULL) throw std::overflow_error("cpolytope: face count exceeds 64 bits");
    return static_cast<unsigned long long>(r);
}

unsigned long long upow(unsigned long long base, int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

unsigned long long choose2(int n) { return static_cast<unsigned long long>(n) * (n - 1) / 2; }
unsigned long long choose3(int n) {
    return n < 3 ? 0ULL : static_cast<unsigned long long>(n) * (n - 1) * (n - 2) / 6;
}

int codim_of(FaceKind kind) {
    switch (kind) {
        case FaceKind::Facet: return 1;
        case FaceKind::CodimTwo: return 2;
        default: return 3;
    }
}

void require_kind(FaceKind kind, int d) {
    require_d(d);
    if (kind == FaceKind::CodimThreeType1 && d < 3)
        throw std::domain_error("cpolytope: codim-3 kind 1 needs d >= 3");
}

} // namespace

SimplexFrame build_simplex(int d) {
    require_d(d);
    SimplexFrame f;
    f.d = d;
    f.inradius = 1.0 / std::sqrt(static_cast<double>(d) * (d - 1));
    f.circumradius = std::sqrt((d - 1.0) / d);
    f.vertices.assign(static_cast<size_t>(d) * (d - 1), 0.0);
    auto r = [](int j) { return 1.0 / std::sqrt(static_cast<double>(j) * (j - 1)); };
    auto R = [](int j) { return std::sqrt((j - 1.0) / j); };
    // coordinate c corresponds to level l = c + 2
    for (int c = 0; c < d - 1; ++c) f.vertices[c] = -r(c + 2); // v_1
    for (int j = 2; j <= d; ++j) {
        double* v = f.vertices.data() + static_cast<size_t>(j - 1) * (d - 1);
        for (int c = 0; c < d - 1; ++c) {
            int l = c + 2;
            if (l < j) v[c] = 0.0;
            else if (l == j) v[c] = R(j);
            else v[c] = -r(l);
        }
    }
    return f;
}

PolytopeModel build_polytope(int d) {
    require_d(d);
    SimplexFrame frame = build_simplex(d);
    PolytopeModel m;
    m.d = d;
    m.D = d * d - 1;
    m.vertices.assign(static_cast<size_t>(d + 1) * d * m.D, 0.0);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < d; ++j) {
            double* dst = m.vertices.data() + (static_cast<size_t>(i) * d + j) * m.D;
            auto v = frame.vertex(j);
            std::copy(v.begin(), v.end(), dst + static_cast<size_t>(i) * (d - 1));
        }
    return m;
}

std::vector<std::vector<double>> face_vertices(const PolytopeModel& model, const FaceDescriptor& f) {
    std::vector<std::vector<double>> out;
    for (int i = 0; i <= model.d; ++i) {
        const auto& omit = f.omitted[i];
        for (int j = 0; j < model.d; ++j) {
            if (std::find(omit.begin(), omit.end(), j) != omit.end()) continue;
            auto v = model.vertex(i, j);
            out.emplace_back(v.begin(), v.end());
        }
    }
    return out;
}

std::vector<FaceDescriptor> enumerate_faces(int d, int codim) {
    require_d(d);
    if (d > 3) throw std::domain_error("enumerate_faces: full enumeration restricted to d <= 3");
    if (codim < 1 || codim > 3) throw std::domain_error("enumerate_faces: codim must be 1..3");

    // nonempty subsets of {0..d-1} as bitmasks
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << d); ++mask) {
        std::vector<int> s;
        for (int j = 0; j < d; ++j)
            if (mask & (1 << j)) s.push_back(j);
        subsets.push_back(std::move(s));
    }

    int target = d + codim;
    std::vector<FaceDescriptor> out;
    std::vector<int> pick(d + 1, 0);
    for (;;) {
        int total = 0;
        for (int i = 0; i <= d; ++i) total += static_cast<int>(subsets[pick[i]].size());
        if (total == target) {
            FaceDescriptor f;
            f.omitted.resize(d + 1);
            for (int i = 0; i <= d; ++i) f.omitted[i] = subsets[pick[i]];
            out.push_back(std::move(f));
        }
        int i = 0;
        while (i <= d && ++pick[i] == static_cast<int>(subsets.size())) pick[i++] = 0;
        if (i > d) break;
    }
    return out;
}

FaceDescriptor canonical_face(FaceKind kind, int d) {
    require_kind(kind, d);
    FaceDescriptor f;
    f.omitted.assign(d + 1, {0});
    switch (kind) {
        case FaceKind::Facet: break;
        case FaceKind::CodimTwo: f.omitted[0] = {0, 1}; break;
        case FaceKind::CodimThreeType1: f.omitted[0] = {0, 1, 2}; break;
        case FaceKind::CodimThreeType2: f.omitted[0] = {0, 1}; f.omitted[1] = {0, 1}; break;
    }
    return f;
}

LogReal closed_form_volume(int d) {
    require_d(d);
    return LogReal::from_log(0.5 * (d + 1) * log_d(d) - log_gamma(d * d));
}

LogReal closed_form_surface(int d) {
    require_d(d);
    return LogReal::from_log(0.5 * (d + 2) * log_d(d) + 0.5 * std::log(d * d - 1.0) -
                             log_gamma(d * d - 1.0));
}

unsigned long long facet_count(int d) {
    require_d(d);
    return upow(d, d + 1);
}

double face_origin_distance(FaceKind kind, int d) {
    require_kind(kind, d);
    double dd = d;
    switch (kind) {
        case FaceKind::Facet: return std::sqrt(1.0 / (dd * (dd * dd - 1.0)));
        case FaceKind::CodimTwo: return std::sqrt(2.0 / (dd * (2.0 * dd * dd - dd - 2.0)));
        case FaceKind::CodimThreeType1: return std::sqrt(3.0 / (dd * (3.0 * dd * dd - 2.0 * dd - 3.0)));
        case FaceKind::CodimThreeType2: return std::sqrt(1.0 / (dd * (dd * dd - dd - 1.0)));
    }
    throw std::logic_error("unreachable");
}

LogReal cone_volume_over_face(FaceKind kind, int d) {
    require_kind(kind, d);
    // det M_k = sqrt(k/d); block products give sqrt(c) d^{-(d+1)/2} (and 2
    // instead of sqrt(3) for the doubled codim-2 block of kind 2).
    double log_blocks = -0.5 * (d + 1) * log_d(d);
    switch (kind) {
        case FaceKind::Facet:
            return LogReal::from_log(log_blocks - log_gamma(d * d));
        case FaceKind::CodimTwo:
            return LogReal::from_log(0.5 * std::log(2.0) + log_blocks - log_gamma(d * d - 1.0));
        case FaceKind::CodimThreeType1:
            return LogReal::from_log(0.5 * std::log(3.0) + log_blocks - log_gamma(d * d - 2.0));
        case FaceKind::CodimThreeType2:
            return LogReal::from_log(std::log(2.0) + log_blocks - log_gamma(d * d - 2.0));
    }
    throw std::logic_error("unreachable");
}

LogReal face_volume(FaceKind kind, int d) {
    require_kind(kind, d);
    int dim = d * d - 1 - codim_of(kind);
    return LogReal::from_double(dim + 1.0) * cone_volume_over_face(kind, d) /
           LogReal::from_double(face_origin_distance(kind, d));
}

NormalConeMeasures normal_cone_measures(int d) {
    require_d(d);
    NormalConeMeasures m;
    double D = d * d - 1.0;
    m.alpha = std::acos(1.0 - d / D);
    m.beta = std::acos(1.0 - 2.0 * d / D);
    m.codim2 = 0.5 * m.alpha;
    // spherical cone volume = spherical area / 3; the triangle side lengths
    // are the angles between the generating facet normals
    m.codim3_type1 = spherical_triangle_area(m.alpha, m.alpha, m.alpha) / 3.0;
    m.codim3_type2 = 2.0 * spherical_triangle_area(m.alpha, m.alpha, m.beta) / 3.0;
    return m;
}

std::array<FaceData, 3> face_counts(int d) {
    require_d(d);
    NormalConeMeasures m = normal_cone_measures(d);

    FaceData c2;
    c2.kind = FaceKind::CodimTwo;
    c2.count = checked_mul(checked_mul(d + 1, choose2(d)), upow(d, d));
    c2.face_volume = face_volume(FaceKind::CodimTwo, d);
    c2.origin_distance = face_origin_distance(FaceKind::CodimTwo, d);
    c2.normal_cone_measure = m.codim2;

    FaceData c31;
    c31.kind = FaceKind::CodimThreeType1;
    c31.count = checked_mul(checked_mul(d + 1, choose3(d)), upow(d, d));
    c31.normal_cone_measure = m.codim3_type1;
    if (d >= 3) {
        c31.face_volume = face_volume(FaceKind::CodimThreeType1, d);
        c31.origin_distance = face_origin_distance(FaceKind::CodimThreeType1, d);
    }

    FaceData c32;
    c32.kind = FaceKind::CodimThreeType2;
    c32.count = checked_mul(checked_mul(choose2(d + 1), upow(d, d - 1)),
                            checked_mul(choose2(d), choose2(d)));
    c32.face_volume = face_volume(FaceKind::CodimThreeType2, d);
    c32.origin_distance = face_origin_distance(FaceKind::CodimThreeType2, d);
    c32.normal_cone_measure = m.codim3_type2;

    return {c2, c31, c32};
}

LogReal vtilde_Dm2(int d) {
    require_d(d);
    double a = normal_cone_measures(d).alpha;
    double lg = 0.5 * std::log(2.0 * d * d - d - 2.0) + std::log(d * d - 1.0) +
                (0.5 * d + 1.0) * log_d(d) + std::log(a) - std::log(4.0) - log_gamma(d * d - 2.0);
    return LogReal::from_log(lg);
}

LogReal vtilde_Dm3(int d) {
    require_d(d);
    NormalConeMeasures m = normal_cone_measures(d);
    double atan1 = 0.75 * m.codim3_type1;  // arctan sqrt(tan(3a/4) tan^3(a/4))
    double atan2 = 0.375 * m.codim3_type2; // arctan sqrt(tan(a/2+b/4) tan(a/2-b/4) tan^2(b/4))

    LogReal total = LogReal::zero();
    if (d > 2) {
        double lg1 = std::log(2.0) + 0.5 * std::log(3.0 * d * d - 2.0 * d - 3.0) +
                     std::log(d * d - 1.0) + std::log(d - 2.0) + (0.5 * d + 1.0) * log_d(d) -
                     std::log(9.0) - log_gamma(d * d - 3.0);
        total += LogReal::from_log(lg1) * LogReal::from_double(atan1);
    }
    double lg2 = std::log(2.0) + 0.5 * std::log(d * d - d - 1.0) + std::log(d * d - 1.0) +
                 std::log(d - 1.0) + (0.5 * d + 2.0) * log_d(d) - std::log(3.0) -
                 log_gamma(d * d - 3.0);
    total += LogReal::from_log(lg2) * LogReal::from_double(atan2);
    return total;
}

LogReal assembled_vtilde(int codim, int d) {
    require_d(d);
    NormalConeMeasures m = normal_cone_measures(d);
    auto count_log = [&](double a, double b, double dpow_base, int dpow_exp) {
        return LogReal::from_double(a) * LogReal::from_double(b) *
               LogReal::from_log(dpow_exp * std::log(dpow_base));
    };
    double c2d = static_cast<double>(d) * (d - 1) / 2.0;
    if (codim == 2) {
        LogReal count = count_log(d + 1.0, c2d, d, d);
        return count * face_volume(FaceKind::CodimTwo, d) * LogReal::from_double(m.codim2);
    }
    if (codim == 3) {
        LogReal total = LogReal::zero();
        if (d >= 3) {
            double c3d = static_cast<double>(d) * (d - 1) * (d - 2) / 6.0;
            LogReal count1 = count_log(d + 1.0, c3d, d, d);
            total += count1 * face_volume(FaceKind::CodimThreeType1, d) *
                     LogReal::from_double(m.codim3_type1);
        }
        LogReal count2 = count_log((d + 1.0) * d / 2.0, c2d * c2d, d, d - 1);
        total += count2 * face_volume(FaceKind::CodimThreeType2, d) *
                 LogReal::from_double(m.codim3_type2);
        return total;
    }
    throw std::domain_error("assembled_vtilde: codim must be 2 or 3");
}

IntrinsicVolumeTable intrinsic_table(int d) {
    require_d(d);
    BodyDims dims = BodyDims::from_d(d);
    std::map<int, LogReal> raw;
    raw[dims.D] = closed_form_volume(d);
    raw[dims.D - 1] = closed_form_surface(d);
    raw[dims.D - 2] = vtilde_Dm2(d);
    raw[dims.D - 3] = vtilde_Dm3(d);
    return normalize_table(raw, dims, BodyKind::ComplementarityPolytope);
}

std::vector<double> facet_unit_normal(const PolytopeModel& model, const FaceDescriptor& facet) {
    auto verts = face_vertices(model, facet);
    int D = model.D;
    if (static_cast<int>(verts.size()) != D)
        throw std::invalid_argument("facet_unit_normal: descriptor is not a facet");

    // orthonormalize the edge directions, then strip them from candidate
    // basis vectors; the largest remainder is the hyperplane normal
    std::vector<std::vector<double>> basis;
    for (int i = 1; i < D; ++i) {
        std::vector<double> e(D);
        for (int k = 0; k < D; ++k) e[k] = verts[i][k] - verts[0][k];
        for (const auto& b : basis) {
            double proj = 0.0;
            for (int k = 0; k < D; ++k) proj += e[k] * b[k];
            for (int k = 0; k < D; ++k) e[k] -= proj * b[k];
        }
        double nrm = 0.0;
        for (double v : e) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) throw std::runtime_error("facet_unit_normal: degenerate facet");
        for (double& v : e) v /= nrm;
        basis.push_back(std::move(e));
    }

    std::vector<double> best(D, 0.0);
    double best_norm = -1.0;
    for (int c = 0; c < D; ++c) {
        std::vector<double> r(D, 0.0);
        r[c] = 1.0;
        for (const auto& b : basis) {
            double proj = 0.0;
            for (int k = 0; k < D; ++k) proj += r[k] * b[k];
            for (int k = 0; k < D; ++k) r[k] -= proj * b[k];
        }
        double nrm = 0.0;
        for (double v : r) nrm += v * v;
        if (nrm > best_norm) {
            best_norm = nrm;
            best = std::move(r);
        }
    }
    double nrm = std::sqrt(best_norm);
    for (double& v : best) v /= nrm;
    // outward orientation: positive inner product with any facet vertex
    double side = 0.0;
    for (int k = 0; k < D; ++k) side += best[k] * verts[0][k];
    if (side < 0.0)
        for (double& v : best) v = -v;
    return best;
}

} // namespace qgeom::cpolytope
