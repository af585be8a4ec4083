#pragma once

// Steiner coefficients of P_2 (the octahedron) computed purely from the
// explicit vertex coordinates: facet enumeration, triangle areas, dihedral
// angles between facet normals, and vertex normal-cone solid angles.
// Independent of every closed form in the library.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qgeom/cpolytope.hpp"
#include "qgeom/mathkernel.hpp"
#include "support/oracles.hpp"

namespace testsupport {

struct OctahedronSteiner {
    double a0 = 0.0; // volume
    double a1 = 0.0; // surface
    double a2 = 0.0; // sum of edge length * exterior angle / 2
    double a3 = 0.0; // sum of vertex solid angles / 3
};

inline OctahedronSteiner octahedron_steiner_from_model() {
    namespace cp = qgeom::cpolytope;
    auto model = cp::build_polytope(2);
    auto facets = cp::enumerate_faces(2, 1);
    if (facets.size() != 8) throw std::logic_error("octahedron should have 8 facets");

    OctahedronSteiner out;

    struct FacetGeom {
        std::vector<std::vector<double>> verts;
        std::vector<double> normal;
    };
    std::vector<FacetGeom> fg;
    for (const auto& f : facets) {
        FacetGeom g;
        g.verts = cp::face_vertices(model, f);
        g.normal = cp::facet_unit_normal(model, f);
        std::vector<std::vector<double>> with_origin = g.verts;
        with_origin.insert(with_origin.begin(), std::vector<double>(3, 0.0));
        out.a0 += simplex_volume(with_origin);
        out.a1 += simplex_volume(g.verts);
        fg.push_back(std::move(g));
    }

    auto contains_point = [](const FacetGeom& g, const std::vector<double>& p) {
        for (const auto& v : g.verts) {
            double diff = 0.0;
            for (int c = 0; c < 3; ++c) diff += (p[c] - v[c]) * (p[c] - v[c]);
            if (diff < 1e-20) return true;
        }
        return false;
    };

    // edges: codim-2 faces; each lies in exactly two facets
    for (const auto& e : cp::enumerate_faces(2, 2)) {
        auto ev = cp::face_vertices(model, e);
        double len = 0.0;
        for (int c = 0; c < 3; ++c) len += (ev[0][c] - ev[1][c]) * (ev[0][c] - ev[1][c]);
        len = std::sqrt(len);
        std::vector<const FacetGeom*> adj;
        for (const auto& g : fg)
            if (contains_point(g, ev[0]) && contains_point(g, ev[1])) adj.push_back(&g);
        if (adj.size() != 2) throw std::logic_error("edge should belong to two facets");
        double cosang = dot({adj[0]->normal.data(), 3}, {adj[1]->normal.data(), 3});
        out.a2 += len * 0.5 * std::acos(std::clamp(cosang, -1.0, 1.0));
    }

    // vertices: codim-3 faces; the normal cone is spanned by the four
    // adjacent facet normals, a spherical quadrilateral
    for (const auto& v : cp::enumerate_faces(2, 3)) {
        auto vv = cp::face_vertices(model, v);
        std::vector<std::vector<double>> normals;
        for (const auto& g : fg)
            if (contains_point(g, vv[0])) normals.push_back(g.normal);
        if (normals.size() != 4) throw std::logic_error("vertex should belong to four facets");

        std::vector<double> axis = vv[0];
        double an = norm({axis.data(), 3});
        for (double& c : axis) c /= an;
        std::vector<double> e1(3, 0.0), e2(3);
        int least = 0;
        for (int c = 1; c < 3; ++c)
            if (std::fabs(axis[c]) < std::fabs(axis[least])) least = c;
        e1[least] = 1.0;
        double pa = dot({e1.data(), 3}, {axis.data(), 3});
        for (int c = 0; c < 3; ++c) e1[c] -= pa * axis[c];
        double n1 = norm({e1.data(), 3});
        for (double& c : e1) c /= n1;
        e2 = {axis[1] * e1[2] - axis[2] * e1[1], axis[2] * e1[0] - axis[0] * e1[2],
              axis[0] * e1[1] - axis[1] * e1[0]};
        auto angof = [&](const std::vector<double>& n) {
            return std::atan2(dot({n.data(), 3}, {e2.data(), 3}), dot({n.data(), 3}, {e1.data(), 3}));
        };
        std::sort(normals.begin(), normals.end(),
                  [&](const std::vector<double>& p, const std::vector<double>& q) {
                      return angof(p) < angof(q);
                  });
        auto arc = [](const std::vector<double>& p, const std::vector<double>& q) {
            return std::acos(std::clamp(dot({p.data(), 3}, {q.data(), 3}), -1.0, 1.0));
        };
        double area =
            qgeom::spherical_triangle_area(arc(normals[0], normals[1]), arc(normals[1], normals[2]),
                                           arc(normals[0], normals[2])) +
            qgeom::spherical_triangle_area(arc(normals[0], normals[3]), arc(normals[3], normals[2]),
                                           arc(normals[0], normals[2]));
        out.a3 += area / 3.0;
    }
    return out;
}

} // namespace testsupport
