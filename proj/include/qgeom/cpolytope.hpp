#pragma once

#include <array>
#include <span>
#include <vector>

#include "qgeom/logreal.hpp"
#include "qgeom/mathkernel.hpp"

namespace qgeom::cpolytope {

// Origin-centered regular (d-1)-simplex with edge length sqrt(2), given in
// the lower-triangular coordinate pattern with r_j = 1/sqrt(j(j-1)) and
// R_j = sqrt((j-1)/j).  Vertex j lives in R^{d-1}.
struct SimplexFrame {
    int d = 0;
    std::vector<double> vertices; // d rows of d-1 coordinates
    double inradius = 0.0;        // r_d
    double circumradius = 0.0;    // R_d

    std::span<const double> vertex(int j) const {
        return {vertices.data() + static_cast<size_t>(j) * (d - 1), static_cast<size_t>(d - 1)};
    }
};

SimplexFrame build_simplex(int d);

// The complementarity polytope P_d: convex hull of d+1 copies of the
// simplex above placed in mutually orthogonal coordinate blocks of
// R^{(d+1)(d-1)}.  Vertex (i, j) = e_i (x) v_j.
struct PolytopeModel {
    int d = 0;
    int D = 0;                    // ambient dimension (d+1)(d-1) = d^2-1
    std::vector<double> vertices; // (d+1)*d rows of D coordinates

    int num_vertices() const { return (d + 1) * d; }
    std::span<const double> vertex(int i, int j) const {
        return {vertices.data() + (static_cast<size_t>(i) * d + j) * D, static_cast<size_t>(D)};
    }
    std::span<const double> vertex(int flat) const {
        return {vertices.data() + static_cast<size_t>(flat) * D, static_cast<size_t>(D)};
    }
};

PolytopeModel build_polytope(int d);

// A face is described by the vertex set omitted from each of the d+1
// blocks; proper faces omit at least one vertex per block and have
// dimension D + d - sum_i |S_i| (equivalently codimension sum |S_i| - d).
struct FaceDescriptor {
    std::vector<std::vector<int>> omitted; // size d+1, each sorted

    int codimension(int d) const {
        int total = 0;
        for (const auto& s : omitted) total += static_cast<int>(s.size());
        return total - d;
    }
};

// Coordinates of the face's vertices (every proper face is a simplex).
std::vector<std::vector<double>> face_vertices(const PolytopeModel& model, const FaceDescriptor& f);

// All faces of the given codimension (1, 2 or 3); intended for the
// explicit-geometry verification and restricted to d <= 3, where the
// counts stay small.
std::vector<FaceDescriptor> enumerate_faces(int d, int codim);

enum class FaceKind { Facet, CodimTwo, CodimThreeType1, CodimThreeType2 };

// A representative face of the given kind, e.g. F({1,2},{1},...,{1}).
FaceDescriptor canonical_face(FaceKind kind, int d);

struct FaceData {
    FaceKind kind;
    unsigned long long count = 0;
    LogReal face_volume;
    double origin_distance = 0.0;
    double normal_cone_measure = 0.0; // vol_c(N cap B^c) for codimension c
};

// vol_D(P_d) = sqrt(d)^{d+1} / (d^2-1)!
LogReal closed_form_volume(int d);

// vol_{D-1}(boundary) = sqrt(d)^{d+2} sqrt(d^2-1) / (d^2-2)!
LogReal closed_form_surface(int d);

unsigned long long facet_count(int d); // d^{d+1}

// Counts of the codimension-2 faces and of the two codimension-3 kinds:
// (d+1) C(d,2) d^d;  (d+1) C(d,3) d^d;  C(d+1,2) d^{d-1} C(d,2)^2.
std::array<FaceData, 3> face_counts(int d);

// Distance from the origin to (the affine hull of) the canonical face.
// CodimThreeType1 requires d >= 3.
double face_origin_distance(FaceKind kind, int d);

// Volume of conv({0} U F) from the block-diagonal determinant product.
LogReal cone_volume_over_face(FaceKind kind, int d);

// Face volume via vol_{dim}(F) = (dim+1) * cone_volume / distance.
LogReal face_volume(FaceKind kind, int d);

struct NormalConeMeasures {
    double alpha = 0.0; // arccos(1 - d/(d^2-1)), angle between adjacent facet normals
    double beta = 0.0;  // arccos(1 - 2d/(d^2-1))
    double codim2 = 0.0;          // alpha / 2
    double codim3_type1 = 0.0;    // (4/3) arctan sqrt(tan(3a/4) tan^3(a/4))
    double codim3_type2 = 0.0;    // (8/3) arctan sqrt(tan(a/2+b/4) tan(a/2-b/4) tan^2(b/4))
};

NormalConeMeasures normal_cone_measures(int d);

// Closed forms for the next two unnormalized intrinsic volumes.
LogReal vtilde_Dm2(int d);
LogReal vtilde_Dm3(int d);

// The same quantities assembled as sum over face kinds of
// count * face volume * normal-cone measure (codim = 2 or 3).
LogReal assembled_vtilde(int codim, int d);

// V_N, Vtilde_N for N in {D, D-1, D-2, D-3}.
IntrinsicVolumeTable intrinsic_table(int d);

// Outward unit normal of the facet containing the given face descriptor's
// complement, computed from explicit coordinates (d <= 3); used by the
// dihedral-angle verification.
std::vector<double> facet_unit_normal(const PolytopeModel& model, const FaceDescriptor& facet);

} // namespace qgeom::cpolytope
