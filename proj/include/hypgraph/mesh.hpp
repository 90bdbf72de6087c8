#pragma once

// Triangulation of truncated ideal domains. The region Omega \ H(t) is
// bounded by geodesic edge arcs and horocycle arcs; annulus-model regions are
// a fundamental strip with periodically identified cut curves.

#include <array>
#include <vector>

#include "hypgraph/domain.hpp"

namespace hypgraph {

enum class BoundaryKind { domain_edge, horocycle, cut };

struct BoundaryEdge {
    int v0 = 0, v1 = 0;
    BoundaryKind kind = BoundaryKind::domain_edge;
    int id = 0;  // edge index / vertex id (horocycle) / cut side (0 or 1)
};

struct Mesh {
    std::vector<Complex> verts;
    std::vector<std::array<int, 3>> tris;  // ccw
    std::vector<BoundaryEdge> bedges;

    // periodic identification: dst vertex = T(src vertex)
    std::vector<std::pair<int, int>> periodic;  // (src, dst)

    // caches
    std::vector<double> tri_area;  // Euclidean
    std::vector<double> lambda;    // conformal factor 2/(1-|z|^2) at barycenters

    int nv() const { return static_cast<int>(verts.size()); }
    int nt() const { return static_cast<int>(tris.size()); }
    Complex barycenter(int t) const {
        const auto& T = tris[t];
        return (verts[T[0]] + verts[T[1]] + verts[T[2]]) / 3.0;
    }
    double hyp_area(int t) const { return lambda[t] * lambda[t] * tri_area[t]; }
    void build_caches();

    // total hyperbolic length of the boundary edges with the given marker
    double marker_length(BoundaryKind kind, int id) const;
    std::vector<int> triangles_adjacent_to_boundary() const;
};

Mesh mesh_region(const IdealDomain& d, const TruncationVector& tv, double h);

// plain Delaunay triangulation utility (used by mesh_region and tests)
std::vector<std::array<int, 3>> delaunay(const std::vector<Complex>& pts);

} // namespace hypgraph
