#pragma once

// Ideal polygonal domains with a/b labelings on the Plane and Annulus surface
// models: construction and validation, truncated boundary lengths, the
// solvability check on inscribed polygons, and the example / extension
// constructions.

#include <optional>
#include <string>
#include <vector>

#include "hypgraph/hypgeom.hpp"

namespace hypgraph {

struct SurfaceModel {
    enum class Kind { plane, annulus };
    Kind kind = Kind::plane;
    double translation_length = 0.0;        // annulus
    double funnel_boundary_distance = 0.5;  // distance from the core to each end boundary

    static SurfaceModel plane();
    // The axis is canonicalized to the real diameter internally; an input
    // axis only contributes the frame mapping canonical to caller coordinates.
    static SurfaceModel annulus(double translation_length,
                                std::optional<Geodesic> axis = std::nullopt,
                                double funnel_boundary_distance = 0.5);

    bool is_annulus() const { return kind == Kind::annulus; }
    const Geodesic& axis() const;     // canonical core geodesic (real diameter)
    Isometry world{};                 // canonical -> caller coordinates
    double end_curvature() const { return std::tanh(funnel_boundary_distance); }
};

struct DomainVertex {
    IdealPoint xi;
    int end = 0;
    int index = 0;  // position along the end chain
};

struct DomainEdge {
    int end = 0;
    int index = 0;  // position along the end chain
    int v0 = 0, v1 = 0;
    int wrap = 0;  // winding applied to v1's lift (1 on the closing edge of an end)
    char label = 'a';
    Geodesic geo;  // lift from (v0, 0) to (v1, wrap)
};

class IdealDomain {
  public:
    SurfaceModel model;
    std::vector<DomainVertex> verts;
    std::vector<std::vector<int>> ends;  // per-end ordered vertex ids
    std::vector<DomainEdge> edges;       // chain order, grouped by end
    std::vector<double> tangency_t;      // per-vertex tangency parameters when known

    int N() const { return static_cast<int>(verts.size()); }
    bool annulus() const { return model.is_annulus(); }

    // deck transformation T^k (annulus); identity for the plane model
    const Isometry& deck(int k) const;
    IdealPoint vertex_lift(int vid, int k) const;
    // parameter shift of the vertex horodisk transported by T^k
    double horodisk_shift(int vid, int k) const;
    Horodisk lifted_horodisk(int vid, int k, double t_local) const;

    bool contains(const DiskPoint& z) const;
    DiskPoint interior_point() const;
    double axis_coord(Complex z) const;  // arclength of the foot on the core

    int winding_window() const { return annulus() ? 4 : 0; }

    void finalize();  // builds caches; called by the constructors below

  private:
    mutable std::vector<Isometry> deck_pow_;   // T^-K .. T^K
    std::vector<double> edge_side_sign_;       // side of the domain interior per edge
    DiskPoint interior_;
};

IdealDomain build_ideal_domain(const SurfaceModel& model,
                               const std::vector<std::vector<double>>& vertex_angles_per_end,
                               const std::vector<std::string>& labels_per_end);

// The orbit construction: l vertices per end as the T_l-orbit of a seed point,
// horodisks at the common (transported) tangency parameter, recorded in
// tangency_t. Requires l even and the tangency horodisks inside the ends.
IdealDomain build_example_domain(const SurfaceModel& annulus_model, int l);

struct EdgePair {
    int b_edge = 0;  // labeled b
    int a_edge = 0;  // its successor, labeled a
};

struct ExtensionInfo {
    int shared_vertex = -1;
    Geodesic gamma1, gamma2;        // swallowed edges; diagonals of the new domain
    std::vector<int> new_vertices;  // ids in the returned domain
    Isometry phi1, phi2;
};

// Glues perturbed ideal squares beyond the pair's two edges (t in [0, pi/4]).
IdealDomain extend_domain(const IdealDomain& d, const EdgePair& pair, double t,
                          ExtensionInfo* info = nullptr);

// All consecutive (b, a) edge pairs, one per shared vertex, covering every edge.
std::vector<EdgePair> consecutive_ba_pairs(const IdealDomain& d);

struct TruncationVector {
    std::vector<double> t;
};

// Uniform truncation certified for the large-t regime: horodisks pairwise
// disjoint and clear of every candidate geodesic, plus the given slack.
TruncationVector certified_truncation(const IdealDomain& d, double slack = 1.0);
TruncationVector tangency_truncation(const IdealDomain& d);

struct InscribedPolygon;  // inscribed.hpp

struct Lengths {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

Lengths lengths(const IdealDomain& d, const InscribedPolygon& P, const TruncationVector& tv);

struct JSWitness {
    std::string polygon;
    std::string condition;  // "alpha-beta", "gamma-2alpha", "gamma-2beta"
    double margin = 0.0;
};

struct JSReport {
    bool pass = false;
    std::vector<JSWitness> witnesses;
    double alpha_minus_beta = 0.0;
    TruncationVector eval_t;
    int polygon_count = 0;
    double min_margin = 0.0;  // over all checked strict-alternating polygons
};

JSReport js_check(const IdealDomain& d);

} // namespace hypgraph
