#pragma once

// Exact-formula kernel for the Poincare disk: distances, geodesics,
// horocycles, isometries and equidistant curves. Everything here is
// immutable after construction and safe to share across threads.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hypgraph/errors.hpp"

namespace hypgraph {

using Complex = std::complex<double>;

inline constexpr double kIdealAngleTol = 1e-12; // ideal-point equality
inline constexpr double kDistanceTol = 1e-9;    // horocycle tangency & friends
inline constexpr double kBoundaryGuard = 1e-12; // |z| < 1 - guard

// Point of H^2 in disk coordinates, |z| < 1 strictly.
struct DiskPoint {
    Complex z;

    DiskPoint() : z(0.0, 0.0) {}
    explicit DiskPoint(Complex zz);

    double abs2() const { return std::norm(z); }
};

// Point of the ideal boundary circle, canonical angle in [0, 2pi).
struct IdealPoint {
    double theta;

    IdealPoint() : theta(0.0) {}
    explicit IdealPoint(double angle);

    Complex unit() const { return std::polar(1.0, theta); }
};

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol = kIdealAngleTol);

// Orientation-preserving Moebius isometry z -> (a z + b) / (conj(b) z + conj(a)),
// normalized so |a|^2 - |b|^2 = 1 (SU(1,1) up to sign).
struct Isometry {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    static Isometry identity() { return {}; }

    // 0 -> p with derivative direction `dir` (unit complex) at 0.
    static Isometry point_frame(const DiskPoint& p, Complex dir);

    Complex apply(Complex z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }
    DiskPoint operator()(const DiskPoint& p) const { return DiskPoint(apply(p.z)); }
    IdealPoint operator()(const IdealPoint& xi) const;

    Isometry inverse() const { return Isometry{std::conj(a), -b}; }
    Isometry& normalize();

    double det_defect() const { return std::norm(a) - std::norm(b) - 1.0; }
};

Isometry operator*(const Isometry& f, const Isometry& g); // composition f after g

double hyp_distance(const DiskPoint& p, const DiskPoint& q);

// Busemann function of the ideal point xi, normalized to 0 at the origin:
//   b_xi(z) = ln(|xi - z|^2 / (1 - |z|^2)).
// Level sets are horocycles; b decreases at unit speed toward xi.
double busemann(const IdealPoint& xi, const DiskPoint& z);

// Complete geodesic with ideal endpoints. Carries the Euclidean circle
// orthogonal to the unit circle (or the diameter flag) and a frame isometry
// mapping the real diameter onto the curve, 0 -> closest point to the origin.
// Arclength parameter s increases from endpoint a (s = -inf) to b (s = +inf).
struct Geodesic {
    IdealPoint a, b;
    bool is_diameter = false;
    Complex center{0.0, 0.0}; // valid when !is_diameter
    double radius = 0.0;
    Isometry frame;

    DiskPoint at(double s) const;
    Complex tangent(double s) const; // unit complex, direction of increasing s
    DiskPoint midpoint() const { return at(0.0); }

    // signed Euclidean side test: >0 on one side, <0 on the other, 0 on the curve.
    double side(Complex z) const;
};

Geodesic geodesic_between(const IdealPoint& a, const IdealPoint& b);

// Image geodesic under an isometry (recomputed from the mapped endpoints).
Geodesic transformed(const Isometry& g, const Geodesic& geo);

// Distance from a point to a complete geodesic, and the signed variant
// (positive on the side where side() > 0).
double point_to_geodesic(const DiskPoint& p, const Geodesic& g);
double signed_point_to_geodesic(const DiskPoint& p, const Geodesic& g);

// min over z in g of busemann(xi, z); equals ln|sin(psi)| where psi is the
// angle of xi pulled back through g's frame. -inf if xi is an endpoint of g.
double min_busemann_on_geodesic(const IdealPoint& xi, const Geodesic& g);

// Hyperbolic translation along `axis` by signed hyperbolic length, and
// parabolic isometry fixing exactly `fixed` (step 0 gives the identity).
Isometry make_translation(const Geodesic& axis, double length);
Isometry make_parabolic(const IdealPoint& fixed, double step);

// Horodisk at an ideal center. H(0) has Euclidean diameter 1 (through the
// origin); H(t) is shrunk so that d(boundary of H(0), H(t)) = t. Raw t may be
// negative (horodisk grown past the base); callers clamp when they need to.
struct Horodisk {
    IdealPoint center;
    double t = 0.0;

    double euclidean_radius() const; // radius of the carrying circle
    Complex euclidean_center() const;
    bool contains(const DiskPoint& p) const { return busemann(center, p) <= -t; }
    // signed hyperbolic distance from p to the horocycle, positive outside
    double signed_distance(const DiskPoint& p) const { return busemann(center, p) + t; }
};

// Signed gap between two horodisks along the geodesic joining their centers:
// positive when disjoint, 0 at tangency, negative when overlapping.
// Closed form: t1 + t2 + 2 ln(|xi1 - xi2| / 2).
double horodisk_gap(const Horodisk& h1, const Horodisk& h2);

// The common parameter t* at which H_a(t*) and H_b(t*) are tangent.
double tangency_param(const IdealPoint& a, const IdealPoint& b);

// Parameter shift of a horodisk transported by an isometry: the image
// g(H_xi(t)) is the horodisk at g(xi) with parameter t + transport_shift(g, xi).
double transport_shift(const Isometry& g, const IdealPoint& xi);

// Arclength window on a geodesic, s0 <= s1.
struct ArcWindow {
    double s0, s1;
};

// Hyperbolic length of the geodesic (or of the window) minus its portions
// inside the horodisks. Horodisks must be pairwise disjoint or tangent.
// Without a window, an ideal end not covered by any horodisk makes the
// length +infty; with require_finite that is an error instead.
double truncated_length(const Geodesic& g, std::optional<ArcWindow> window,
                        std::span<const Horodisk> horodisks, bool require_finite = false);

// Intervals of arclength parameter removed by the horodisks (sorted, merged).
// Rays toward an ideal end appear with infinite endpoints.
std::vector<ArcWindow> horodisk_intervals(const Geodesic& g, std::span<const Horodisk> horodisks);

// Curve at constant distance from a geodesic axis; curvature tanh|d|.
// at(s) is the point over axis point at arclength s, offset by the signed
// distance along the axis normal (positive side = side(z) > 0 of the axis).
struct EquidistantCurve {
    Geodesic axis;
    double signed_distance = 0.0;

    DiskPoint at(double s) const;
    double curvature() const { return std::tanh(std::abs(signed_distance)); }
};

// Appendix-style constant d_kappa for kappa in (0,1): the offset at which the
// curvature-kappa curve of the standard quarter-space configuration becomes
// tangent to the two orthogonal geodesic rays. Computed by bisection.
double dk_constant(double kappa);

// Standard quarter-space configuration used by dk_constant and its tests:
// gamma = real diameter, rays from p = i*tan(pi/8) to the endpoints of gamma.
struct QuarterSpace {
    DiskPoint apex;       // p on the imaginary axis
    Geodesic ray1, ray2;  // complete geodesics carrying the two rays
};
QuarterSpace quarter_space();

// Distance from a point to the geodesic RAY from `from` toward ideal point
// `end` (foot clamped to the ray).
double point_to_ray(const DiskPoint& p, const DiskPoint& from, const IdealPoint& end);

} // namespace hypgraph
