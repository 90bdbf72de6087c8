#include "doctest.h"

#include <cmath>
#include <vector>

#include "hypgraph/hypgeom.hpp"
#include "oracles.hpp"

using namespace hypgraph;
using oracles::uniform;

TEST_CASE("disk point validation") {
    CHECK_NOTHROW(DiskPoint(Complex(0.9, 0.0)));
    CHECK_THROWS_AS(DiskPoint(Complex(1.0, 0.0)), Error);
    CHECK_THROWS_AS(DiskPoint(Complex(0.0, 1.0 - 1e-13)), Error);
}

TEST_CASE("hyp_distance basics") {
    // d(0, r) = 2 artanh r = ln 3 at r = 0.5
    double d = hyp_distance(DiskPoint(), DiskPoint(Complex(0.5, 0.0)));
    CHECK(d == doctest::Approx(std::log(3.0)).epsilon(1e-12));

    DiskPoint p(Complex(0.3, 0.1)), q(Complex(-0.2, 0.4));
    CHECK(hyp_distance(p, q) ==
          doctest::Approx(oracles::dist_crossratio(p.z, q.z)).epsilon(1e-12));

    CHECK(hyp_distance(p, p) == 0.0);
    CHECK(hyp_distance(p, q) == doctest::Approx(hyp_distance(q, p)));
}

TEST_CASE("hyp_distance properties: isometry invariance, triangle inequality") {
    for (int i = 0; i < 1000; ++i) {
        DiskPoint p = oracles::random_point(), q = oracles::random_point();
        Isometry g = oracles::random_isometry();
        double d0 = hyp_distance(p, q);
        double d1 = hyp_distance(g(p), g(q));
        CHECK(std::fabs(d0 - d1) < 1e-9);
        CHECK(std::fabs(d0 - oracles::dist_crossratio(p.z, q.z)) < 1e-9);

        DiskPoint r = oracles::random_point();
        CHECK(hyp_distance(p, q) <= hyp_distance(p, r) + hyp_distance(r, q) + 1e-12);
    }
}

TEST_CASE("isometry composition stays normalized and isometric") {
    // every single composition renormalizes to machine accuracy
    for (int i = 0; i < 500; ++i) {
        Isometry h = oracles::random_isometry() * oracles::random_isometry();
        CHECK(std::fabs(h.det_defect()) < 1e-10);
    }
    // a chain of several isometries still acts isometrically
    Isometry g = Isometry::identity();
    for (int i = 0; i < 8; ++i) g = g * oracles::random_isometry();
    CHECK(std::fabs(g.det_defect()) < 1e-10);
    for (int i = 0; i < 100; ++i) {
        DiskPoint p = oracles::random_point(), q = oracles::random_point();
        CHECK(std::fabs(hyp_distance(g(p), g(q)) - hyp_distance(p, q)) < 1e-9);
    }
}

TEST_CASE("geodesic_between endpoints and orthogonality") {
    // (0, pi) is the real diameter
    Geodesic diam = geodesic_between(IdealPoint(0.0), IdealPoint(M_PI));
    CHECK(diam.is_diameter);
    CHECK(std::fabs(diam.at(0.0).z.imag()) < 1e-15);

    // (0, pi/2) has Euclidean center 1+i and radius 1
    Geodesic g = geodesic_between(IdealPoint(0.0), IdealPoint(M_PI / 2.0));
    CHECK(g.center.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.center.imag() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.radius == doctest::Approx(1.0).epsilon(1e-12));
    // orthogonal circle identity |c|^2 = 1 + r^2
    CHECK(std::norm(g.center) == doctest::Approx(1.0 + g.radius * g.radius));

    // midpoint is the closest point of the geodesic to the origin
    DiskPoint m = g.midpoint();
    for (double s : {-1.0, -0.3, 0.2, 0.8}) {
        CHECK(std::abs(m.z) <= std::abs(g.at(s).z) + 1e-12);
    }

    CHECK_THROWS_AS(geodesic_between(IdealPoint(1.0), IdealPoint(1.0)), Error);
}

TEST_CASE("geodesic arclength parametrization") {
    Geodesic g = geodesic_between(IdealPoint(0.3), IdealPoint(2.1));
    for (double s = -3.0; s < 3.0; s += 0.37) {
        double h = 0.11;
        double d = hyp_distance(g.at(s), g.at(s + h));
        CHECK(std::fabs(d - h) < 1e-8 * (1.0 + h));
    }
    // ends approach the ideal endpoints
    CHECK(std::abs(g.at(25.0).z - g.b.unit()) < 1e-9);
    CHECK(std::abs(g.at(-25.0).z - g.a.unit()) < 1e-9);
}

TEST_CASE("make_translation normal form and group laws") {
    Geodesic axis = geodesic_between(IdealPoint(M_PI), IdealPoint(0.0));
    double ell = 1.3;
    Isometry T = make_translation(axis, ell);
    CHECK(std::abs(T(DiskPoint()).z - Complex(std::tanh(0.5 * ell), 0.0)) < 1e-12);

    // T_l^l = T for l = 5
    int l = 5;
    Isometry Tl = make_translation(axis, ell / l);
    Isometry acc = Isometry::identity();
    for (int i = 0; i < l; ++i) acc = Tl * acc;
    for (int i = 0; i < 50; ++i) {
        DiskPoint p = oracles::random_point();
        CHECK(std::abs(acc(p).z - T(p).z) < 1e-9);
    }

    // inverse
    Isometry Tback = make_translation(axis, -ell);
    for (int i = 0; i < 50; ++i) {
        DiskPoint p = oracles::random_point();
        CHECK(std::abs(Tback(T(p)).z - p.z) < 1e-10);
    }

    // fixes exactly the axis endpoints
    CHECK(same_ideal(T(axis.a), axis.a));
    CHECK(same_ideal(T(axis.b), axis.b));
    CHECK(!same_ideal(T(IdealPoint(M_PI / 2)), IdealPoint(M_PI / 2), 1e-6));

    CHECK_THROWS_AS(make_translation(axis, 0.0), Error);
}

TEST_CASE("make_parabolic fixes exactly one ideal point") {
    IdealPoint fix(0.7);
    Isometry P = make_parabolic(fix, 0.9);
    CHECK(same_ideal(P(fix), fix));
    for (double th : {0.0, 1.5, 3.0, 5.0}) {
        if (same_ideal(IdealPoint(th), fix, 1e-3)) continue;
        CHECK(!same_ideal(P(IdealPoint(th)), IdealPoint(th), 1e-6));
    }
    CHECK(std::fabs(P.det_defect()) < 1e-12);
}

TEST_CASE("horodisk base convention and shrinking law") {
    Horodisk h0{IdealPoint(0.0), 0.0};
    CHECK(h0.euclidean_radius() == doctest::Approx(0.5));
    // base horodisk passes through the origin
    CHECK(std::fabs(busemann(h0.center, DiskPoint())) < 1e-14);

    for (int i = 0; i < 1000; ++i) {
        double t = uniform(0.0, 6.0);
        double th = uniform(0.0, 2.0 * M_PI);
        Horodisk ht{IdealPoint(th), t};
        // boundary point of H(t) on the radial geodesic
        Complex zc = ht.euclidean_center();
        Complex zb = zc - ht.euclidean_radius() * IdealPoint(th).unit();
        // hyperbolic distance from the base horocycle (through 0) equals t
        double d = hyp_distance(DiskPoint(), DiskPoint(zb));
        CHECK(std::fabs(d - t) < 1e-9);
    }
}

TEST_CASE("truncated_length on the real diameter") {
    Geodesic g = geodesic_between(IdealPoint(M_PI), IdealPoint(0.0));
    std::vector<Horodisk> both{{IdealPoint(M_PI), 0.0}, {IdealPoint(0.0), 0.0}};
    // two base horodisks of diameter 1 are tangent at the origin
    CHECK(truncated_length(g, std::nullopt, both) == doctest::Approx(0.0).epsilon(1e-12));

    for (double t : {0.2, 1.0, 2.7}) {
        std::vector<Horodisk> hs{{IdealPoint(M_PI), t}, {IdealPoint(0.0), t}};
        CHECK(truncated_length(g, std::nullopt, hs) == doctest::Approx(2.0 * t).epsilon(1e-10));
    }

    // finite sub-segment away from the horodisks keeps its plain length
    std::vector<Horodisk> far{{IdealPoint(M_PI), 3.0}, {IdealPoint(0.0), 3.0}};
    double L = truncated_length(g, ArcWindow{-1.0, 1.0}, far);
    CHECK(L == doctest::Approx(2.0).epsilon(1e-12));

    // uncovered end reports +infinity, or errors when a finite value is required
    std::vector<Horodisk> one{{IdealPoint(0.0), 1.0}};
    CHECK(std::isinf(truncated_length(g, std::nullopt, one)));
    CHECK_THROWS_AS(truncated_length(g, std::nullopt, one, true), Error);

    // overlapping horodisks are rejected
    std::vector<Horodisk> bad{{IdealPoint(M_PI), -0.5}, {IdealPoint(0.0), 0.0}};
    CHECK_THROWS_AS(truncated_length(g, std::nullopt, bad), Error);
}

TEST_CASE("truncated_length additivity and monotonicity by finite differences") {
    Geodesic g = geodesic_between(IdealPoint(2.9), IdealPoint(0.4));
    double t0 = tangency_param(IdealPoint(2.9), IdealPoint(0.4)) + 0.7;
    for (int i = 0; i < 100; ++i) {
        double ta = t0 + uniform(0.0, 2.0), tb = t0 + uniform(0.0, 2.0);
        double dt = uniform(1e-4, 0.3);
        std::vector<Horodisk> hs{{g.a, ta}, {g.b, tb}};
        std::vector<Horodisk> hs_a{{g.a, ta + dt}, {g.b, tb}};
        std::vector<Horodisk> hs_ab{{g.a, ta + dt}, {g.b, tb + dt}};
        double L = truncated_length(g, std::nullopt, hs);
        double La = truncated_length(g, std::nullopt, hs_a);
        double Lab = truncated_length(g, std::nullopt, hs_ab);
        CHECK(La >= L - 1e-12);
        CHECK(std::fabs(La - L - dt) < 1e-9);       // slope 1 per incident horodisk
        CHECK(std::fabs(Lab - L - 2 * dt) < 1e-9);  // both ends
    }
}

TEST_CASE("mid-geodesic horodisk intrusion is detected and measured") {
    Geodesic g = geodesic_between(IdealPoint(M_PI), IdealPoint(0.0));
    // horodisk at i reaching below the real axis: min busemann on g is ln|sin(pi/2)| = 0
    CHECK(min_busemann_on_geodesic(IdealPoint(M_PI / 2), g) == doctest::Approx(0.0));
    std::vector<Horodisk> mid{{IdealPoint(M_PI / 2), -0.4}};
    auto cut = horodisk_intervals(g, mid);
    REQUIRE(cut.size() == 1);
    CHECK(cut[0].s0 == doctest::Approx(-cut[0].s1).epsilon(1e-9)); // symmetric
    double L = truncated_length(g, ArcWindow{-2.0, 2.0}, mid);
    CHECK(L == doctest::Approx(4.0 - (cut[0].s1 - cut[0].s0)).epsilon(1e-10));
    // with positive t it stays clear of the diameter
    std::vector<Horodisk> clear{{IdealPoint(M_PI / 2), 0.1}};
    CHECK(truncated_length(g, ArcWindow{-2.0, 2.0}, clear) == doctest::Approx(4.0));
}

TEST_CASE("tangency_param matches bisection on the horocycle gap") {
    // antipodal pair: base horodisks already tangent
    CHECK(tangency_param(IdealPoint(0.0), IdealPoint(M_PI)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // right-angle pair: bisect the signed gap measured by truncated_length
    IdealPoint a(0.0), b(M_PI / 2);
    Geodesic g = geodesic_between(a, b);
    auto gap_at = [&](double t) {
        std::vector<Horodisk> hs{{a, t}, {b, t}};
        try {
            return truncated_length(g, std::nullopt, hs);
        } catch (const Error&) {
            return -1.0; // overlapping: below tangency
        }
    };
    double lo = 0.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (gap_at(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double tstar = tangency_param(a, b);
    CHECK(tstar == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-6));
    CHECK(tstar > 0.0);
    CHECK(tstar == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(tangency_param(a, a), Error);
}

TEST_CASE("tangency transport under isometries") {
    for (int i = 0; i < 200; ++i) {
        IdealPoint a(uniform(0.0, 2 * M_PI));
        IdealPoint b(a.theta + uniform(0.3, 2.0));
        Isometry g = oracles::random_isometry();
        double t = tangency_param(a, b);
        // transported horodisks stay tangent
        Horodisk ha{g(a), t + transport_shift(g, a)};
        Horodisk hb{g(b), t + transport_shift(g, b)};
        CHECK(std::fabs(horodisk_gap(ha, hb)) < 1e-9);
    }
}

TEST_CASE("equidistant curve curvature-distance relation") {
    Geodesic axis = geodesic_between(IdealPoint(M_PI), IdealPoint(0.0));
    for (double d : {0.25, 0.8, 1.5}) {
        EquidistantCurve c{axis, d};
        CHECK(c.curvature() == doctest::Approx(std::tanh(d)));
        // sampled points stay at constant distance from the axis
        for (double s = -2.0; s <= 2.0; s += 0.5) {
            CHECK(point_to_geodesic(c.at(s), axis) == doctest::Approx(d).epsilon(1e-6));
        }
        // osculating-circle curvature via three nearby samples (Euclidean circle
        // through them, converted at the point): estimate by finite differences
        // of the unit tangent rotation rate in the hyperbolic metric.
        double h = 1e-3;
        DiskPoint z0 = c.at(-h), z1 = c.at(0.0), z2 = c.at(h);
        // hyperbolic turning angle approximation
        Complex t1 = (z1.z - z0.z), t2 = (z2.z - z1.z);
        double dpsi = std::arg(t2 / t1);
        // Euclidean step corresponds to hyperbolic step cosh(d)*h; curvature
        // has an extra connection term; compare against tanh(d) loosely via
        // the geodesic-curvature formula k = (dpsi/ds_h) + connection. We use
        // the distance-based check above as the primary assertion and require
        // here only the sign/rough magnitude.
        CHECK(std::fabs(dpsi) < 1.0);
    }
}

TEST_CASE("dk_constant: monotone in kappa, small for small kappa") {
    double prev = 0.0;
    for (double k : {0.1, 0.25, 0.5, 0.75}) {
        double d = dk_constant(k);
        CHECK(d > prev);
        prev = d;
    }
    CHECK(dk_constant(0.05) < 0.12);
    CHECK_THROWS_AS(dk_constant(0.0), Error);
    CHECK_THROWS_AS(dk_constant(1.0), Error);
}

TEST_CASE("appendix inequality d(c, rays) >= d(c, gamma) + d_kappa") {
    QuarterSpace q = quarter_space();
    for (double kappa : {0.25, 0.5, 0.75}) {
        double dk = dk_constant(kappa);
        double delta = std::atanh(kappa);
        for (int trial = 0; trial < 100; ++trial) {
            double D = uniform(0.05, 2.5);
            // curve c at distance D below the real diameter, curving away:
            // axis at height -(D + delta) on the imaginary axis
            double y_axis = std::tanh(0.5 * (D + delta));
            double cc = (1.0 + y_axis * y_axis) / (2.0 * y_axis);
            double phi = std::asin(1.0 / cc);
            Geodesic axis = geodesic_between(IdealPoint(-M_PI + phi), IdealPoint(-phi));
            EquidistantCurve c{axis, 0.0};
            c.signed_distance = delta;
            if (std::fabs(c.at(0.0).z.imag() + std::tanh(0.5 * D)) > 1e-9)
                c.signed_distance = -delta;
            REQUIRE(std::fabs(c.at(0.0).z.imag() + std::tanh(0.5 * D)) < 1e-9);

            // sampled distance from c to the two rays
            double best = 1e300;
            double span = 2.0 * (D + delta) + 9.0;
            int nscan = 900;
            for (int i = 0; i <= nscan; ++i) {
                double s = -span + 2.0 * span * i / nscan;
                DiskPoint z = c.at(s);
                double d1 = point_to_ray(z, q.apex, IdealPoint(0.0));
                double d2 = point_to_ray(z, q.apex, IdealPoint(M_PI));
                best = std::min({best, d1, d2});
            }
            CHECK(best >= D + dk - 1e-6);
        }
    }
}
