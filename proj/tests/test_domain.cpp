#include "doctest.h"

#include <cmath>
#include <set>

#include "hypgraph/domain.hpp"
#include "hypgraph/inscribed.hpp"
#include "oracles.hpp"

using namespace hypgraph;

namespace {

IdealDomain ideal_square(const std::string& labels = "abab") {
    return build_ideal_domain(SurfaceModel::plane(),
                              {{0.0, M_PI / 2, M_PI, 3 * M_PI / 2}}, {labels});
}

IdealDomain example53(double ell = 4.0, int l = 4) {
    return build_example_domain(SurfaceModel::annulus(ell), l);
}

} // namespace

TEST_CASE("build_ideal_domain validation") {
    CHECK_NOTHROW(ideal_square());
    CHECK_THROWS_AS(ideal_square("aabb"), Error);  // non-alternating
    CHECK_THROWS_AS(build_ideal_domain(SurfaceModel::plane(),
                                       {{0.0, 1.0, 2.0}}, {"aba"}),
                    Error);  // odd count

    IdealDomain d = ideal_square();
    CHECK(d.N() == 4);
    CHECK(d.edges.size() == 4);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(d.edges[i].label == (i % 2 == 0 ? 'a' : 'b'));
    }
    // interior point is inside
    CHECK(d.contains(d.interior_point()));
    CHECK(d.contains(DiskPoint(Complex(0.0, 0.0))));
    CHECK(!d.contains(DiskPoint(0.8 * std::polar(1.0, M_PI / 4))));
}

TEST_CASE("annulus domain validation and membership") {
    IdealDomain d = example53();
    CHECK(d.N() == 8);
    CHECK(d.edges.size() == 8);
    CHECK(d.ends[0].size() == 4);
    CHECK(d.ends[1].size() == 4);
    // the core is inside, deep funnel points are outside
    CHECK(d.contains(DiskPoint(Complex(0.3, 0.0))));
    CHECK(!d.contains(DiskPoint(0.97 * std::polar(1.0, 1.1))));
    // periodicity of membership
    Isometry T = d.deck(1);
    for (int i = 0; i < 50; ++i) {
        DiskPoint p = oracles::random_point(0.6);
        CHECK(d.contains(p) == d.contains(T(p)));
    }
}

TEST_CASE("example domain: tangency parameters and horodisk tangency") {
    IdealDomain d = example53();
    REQUIRE(!d.tangency_t.empty());
    // consecutive tangency, including the wrap pair
    for (int e = 0; e < 2; ++e) {
        int l = static_cast<int>(d.ends[e].size());
        for (int j = 0; j < l; ++j) {
            int v0 = d.ends[e][j], v1 = d.ends[e][(j + 1) % l];
            int w = j + 1 == l ? 1 : 0;
            Horodisk h0 = d.lifted_horodisk(v0, 0, d.tangency_t[v0]);
            Horodisk h1 = d.lifted_horodisk(v1, w, d.tangency_t[v1]);
            CHECK(std::fabs(horodisk_gap(h0, h1)) < 1e-8);
        }
    }
    CHECK_THROWS_AS(build_example_domain(SurfaceModel::annulus(4.0), 3), Error);  // odd l
    // too-small l or translation length pushes horodisks out of the end
    CHECK_THROWS_AS(build_example_domain(SurfaceModel::annulus(4.0, std::nullopt, 1.0), 4),
                    Error);
}

TEST_CASE("inscribed enumeration on the ideal square") {
    IdealDomain d = ideal_square();
    auto polys = enumerate_inscribed(d);
    // the domain itself plus two triangles per diagonal
    CHECK(polys.size() == 5);
    int whole = 0, triangles = 0;
    for (const auto& P : polys) {
        if (P.whole_domain) {
            ++whole;
            CHECK(P.items.size() == 4);
        } else {
            // triangle: two edges + one diagonal
            CHECK(P.items.size() == 3);
            CHECK(P.cut_family_size() == 1);
            CHECK(P.euler == 1);
            ++triangles;
        }
        CHECK(P.cut_family_size() <= finite_family_bound(d));
    }
    CHECK(whole == 1);
    CHECK(triangles == 4);
}

TEST_CASE("triangle faces of the square are not strictly alternating") {
    IdealDomain d = ideal_square();
    for (const auto& P : enumerate_inscribed(d)) {
        if (P.whole_domain) {
            CHECK(P.a_alternating);
            CHECK(P.b_alternating);
        } else {
            CHECK(!P.a_alternating);
            CHECK(!P.b_alternating);
        }
    }
}

TEST_CASE("lengths on the square: symmetry and slopes") {
    IdealDomain d = ideal_square();
    auto polys = enumerate_inscribed(d);
    const InscribedPolygon* omega = nullptr;
    for (const auto& P : polys)
        if (P.whole_domain) omega = &P;
    REQUIRE(omega);

    TruncationVector tv = certified_truncation(d, 1.0);
    Lengths L = lengths(d, *omega, tv);
    CHECK(L.alpha == doctest::Approx(L.beta).epsilon(1e-10));
    CHECK(L.gamma == doctest::Approx(L.alpha + L.beta).epsilon(1e-10));

    // raising one vertex parameter by delta: gamma grows by exactly 2 delta,
    // alpha and beta by delta each
    double delta = 0.37;
    TruncationVector tv2 = tv;
    tv2.t[1] += delta;
    Lengths L2 = lengths(d, *omega, tv2);
    CHECK(L2.gamma - L.gamma == doctest::Approx(2 * delta).epsilon(1e-9));
    CHECK(L2.alpha - L.alpha == doctest::Approx(delta).epsilon(1e-9));
    CHECK(L2.beta - L.beta == doctest::Approx(delta).epsilon(1e-9));
}

TEST_CASE("js_check: square passes with alpha = beta") {
    JSReport rep = js_check(ideal_square());
    CHECK(rep.pass);
    CHECK(std::fabs(rep.alpha_minus_beta) < 1e-9);
    CHECK(rep.polygon_count == 5);
}

TEST_CASE("js_check is isometry invariant on the plane model") {
    // a scalene ideal hexagon
    std::vector<double> angles{0.3, 1.1, 2.0, 3.2, 4.1, 5.5};
    IdealDomain d =
        build_ideal_domain(SurfaceModel::plane(), {angles}, {"ababab"});
    JSReport r1 = js_check(d);

    Isometry g = oracles::random_isometry();
    std::vector<double> mapped;
    for (double a : angles) mapped.push_back(g(IdealPoint(a)).theta);
    IdealDomain dm = build_ideal_domain(SurfaceModel::plane(), {mapped}, {"ababab"});
    JSReport r2 = js_check(dm);

    CHECK(r1.pass == r2.pass);
    CHECK(r1.polygon_count == r2.polygon_count);
    CHECK(r1.alpha_minus_beta == doctest::Approx(r2.alpha_minus_beta).epsilon(1e-8));
    CHECK(r1.min_margin == doctest::Approx(r2.min_margin).epsilon(1e-8));
}

TEST_CASE("inscribed enumeration on the example domain") {
    IdealDomain d = example53();
    auto polys = enumerate_inscribed(d);
    CHECK(polys.size() > 5);
    int annular = 0;
    bool saw_core_split = false;
    for (const auto& P : polys) {
        CHECK(P.cut_family_size() <= finite_family_bound(d));
        if (P.euler == 0) ++annular;
        for (const auto& it : P.items) {
            if (!it.is_edge && it.mult == 2) {
                // a cut with the polygon on both sides: spec'd double counting
                CHECK(P.euler == 1);
            }
        }
        bool has_core = false;
        for (const auto& L : P.lifts) has_core = has_core || L.core;
        saw_core_split = saw_core_split || has_core;
    }
    CHECK(annular >= 3);  // Omega itself and the two core halves at least
    CHECK(saw_core_split);
}

TEST_CASE("example domain: alpha = beta = 0 at the tangency truncation") {
    IdealDomain d = example53();
    auto polys = enumerate_inscribed(d);
    TruncationVector tv = tangency_truncation(d);
    for (const auto& P : polys) {
        Lengths L = lengths(d, P, tv);
        CHECK(L.alpha == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(L.beta == doctest::Approx(0.0).epsilon(1e-10));
        if (!P.whole_domain) CHECK(L.gamma > 1e-6);  // interior geodesics survive
    }
}

TEST_CASE("js_check passes on the example domain") {
    JSReport rep = js_check(example53());
    CHECK(rep.pass);
    CHECK(std::fabs(rep.alpha_minus_beta) < 1e-8);
    CHECK(rep.min_margin > 0.0);
}

TEST_CASE("monotonicity of gamma - 2 alpha in the truncation") {
    IdealDomain d = example53();
    auto polys = enumerate_inscribed(d);
    TruncationVector tv = certified_truncation(d, 1.0);
    for (const auto& P : polys) {
        if (P.whole_domain) continue;
        Lengths L1 = lengths(d, P, tv);
        TruncationVector tv2 = tv;
        for (double& x : tv2.t) x += oracles::uniform(0.0, 0.8);
        Lengths L2 = lengths(d, P, tv2);
        CHECK(L2.gamma - 2 * L2.alpha >= L1.gamma - 2 * L1.alpha - 1e-9);
        CHECK(L2.gamma - 2 * L2.beta >= L1.gamma - 2 * L1.beta - 1e-9);
    }
}

TEST_CASE("extension: D0 fails exactly at the four rhombus polygons") {
    IdealDomain om0 = example53();
    auto pairs = consecutive_ba_pairs(om0);
    REQUIRE(!pairs.empty());
    ExtensionInfo info;
    IdealDomain d0 = extend_domain(om0, pairs[0], 0.0, &info);
    CHECK(d0.N() == 12);

    JSReport rep = js_check(d0);
    CHECK(!rep.pass);
    // exactly four zero-margin witnesses: R1, R2 and their complements
    CHECK(rep.witnesses.size() == 4);
    int rhombi = 0, complements = 0;
    for (const auto& w : rep.witnesses) {
        CHECK(std::fabs(w.margin) <= 1e-6);
        CHECK((w.condition == "gamma-2alpha" || w.condition == "gamma-2beta"));
    }
    // two witnesses must be 4-item polygons (the rhombi), two must be large
    for (const auto& w : rep.witnesses) {
        if (w.polygon.find("D:") == 0 && w.polygon.size() < 40)
            ++rhombi;
        else
            ++complements;
    }
    CHECK(rhombi >= 2);
}

TEST_CASE("extension with positive t is a solvable domain") {
    IdealDomain om0 = example53();
    auto pairs = consecutive_ba_pairs(om0);
    IdealDomain dt = extend_domain(om0, pairs[0], 0.2);
    JSReport rep = js_check(dt);
    CHECK(rep.pass);
    CHECK(std::fabs(rep.alpha_minus_beta) < 1e-8);

    CHECK_THROWS_AS(extend_domain(om0, pairs[0], 1.0), Error);   // out of range
    EdgePair bad{pairs[0].a_edge, pairs[0].b_edge};
    CHECK_THROWS_AS(extend_domain(om0, bad, 0.1), Error);        // labels swapped
}

TEST_CASE("consecutive (b,a) pairs cover all edges") {
    IdealDomain d = example53();
    auto pairs = consecutive_ba_pairs(d);
    CHECK(pairs.size() == 4);  // 8 edges
    std::set<int> used;
    for (const auto& p : pairs) {
        CHECK(d.edges[p.b_edge].label == 'b');
        CHECK(d.edges[p.a_edge].label == 'a');
        used.insert(p.b_edge);
        used.insert(p.a_edge);
    }
    CHECK(used.size() == d.edges.size());
}

TEST_CASE("gauss-bonnet area quantization of enumerated polygons") {
    for (IdealDomain d : {ideal_square(), example53()}) {
        for (const auto& P : enumerate_inscribed(d)) {
            // |P| = (n_P + k_P) pi - 2 pi chi must be a positive multiple of pi
            int item_count = 0;
            for (const auto& it : P.items) item_count += it.mult;
            double area_over_pi = item_count - 2.0 * P.euler;
            CHECK(area_over_pi > 0);
            // each boundary geodesic contributes one corner vertex per end;
            // the count equals the number of ideal vertices with multiplicity
        }
    }
}

TEST_CASE("vertex budget enforced") {
    std::vector<double> angles;
    std::string labels;
    for (int i = 0; i < 14; ++i) {
        angles.push_back(2 * M_PI * i / 14.0);
        labels += (i % 2 == 0 ? 'a' : 'b');
    }
    IdealDomain d = build_ideal_domain(SurfaceModel::plane(), {angles}, {labels});
    CHECK_THROWS_AS(enumerate_inscribed(d), Error);
}
