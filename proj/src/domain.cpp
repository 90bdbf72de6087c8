#include "hypgraph/domain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hypgraph/inscribed.hpp"

namespace hypgraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const Geodesic& canonical_axis() {
    static const Geodesic axis = geodesic_between(IdealPoint(kPi), IdealPoint(0.0));
    return axis;
}

// min of signed_point_to_geodesic(g.at(s), ref) over a generous window
double min_signed_dist(const Geodesic& g, const Geodesic& ref) {
    double best = 1e300, best_s = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double s = -14.0 + 28.0 * i / 400;
        double v = signed_point_to_geodesic(g.at(s), ref);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    double lo = best_s - 0.1, hi = best_s + 0.1;
    for (int it = 0; it < 60; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (signed_point_to_geodesic(g.at(m1), ref) <
            signed_point_to_geodesic(g.at(m2), ref))
            hi = m2;
        else
            lo = m1;
    }
    return std::min(best, signed_point_to_geodesic(g.at(0.5 * (lo + hi)), ref));
}

double max_signed_dist(const Geodesic& g, const Geodesic& ref) {
    double best = -1e300, best_s = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double s = -14.0 + 28.0 * i / 400;
        double v = signed_point_to_geodesic(g.at(s), ref);
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    double lo = best_s - 0.1, hi = best_s + 0.1;
    for (int it = 0; it < 60; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (signed_point_to_geodesic(g.at(m1), ref) >
            signed_point_to_geodesic(g.at(m2), ref))
            hi = m2;
        else
            lo = m1;
    }
    return std::max(best, signed_point_to_geodesic(g.at(0.5 * (lo + hi)), ref));
}

// extreme signed axis distance over a horocycle (Euclidean circle sampling)
double horocycle_extreme_axis_dist(const Horodisk& h, const Geodesic& axis, bool want_min) {
    Complex c = h.euclidean_center();
    double r = h.euclidean_radius();
    double best = want_min ? 1e300 : -1e300;
    for (int i = 0; i < 720; ++i) {
        double a = 2.0 * kPi * i / 720;
        Complex z = c + std::polar(r, a);
        if (std::abs(z) >= 1.0 - 1e-11) continue;
        double v = signed_point_to_geodesic(DiskPoint(z), axis);
        best = want_min ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

} // namespace

SurfaceModel SurfaceModel::plane() {
    SurfaceModel m;
    m.kind = Kind::plane;
    return m;
}

SurfaceModel SurfaceModel::annulus(double translation_length, std::optional<Geodesic> axis,
                                   double funnel_boundary_distance) {
    require(translation_length > 0.0, errc::bad_input, "translation length must be positive");
    require(funnel_boundary_distance > 0.0, errc::bad_input,
            "funnel boundary distance must be positive");
    SurfaceModel m;
    m.kind = Kind::annulus;
    m.translation_length = translation_length;
    m.funnel_boundary_distance = funnel_boundary_distance;
    if (axis) m.world = axis->frame;  // canonical axis -> caller's axis
    return m;
}

const Geodesic& SurfaceModel::axis() const { return canonical_axis(); }

const Isometry& IdealDomain::deck(int k) const {
    static const Isometry id = Isometry::identity();
    if (!annulus()) return id;
    const int K = 10;
    if (deck_pow_.empty()) {
        deck_pow_.resize(2 * K + 1);
        deck_pow_[K] = Isometry::identity();
        Isometry T = make_translation(model.axis(), model.translation_length);
        Isometry Ti = T.inverse();
        for (int i = 1; i <= K; ++i) {
            deck_pow_[K + i] = T * deck_pow_[K + i - 1];
            deck_pow_[K - i] = Ti * deck_pow_[K - i + 1];
        }
    }
    require(std::abs(k) <= K, errc::bad_input, "deck power out of cached range");
    return deck_pow_[K + k];
}

IdealPoint IdealDomain::vertex_lift(int vid, int k) const {
    if (k == 0) return verts[vid].xi;
    return deck(k)(verts[vid].xi);
}

double IdealDomain::horodisk_shift(int vid, int k) const {
    if (k == 0) return 0.0;
    return transport_shift(deck(k), verts[vid].xi);
}

Horodisk IdealDomain::lifted_horodisk(int vid, int k, double t_local) const {
    return Horodisk{vertex_lift(vid, k), t_local + horodisk_shift(vid, k)};
}

bool IdealDomain::contains(const DiskPoint& z) const {
    int W = winding_window();
    for (size_t e = 0; e < edges.size(); ++e) {
        for (int k = -W; k <= W; ++k) {
            Geodesic g = k == 0 ? edges[e].geo : transformed(deck(k), edges[e].geo);
            if (g.side(z.z) * edge_side_sign_[e] <= 0.0) return false;
        }
    }
    return true;
}

DiskPoint IdealDomain::interior_point() const { return interior_; }

double IdealDomain::axis_coord(Complex z) const {
    Complex w = model.axis().frame.inverse().apply(z);
    double a = w.real();
    double x_f = 0.0;
    if (std::fabs(a) > 1e-15) {
        double m = 1.0 + std::norm(w);
        double disc = std::max(0.0, m * m - 4.0 * a * a);
        x_f = (m - std::sqrt(disc)) / (2.0 * a);
    }
    return 2.0 * std::atanh(x_f);
}

void IdealDomain::finalize() {
    deck_pow_.clear();
    if (annulus()) {
        interior_ = DiskPoint();  // origin lies on the core
    } else {
        int n = static_cast<int>(ends[0].size());
        const IdealPoint& p = verts[ends[0][0]].xi;
        const IdealPoint& q = verts[ends[0][n / 2]].xi;
        interior_ = geodesic_between(p, q).midpoint();
    }
    edge_side_sign_.clear();
    for (const DomainEdge& e : edges) {
        double s = e.geo.side(interior_.z);
        require(std::fabs(s) > 1e-14, errc::bad_input, "degenerate interior point");
        edge_side_sign_.push_back(s > 0.0 ? 1.0 : -1.0);
    }
}

IdealDomain build_ideal_domain(const SurfaceModel& model,
                               const std::vector<std::vector<double>>& vertex_angles_per_end,
                               const std::vector<std::string>& labels_per_end) {
    size_t want_ends = model.is_annulus() ? 2 : 1;
    require(vertex_angles_per_end.size() == want_ends, errc::bad_input,
            "wrong number of ends for the surface model");
    require(labels_per_end.size() == want_ends, errc::bad_input, "labels per end mismatch");

    IdealDomain d;
    d.model = model;
    d.ends.resize(want_ends);

    for (size_t e = 0; e < want_ends; ++e) {
        const auto& raw = vertex_angles_per_end[e];
        const std::string& labels = labels_per_end[e];
        require(raw.size() % 2 == 0, errc::odd_vertex_count,
                "each end needs an even number of vertices");
        size_t minv = model.is_annulus() ? 2 : 4;
        require(raw.size() >= minv, errc::bad_input, "too few vertices");
        require(labels.size() == raw.size(), errc::bad_input, "one label per edge required");

        // normalize angles and check the arc constraint
        std::vector<double> ang;
        for (double a : raw) {
            IdealPoint p(a);
            if (model.is_annulus()) {
                if (e == 0)
                    require(p.theta > 1e-9 && p.theta < kPi - 1e-9, errc::edge_leaves_end,
                            "upper-end vertices must lie in (0, pi)");
                else
                    require(p.theta > kPi + 1e-9 && p.theta < 2 * kPi - 1e-9,
                            errc::edge_leaves_end, "lower-end vertices must lie in (pi, 2pi)");
            }
            ang.push_back(p.theta);
        }
        // rotate so the chain starts at its extreme vertex, keeping labels aligned
        size_t start = 0;
        bool descending = model.is_annulus() ? (e == 0) : false;
        for (size_t i = 1; i < ang.size(); ++i) {
            if (descending ? (ang[i] > ang[start]) : (ang[i] < ang[start])) start = i;
        }
        std::vector<double> a2(ang.size());
        std::string l2(labels.size(), ' ');
        for (size_t i = 0; i < ang.size(); ++i) {
            a2[i] = ang[(start + i) % ang.size()];
            l2[i] = labels[(start + i) % labels.size()];
        }
        for (size_t i = 0; i + 1 < a2.size(); ++i) {
            bool ok = descending ? (a2[i] > a2[i + 1] + kIdealAngleTol)
                                 : (a2[i] < a2[i + 1] - kIdealAngleTol);
            require(ok, errc::bad_input, "vertices must be cyclically ordered and distinct");
        }
        for (size_t i = 0; i < l2.size(); ++i) {
            require(l2[i] == 'a' || l2[i] == 'b', errc::bad_labels, "labels must be a or b");
            require(l2[i] != l2[(i + 1) % l2.size()], errc::non_alternating_labels,
                    "two successive edges must have different labels");
        }

        size_t base = d.verts.size();
        for (size_t i = 0; i < a2.size(); ++i) {
            int vid = d.N();
            d.verts.push_back({IdealPoint(a2[i]), static_cast<int>(e), static_cast<int>(i)});
            d.ends[e].push_back(vid);
        }
        for (size_t i = 0; i < a2.size(); ++i) {
            DomainEdge ed;
            ed.end = static_cast<int>(e);
            ed.index = static_cast<int>(i);
            ed.v0 = static_cast<int>(base + i);
            ed.label = l2[i];
            if (i + 1 < a2.size()) {
                ed.v1 = static_cast<int>(base + i + 1);
                ed.wrap = 0;
                ed.geo = geodesic_between(d.verts[ed.v0].xi, d.verts[ed.v1].xi);
            } else {
                ed.v1 = static_cast<int>(base);
                if (model.is_annulus()) {
                    ed.wrap = 1;
                    Isometry T = make_translation(model.axis(), model.translation_length);
                    ed.geo = geodesic_between(d.verts[ed.v0].xi, T(d.verts[ed.v1].xi));
                } else {
                    ed.wrap = 0;
                    ed.geo = geodesic_between(d.verts[ed.v0].xi, d.verts[ed.v1].xi);
                }
            }
            d.edges.push_back(ed);
        }
    }

    // edges must stay inside their end (annulus model)
    if (model.is_annulus()) {
        double dc = model.funnel_boundary_distance;
        for (const DomainEdge& ed : d.edges) {
            if (ed.end == 0) {
                require(min_signed_dist(ed.geo, model.axis()) >= dc - 1e-9,
                        errc::edge_leaves_end, "upper edge dips below the end boundary");
            } else {
                require(max_signed_dist(ed.geo, model.axis()) <= -dc + 1e-9,
                        errc::edge_leaves_end, "lower edge rises above the end boundary");
            }
        }
    }

    d.finalize();
    return d;
}

IdealDomain build_example_domain(const SurfaceModel& annulus_model, int l) {
    require(annulus_model.is_annulus(), errc::bad_input,
            "the orbit construction needs the annulus model");
    require(l % 2 == 0, errc::odd_l, "l must be even");
    require(l >= 4, errc::bad_input, "l must be at least 4");

    const Geodesic& axis = annulus_model.axis();
    double ell = annulus_model.translation_length;
    Isometry Tl = make_translation(axis, ell / l);

    auto orbit = [&](double seed_angle) {
        std::vector<double> angles;
        std::vector<double> shifts;
        Isometry acc = Isometry::identity();
        IdealPoint seed(seed_angle);
        for (int j = 0; j < l; ++j) {
            angles.push_back(acc(seed).theta);
            shifts.push_back(transport_shift(acc, seed));
            acc = Tl * acc;
        }
        return std::pair(angles, shifts);
    };

    auto [upper, upper_shift] = orbit(kPi / 2);
    auto [lower, lower_shift] = orbit(3 * kPi / 2);

    std::string labels(l, 'a');
    for (int i = 1; i < l; i += 2) labels[i] = 'b';

    IdealDomain d = build_ideal_domain(annulus_model, {upper, lower}, {labels, labels});

    // common tangency parameter of the transported horodisk family
    auto tangency_for = [&](const std::vector<double>& ang, const std::vector<double>& sh) {
        double chord = 2.0 * std::fabs(std::sin(0.5 * (ang[0] - ang[1])));
        return -0.5 * (sh[0] + sh[1] + 2.0 * std::log(0.5 * chord));
    };
    double tl_up = tangency_for(upper, upper_shift);
    double tl_low = tangency_for(lower, lower_shift);

    d.tangency_t.assign(d.N(), 0.0);
    for (int j = 0; j < l; ++j) {
        d.tangency_t[d.ends[0][j]] = tl_up + upper_shift[j];
        d.tangency_t[d.ends[1][j]] = tl_low + lower_shift[j];
    }

    // consecutive horodisks must be tangent, including the wrap pair
    for (int e = 0; e < 2; ++e) {
        for (int j = 0; j < l; ++j) {
            int v0 = d.ends[e][j];
            int v1 = d.ends[e][(j + 1) % l];
            int w = (j + 1 == l) ? 1 : 0;
            Horodisk h0 = d.lifted_horodisk(v0, 0, d.tangency_t[v0]);
            Horodisk h1 = d.lifted_horodisk(v1, w, d.tangency_t[v1]);
            require(std::fabs(horodisk_gap(h0, h1)) < 1e-8, errc::bad_input,
                    "orbit horodisks failed the tangency check");
        }
    }

    // tangency horodisks must stay inside their funnel end
    double dc = annulus_model.funnel_boundary_distance;
    for (int j = 0; j < l; ++j) {
        Horodisk hu = d.lifted_horodisk(d.ends[0][j], 0, d.tangency_t[d.ends[0][j]]);
        require(horocycle_extreme_axis_dist(hu, axis, true) >= dc - 1e-6,
                errc::horodisk_escapes_end, "tangency horodisk leaves the end; increase l");
        Horodisk hl = d.lifted_horodisk(d.ends[1][j], 0, d.tangency_t[d.ends[1][j]]);
        require(horocycle_extreme_axis_dist(hl, axis, false) <= -dc + 1e-6,
                errc::horodisk_escapes_end, "tangency horodisk leaves the end; increase l");
    }

    return d;
}

std::vector<EdgePair> consecutive_ba_pairs(const IdealDomain& d) {
    std::vector<EdgePair> pairs;
    size_t offset = 0;
    for (size_t e = 0; e < d.ends.size(); ++e) {
        size_t n = d.ends[e].size();
        size_t first_b = d.edges[offset].label == 'b' ? 0 : 1;
        for (size_t j = first_b; j < n + first_b; j += 2) {
            size_t b = offset + (j % n);
            size_t a = offset + ((j + 1) % n);
            pairs.push_back({static_cast<int>(b), static_cast<int>(a)});
        }
        offset += n;
    }
    return pairs;
}

namespace {

// model data for the extension: P is the half-space bounded by the geodesic
// gamma = (-1, -i) containing the origin; beta is the diameter through
// e^{i pi/4}; they meet orthogonally at zstar.
const Complex kZStar = -(std::sqrt(2.0) - 1.0) * std::polar(1.0, kPi / 4.0);
const Complex kDirIntoP = std::polar(1.0, kPi / 4.0);

} // namespace

IdealDomain extend_domain(const IdealDomain& d, const EdgePair& pair, double t,
                          ExtensionInfo* info) {
    require(d.annulus(), errc::bad_input, "extension requires the annulus model");
    require(t >= 0.0 && t <= kPi / 4.0 + 1e-12, errc::t_out_of_range,
            "t must lie in [0, pi/4]");
    require(pair.b_edge >= 0 && pair.b_edge < static_cast<int>(d.edges.size()) &&
                pair.a_edge >= 0 && pair.a_edge < static_cast<int>(d.edges.size()),
            errc::bad_input, "edge index out of range");
    const DomainEdge& eb = d.edges[pair.b_edge];
    const DomainEdge& ea = d.edges[pair.a_edge];
    require(eb.label == 'b' && ea.label == 'a', errc::bad_labels,
            "pair must be (b-edge, a-edge)");
    require(eb.end == ea.end, errc::non_consecutive_edges, "edges on different ends");
    int n = static_cast<int>(d.ends[eb.end].size());
    require((eb.index + 1) % n == ea.index, errc::non_consecutive_edges,
            "a-edge must be the successor of the b-edge");

    // lifts chained at the shared vertex
    Geodesic g1 = eb.geo;
    Geodesic g2 = eb.wrap == 0 ? ea.geo : transformed(d.deck(eb.wrap), ea.geo);

    const Geodesic& axis = d.model.axis();

    auto build_phi = [&](const Geodesic& g) {
        // foot of the common perpendicular with the axis, on g
        double lo = -14.0, hi = 14.0;
        for (int it = 0; it < 200; ++it) {
            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (point_to_geodesic(g.at(m1), axis) < point_to_geodesic(g.at(m2), axis))
                hi = m2;
            else
                lo = m1;
        }
        double sstar = 0.5 * (lo + hi);
        DiskPoint zstar = g.at(sstar);
        Complex nu = Complex(0, 1) * g.tangent(sstar);
        // outward = away from the axis
        DiskPoint probe(Isometry::point_frame(zstar, nu).apply(0.05));
        double d0 = point_to_geodesic(zstar, axis);
        if (point_to_geodesic(probe, axis) < d0) nu = -nu;
        return Isometry::point_frame(zstar, nu) *
               Isometry::point_frame(DiskPoint(kZStar), kDirIntoP).inverse();
    };

    Isometry phi1 = build_phi(g1);
    Isometry phi2 = build_phi(g2);

    // rhombus vertex cycles in the model half-space
    Complex R1v[4] = {Complex(1, 0), Complex(0, 1) * std::polar(1.0, t), Complex(-1, 0),
                      Complex(0, -1)};
    Complex R2v[4] = {std::polar(1.0, -t), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};

    // intermediate vertices from the model endpoint matched to the edge's
    // start lift, going around the far side of the rhombus
    auto far_path = [&](const Isometry& phi, const Complex* v,
                        const IdealPoint& from) -> std::vector<IdealPoint> {
        IdealPoint m1 = phi(IdealPoint(std::arg(v[2])));  // image of -1
        IdealPoint m3 = phi(IdealPoint(std::arg(v[3])));  // image of -i
        std::vector<Complex> path;
        if (same_ideal(m1, from, 1e-7)) {
            path = {v[1], v[0]};  // -1 -> i e^{it} -> 1 -> -i
        } else {
            require(same_ideal(m3, from, 1e-7), errc::bad_input,
                    "extension isometry failed to match the edge endpoints");
            path = {v[0], v[1]};  // -i -> 1 -> i e^{it} -> -1
        }
        std::vector<IdealPoint> out;
        for (Complex c : path) out.push_back(phi(IdealPoint(std::arg(c))));
        return out;
    };

    // assemble the new end chains
    std::vector<std::vector<double>> angles(d.ends.size());
    std::vector<std::string> labels(d.ends.size());
    std::vector<double> new_vertex_angles;
    size_t offset = 0;
    for (size_t e = 0; e < d.ends.size(); ++e) {
        size_t cnt = d.ends[e].size();
        for (size_t j = 0; j < cnt; ++j) {
            const DomainEdge& ed = d.edges[offset + j];
            angles[e].push_back(d.verts[ed.v0].xi.theta);
            int idx = static_cast<int>(offset + j);
            if (idx == pair.b_edge || idx == pair.a_edge) {
                bool is_b = idx == pair.b_edge;
                const Isometry& phi = is_b ? phi1 : phi2;
                const Complex* rv = is_b ? R1v : R2v;
                Geodesic gl = is_b ? g1 : g2;
                std::vector<IdealPoint> mids = far_path(phi, rv, gl.a);
                for (IdealPoint m : mids) {
                    IdealPoint rep = m;
                    // the a-edge chained past a wrap was handled in the shifted
                    // frame; pull its new vertices back into the base period
                    if (!is_b && eb.wrap == 1) rep = d.deck(-1)(m);
                    angles[e].push_back(rep.theta);
                    new_vertex_angles.push_back(rep.theta);
                }
                labels[e] += is_b ? std::string("bab") : std::string("aba");
            } else {
                labels[e] += ed.label;
            }
        }
        offset += cnt;
    }

    IdealDomain out = build_ideal_domain(d.model, angles, labels);

    if (info) {
        info->gamma1 = g1;
        info->gamma2 = eb.wrap == 0 ? ea.geo : g2;
        info->phi1 = phi1;
        info->phi2 = phi2;
        info->shared_vertex = eb.v1;
        info->new_vertices.clear();
        for (double a : new_vertex_angles) {
            for (int vid = 0; vid < out.N(); ++vid) {
                if (same_ideal(out.verts[vid].xi, IdealPoint(a), 1e-9))
                    info->new_vertices.push_back(vid);
            }
        }
    }
    return out;
}

TruncationVector tangency_truncation(const IdealDomain& d) {
    require(!d.tangency_t.empty(), errc::bad_input, "domain carries no tangency parameters");
    return TruncationVector{d.tangency_t};
}

TruncationVector certified_truncation(const IdealDomain& d, double slack) {
    int W = d.winding_window();
    double t_req = 0.0;

    struct Lift {
        int vid, k;
        double theta, shift;
    };
    std::vector<Lift> lifts;
    for (int v = 0; v < d.N(); ++v)
        for (int k = -W; k <= W; ++k)
            lifts.push_back({v, k, d.vertex_lift(v, k).theta, d.horodisk_shift(v, k)});

    // pairwise disjointness of the transported horodisk family
    for (size_t i = 0; i < lifts.size(); ++i) {
        for (size_t j = i + 1; j < lifts.size(); ++j) {
            double chord = 2.0 * std::fabs(std::sin(0.5 * (lifts[i].theta - lifts[j].theta)));
            if (chord < 1e-13) continue;  // same ideal point
            double need =
                0.5 * (-2.0 * std::log(0.5 * chord) - lifts[i].shift - lifts[j].shift);
            t_req = std::max(t_req, need);
        }
    }

    // clearance of every candidate geodesic and edge from non-endpoint horodisks
    std::vector<Geodesic> geos;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> gends;
    for (const DomainEdge& e : d.edges) {
        geos.push_back(e.geo);
        gends.push_back({{e.v0, 0}, {e.v1, e.wrap}});
    }
    for (const CutCandidate& c : cut_candidates(d)) {
        geos.push_back(c.geo);
        if (c.kind == CutCandidate::Kind::core)
            gends.push_back({{-1, 0}, {-1, 0}});
        else
            gends.push_back({{c.v0, 0}, {c.v1, c.w1}});
    }
    for (size_t gi = 0; gi < geos.size(); ++gi) {
        for (const Lift& L : lifts) {
            if ((gends[gi].first.first == L.vid && gends[gi].first.second == L.k) ||
                (gends[gi].second.first == L.vid && gends[gi].second.second == L.k))
                continue;
            double mb = min_busemann_on_geodesic(IdealPoint(L.theta), geos[gi]);
            if (std::isinf(mb)) continue;  // shares an ideal endpoint
            t_req = std::max(t_req, -mb - L.shift);
        }
    }

    return TruncationVector{std::vector<double>(d.N(), t_req + slack)};
}

Lengths lengths(const IdealDomain& d, const InscribedPolygon& P, const TruncationVector& tv) {
    require(static_cast<int>(tv.t.size()) == d.N(), errc::bad_input,
            "truncation vector size mismatch");
    int W = d.winding_window();

    std::vector<Horodisk> all;
    for (int v = 0; v < d.N(); ++v)
        for (int k = -W; k <= W; ++k) all.push_back(d.lifted_horodisk(v, k, tv.t[v]));
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (same_ideal(all[i].center, all[j].center, 1e-13)) continue;
            // tolerance covers roundoff on deep winding lifts of tangent pairs
            require(horodisk_gap(all[i], all[j]) >= -1e-6, errc::truncation_too_small,
                    "horodisks overlap at this truncation");
        }
    }

    Lengths out;
    for (const InscribedPolygon::ItemLift& it : P.lifts) {
        if (it.core) {
            for (int v = 0; v < d.N(); ++v) {
                for (int k = -W; k <= W; ++k) {
                    double mb = min_busemann_on_geodesic(d.vertex_lift(v, k), it.geo);
                    require(-(tv.t[v] + d.horodisk_shift(v, k)) <= mb + 1e-9,
                            errc::truncation_too_small, "horodisk reaches the core");
                }
            }
            out.gamma += d.model.translation_length * it.mult;
            continue;
        }
        std::vector<Horodisk> hs{d.lifted_horodisk(it.v0, it.k0, tv.t[it.v0]),
                                 d.lifted_horodisk(it.v1, it.k1, tv.t[it.v1])};
        for (int v = 0; v < d.N(); ++v) {
            for (int k = -W; k <= W; ++k) {
                if ((v == it.v0 && k == it.k0) || (v == it.v1 && k == it.k1)) continue;
                IdealPoint xi = d.vertex_lift(v, k);
                if (same_ideal(xi, it.geo.a, 1e-12) || same_ideal(xi, it.geo.b, 1e-12))
                    continue;
                double mb = min_busemann_on_geodesic(xi, it.geo);
                double tl = tv.t[v] + d.horodisk_shift(v, k);
                if (-tl > mb) hs.push_back(d.lifted_horodisk(v, k, tv.t[v]));
            }
        }
        double len;
        try {
            len = truncated_length(it.geo, std::nullopt, hs, true);
        } catch (const Error& err) {
            fail(errc::truncation_too_small, err.what());
        }
        if (it.is_edge) {
            if (d.edges[it.id].label == 'a')
                out.alpha += len * it.mult;
            else
                out.beta += len * it.mult;
        }
        out.gamma += len * it.mult;
    }
    return out;
}

JSReport js_check(const IdealDomain& d) {
    JSReport rep;
    std::vector<InscribedPolygon> polys = enumerate_inscribed(d, InscribedFilter::all, 2);
    rep.polygon_count = static_cast<int>(polys.size());
    rep.eval_t = certified_truncation(d, 1.0);
    rep.min_margin = std::numeric_limits<double>::infinity();

    const double kZeroTol = 1e-8;
    for (const InscribedPolygon& P : polys) {
        if (P.whole_domain) {
            Lengths L = lengths(d, P, rep.eval_t);
            rep.alpha_minus_beta = L.alpha - L.beta;
            if (std::fabs(rep.alpha_minus_beta) > kZeroTol)
                rep.witnesses.push_back({P.name, "alpha-beta", rep.alpha_minus_beta});
            continue;
        }
        if (!P.a_alternating && !P.b_alternating) continue;
        Lengths L = lengths(d, P, rep.eval_t);
        if (P.a_alternating) {
            double m = L.gamma - 2.0 * L.alpha;
            rep.min_margin = std::min(rep.min_margin, m);
            if (m <= kZeroTol) rep.witnesses.push_back({P.name, "gamma-2alpha", m});
        }
        if (P.b_alternating) {
            double m = L.gamma - 2.0 * L.beta;
            rep.min_margin = std::min(rep.min_margin, m);
            if (m <= kZeroTol) rep.witnesses.push_back({P.name, "gamma-2beta", m});
        }
    }
    rep.pass = rep.witnesses.empty();
    return rep;
}

} // namespace hypgraph
