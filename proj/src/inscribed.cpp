#include "hypgraph/inscribed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hypgraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kLiftWindow = 3;  // windings tested in side/crossing checks
constexpr double kProbeDepth = 9.0;

double offset_angle(double phi, double base) {
    double o = std::fmod(phi - base, 2.0 * kPi);
    if (o < 0) o += 2.0 * kPi;
    return o;
}

// strict membership of x in the open ccw arc from lo to hi
bool in_open_arc(double x, double lo, double hi) {
    double span = offset_angle(hi, lo);
    double pos = offset_angle(x, lo);
    return pos > 1e-11 && pos < span - 1e-11;
}

bool angles_equal(double a, double b) {
    double d = offset_angle(a, b);
    return d < 1e-11 || d > 2.0 * kPi - 1e-11;
}

// do the chords (a0,a1) and (b0,b1) cross transversally in the open disk?
bool chords_cross(double a0, double a1, double b0, double b1) {
    if (angles_equal(b0, a0) || angles_equal(b0, a1) || angles_equal(b1, a0) ||
        angles_equal(b1, a1))
        return false;  // shared ideal endpoint
    bool i0 = in_open_arc(b0, a0, a1);
    bool i1 = in_open_arc(b1, a0, a1);
    return i0 != i1;
}

} // namespace

std::vector<CutCandidate> cut_candidates(const IdealDomain& d) {
    std::vector<CutCandidate> out;
    auto add_chord = [&](int v0, int v1, int w1, const std::string& name) {
        CutCandidate c;
        c.kind = CutCandidate::Kind::chord;
        c.v0 = v0;
        c.v1 = v1;
        c.w1 = w1;
        c.geo = geodesic_between(d.verts[v0].xi, d.vertex_lift(v1, w1));
        c.name = name;
        out.push_back(c);
    };

    if (!d.annulus()) {
        int n = static_cast<int>(d.ends[0].size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;  // that's an edge
                std::ostringstream name;
                name << "d(" << i << "," << j << ")";
                add_chord(d.ends[0][i], d.ends[0][j], 0, name.str());
            }
        }
        return out;
    }

    for (size_t e = 0; e < d.ends.size(); ++e) {
        int n = static_cast<int>(d.ends[e].size());
        const char* tag = e == 0 ? "u" : "l";
        for (int i = 0; i < n; ++i) {
            for (int span = 2; span <= n; ++span) {
                int j = (i + span) % n;
                int w = (i + span) / n;
                std::ostringstream name;
                name << "d(" << tag << i << "," << tag << j;
                if (w) name << "+" << w;
                name << ")";
                add_chord(d.ends[e][i], d.ends[e][j], w, name.str());
            }
        }
    }
    int nu = static_cast<int>(d.ends[0].size());
    int nl = static_cast<int>(d.ends[1].size());
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nl; ++j) {
            for (int w = -1; w <= 1; ++w) {
                std::ostringstream name;
                name << "x(u" << i << ",l" << j;
                if (w) name << (w > 0 ? "+" : "") << w;
                name << ")";
                add_chord(d.ends[0][i], d.ends[1][j], w, name.str());
            }
        }
    }
    CutCandidate core;
    core.kind = CutCandidate::Kind::core;
    core.geo = d.model.axis();
    core.name = "core";
    out.push_back(core);
    return out;
}

double finite_family_bound(const IdealDomain& d) {
    double kappa = d.annulus() ? 1.0 : 0.0;
    double chi = d.annulus() ? 0.0 : 1.0;
    double n = d.N();
    return kappa + (1.0 + 0.5 * n - chi) * (n - 2.0 * chi);
}

namespace {

struct Ctx {
    const IdealDomain& d;
    std::vector<CutCandidate> cands;
    std::vector<std::vector<Geodesic>> lifted;   // per candidate, winding-indexed
    std::vector<std::vector<double>> origin_sign;
    std::vector<std::vector<bool>> disjoint;
    std::vector<std::vector<Geodesic>> edge_lifts;  // per edge, winding-indexed
    std::vector<double> edge_sign;                  // interior side of each edge

    const Geodesic& lift(int c, int w) const { return lifted[c][w + kLiftWindow + 1]; }
    double osign(int c, int w) const { return origin_sign[c][w + kLiftWindow + 1]; }
    const Geodesic& edge_lift(int e, int w) const {
        return edge_lifts[e][w + kLiftWindow + 1];
    }

    bool omega_contains(Complex z) const {
        int W = d.annulus() ? kLiftWindow : 0;
        for (size_t e = 0; e < edge_lifts.size(); ++e)
            for (int w = -W; w <= W; ++w)
                if (edge_lift(static_cast<int>(e), w).side(z) * edge_sign[e] <= 0.0)
                    return false;
        return true;
    }
};

Ctx make_ctx(const IdealDomain& d) {
    Ctx ctx{d, cut_candidates(d), {}, {}, {}, {}, {}};
    int n = static_cast<int>(ctx.cands.size());
    Complex ref = d.interior_point().z;
    for (int c = 0; c < n; ++c) {
        std::vector<Geodesic> ls;
        std::vector<double> sg;
        for (int w = -kLiftWindow - 1; w <= kLiftWindow + 1; ++w) {
            Geodesic g = (w == 0 || ctx.cands[c].kind == CutCandidate::Kind::core)
                             ? ctx.cands[c].geo
                             : transformed(d.deck(w), ctx.cands[c].geo);
            ls.push_back(g);
            double s = g.side(ref);
            sg.push_back(s >= 0.0 ? 1.0 : -1.0);
        }
        ctx.lifted.push_back(std::move(ls));
        ctx.origin_sign.push_back(std::move(sg));
    }
    for (const DomainEdge& e : d.edges) {
        std::vector<Geodesic> ls;
        for (int w = -kLiftWindow - 1; w <= kLiftWindow + 1; ++w)
            ls.push_back(w == 0 ? e.geo : transformed(d.deck(w), e.geo));
        ctx.edge_lifts.push_back(std::move(ls));
        double s = e.geo.side(ref);
        ctx.edge_sign.push_back(s >= 0.0 ? 1.0 : -1.0);
    }
    // quotient-level pairwise disjointness
    ctx.disjoint.assign(n, std::vector<bool>(n, true));
    auto ends_of = [&](int c, int w) {
        const CutCandidate& cc = ctx.cands[c];
        return std::pair<double, double>(d.vertex_lift(cc.v0, w).theta,
                                         d.vertex_lift(cc.v1, w + cc.w1).theta);
    };
    for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = c1; c2 < n; ++c2) {
            bool dis = true;
            bool core1 = ctx.cands[c1].kind == CutCandidate::Kind::core;
            bool core2 = ctx.cands[c2].kind == CutCandidate::Kind::core;
            if (core1 && core2) {
                dis = true;
            } else if (core1 || core2) {
                // the core crosses exactly the chords joining the two ends
                int ch = core1 ? c2 : c1;
                int e0 = d.verts[ctx.cands[ch].v0].end;
                int e1 = d.verts[ctx.cands[ch].v1].end;
                dis = (e0 == e1);
            } else {
                auto [a0, a1] = ends_of(c1, 0);
                for (int w = -kLiftWindow; w <= kLiftWindow && dis; ++w) {
                    if (c1 == c2 && w == 0) continue;
                    auto [b0, b1] = ends_of(c2, w);
                    if (chords_cross(a0, a1, b0, b1)) dis = false;
                }
            }
            ctx.disjoint[c1][c2] = ctx.disjoint[c2][c1] = dis;
        }
    }
    return ctx;
}

struct Face {
    bool periodic = false;
    struct PerLift {
        int cand, w;
        double sign;
    };
    struct AllLifts {
        int cand;
        double polarity;  // +1: interior-point side, for every lift
    };
    std::vector<PerLift> per;
    std::vector<AllLifts> all;

    bool references(int cand) const {
        for (const auto& p : per)
            if (p.cand == cand) return true;
        for (const auto& a : all)
            if (a.cand == cand) return true;
        return false;
    }
};

bool cuts_ok(const Ctx& ctx, const Face& f, Complex z) {
    for (const auto& p : f.per) {
        if (ctx.lift(p.cand, p.w).side(z) * p.sign <= 0.0) return false;
    }
    int W = ctx.d.annulus() ? kLiftWindow : 0;
    for (const auto& a : f.all) {
        for (int w = -W; w <= W; ++w) {
            if (ctx.lift(a.cand, w).side(z) * ctx.osign(a.cand, w) * a.polarity <= 0.0)
                return false;
        }
    }
    return true;
}

bool face_contains(const Ctx& ctx, const Face& f, const DiskPoint& z) {
    return ctx.omega_contains(z.z) && cuts_ok(ctx, f, z.z);
}

// strictly alternating polygons admit at most two cut-ends per vertex; the
// enumeration prunes families beyond that (their faces cannot alternate)
bool degree_ok(const Ctx& ctx, const Face& f, int cand) {
    std::map<int, int> deg;
    auto add = [&](int c) {
        if (ctx.cands[c].kind == CutCandidate::Kind::core) return;
        ++deg[ctx.cands[c].v0];
        ++deg[ctx.cands[c].v1];
    };
    for (const auto& p : f.per) add(p.cand);
    for (const auto& a : f.all) add(a.cand);
    add(cand);
    for (const auto& [v, k] : deg)
        if (k > 2) return false;
    return true;
}

// arclength coordinate where a cross chord meets the core
double core_crossing(const Ctx& ctx, int cand) {
    const Geodesic& g = ctx.lift(cand, 0);
    if (g.is_diameter) return 0.0;
    double m = g.center.real();
    double disc = m * m - 1.0;
    require(disc >= 0.0, errc::bad_input, "cross chord does not meet the core");
    double x = m > 0 ? m - std::sqrt(disc) : m + std::sqrt(disc);
    return 2.0 * std::atanh(x);
}

// children of f when cut along `cand`; empty when not applicable
std::vector<Face> split_face(const Ctx& ctx, const Face& f, int cand) {
    const IdealDomain& d = ctx.d;
    const CutCandidate& c = ctx.cands[cand];
    if (f.references(cand)) return {};
    for (const auto& p : f.per)
        if (!ctx.disjoint[cand][p.cand]) return {};
    for (const auto& a : f.all)
        if (!ctx.disjoint[cand][a.cand]) return {};
    if (!degree_ok(ctx, f, cand)) return {};

    if (f.periodic) {
        if (c.kind == CutCandidate::Kind::core) {
            if (!cuts_ok(ctx, f, c.geo.at(0.0).z)) return {};
            Face up = f, low = f;
            up.per.push_back({cand, 0, +1.0});  // side(z) = Im z
            low.per.push_back({cand, 0, -1.0});
            return {up, low};
        }
        DiskPoint mid = ctx.lift(cand, 0).midpoint();
        if (!cuts_ok(ctx, f, mid.z)) return {};
        if (d.verts[c.v0].end == d.verts[c.v1].end) {
            bool belt = (c.v0 == c.v1 && c.w1 == 1);
            if (belt) {
                Face core_side = f, cap_side = f;
                core_side.all.push_back({cand, +1.0});
                cap_side.all.push_back({cand, -1.0});
                return {core_side, cap_side};
            }
            Face pocket = f, rest = f;
            pocket.periodic = false;
            pocket.per.push_back({cand, 0, -ctx.osign(cand, 0)});
            rest.all.push_back({cand, +1.0});
            return {pocket, rest};
        }
        // cross chord: cuts the annular face open into one disk face
        double x0 = core_crossing(ctx, cand);
        DiskPoint probe = d.model.axis().at(x0 + 0.5 * d.model.translation_length);
        Face open = f;
        open.periodic = false;
        double s0 = ctx.lift(cand, 0).side(probe.z) >= 0 ? 1.0 : -1.0;
        double s1 = ctx.lift(cand, 1).side(probe.z) >= 0 ? 1.0 : -1.0;
        open.per.push_back({cand, 0, s0});
        open.per.push_back({cand, 1, s1});
        return {open};
    }

    // disk face: locate the unique lift inside
    if (c.kind == CutCandidate::Kind::core) return {};
    int found_w = 0, found = 0;
    int W = d.annulus() ? kLiftWindow : 0;
    for (int w = -W; w <= W; ++w) {
        if (cuts_ok(ctx, f, ctx.lift(cand, w).midpoint().z)) {
            found_w = w;
            ++found;
        }
    }
    if (found == 0) return {};
    require(found == 1, errc::bad_input, "ambiguous candidate lift inside a disk face");
    Face left = f, right = f;
    left.per.push_back({cand, found_w, +1.0});
    right.per.push_back({cand, found_w, -1.0});
    return {left, right};
}

struct Instance {
    bool is_edge;
    bool core;
    int id;
    int w;  // lift winding
};

std::vector<Instance> boundary_instances(const Ctx& ctx, const Face& f) {
    const IdealDomain& d = ctx.d;
    std::vector<Instance> out;

    int wlo = 0, whi = 0;
    if (!f.periodic && d.annulus()) {
        wlo = -2;
        whi = 2;
        for (const auto& p : f.per) {
            wlo = std::min(wlo, p.w - 2);
            whi = std::max(whi, p.w + 2);
        }
    }

    for (size_t e = 0; e < d.edges.size(); ++e) {
        if (f.periodic) {
            if (cuts_ok(ctx, f, d.edges[e].geo.midpoint().z))
                out.push_back({true, false, static_cast<int>(e), 0});
        } else {
            for (int w = wlo; w <= whi; ++w) {
                Geodesic g = w == 0 ? d.edges[e].geo : transformed(d.deck(w), d.edges[e].geo);
                if (cuts_ok(ctx, f, g.midpoint().z)) {
                    require(!d.annulus() || (w != wlo && w != whi), errc::bad_input,
                            "winding window too small for face extraction");
                    out.push_back({true, false, static_cast<int>(e), w});
                }
            }
        }
    }

    auto adjacent = [&](int cand, int w, const Face& without) {
        return cuts_ok(ctx, without, ctx.lift(cand, w).midpoint().z);
    };
    for (size_t i = 0; i < f.per.size(); ++i) {
        Face without = f;
        without.per.erase(without.per.begin() + i);
        if (adjacent(f.per[i].cand, f.per[i].w, without)) {
            bool is_core = ctx.cands[f.per[i].cand].kind == CutCandidate::Kind::core;
            out.push_back({false, is_core, f.per[i].cand, f.per[i].w});
        }
    }
    for (size_t i = 0; i < f.all.size(); ++i) {
        Face without = f;
        without.all.erase(without.all.begin() + i);
        if (f.periodic) {
            if (adjacent(f.all[i].cand, 0, without))
                out.push_back({false, false, f.all[i].cand, 0});
        } else {
            // a disk face sees specific lifts of a periodic constraint
            for (int w = wlo; w <= whi; ++w) {
                if (adjacent(f.all[i].cand, w, without))
                    out.push_back({false, false, f.all[i].cand, w});
            }
        }
    }
    return out;
}

InscribedPolygon extract_polygon(const Ctx& ctx, const Face& f) {
    const IdealDomain& d = ctx.d;
    InscribedPolygon P;
    P.euler = f.periodic ? 0 : 1;

    std::vector<Instance> insts = boundary_instances(ctx, f);

    std::map<std::pair<bool, int>, int> mult;
    for (const Instance& I : insts) ++mult[{I.is_edge, I.id}];
    for (const auto& [k, m] : mult) P.items.push_back({k.first, k.second, m});
    P.whole_domain = true;
    for (const auto& it : P.items)
        if (!it.is_edge) P.whole_domain = false;

    std::vector<int> vset;
    for (const Instance& I : insts) {
        InscribedPolygon::ItemLift L;
        L.is_edge = I.is_edge;
        L.id = I.id;
        L.mult = 1;
        if (!I.is_edge && I.core) {
            L.core = true;
            L.geo = d.model.axis();
            P.lifts.push_back(L);
            continue;
        }
        int v0, v1, wrap;
        if (I.is_edge) {
            v0 = d.edges[I.id].v0;
            v1 = d.edges[I.id].v1;
            wrap = d.edges[I.id].wrap;
            L.geo = I.w == 0 ? d.edges[I.id].geo : transformed(d.deck(I.w), d.edges[I.id].geo);
        } else {
            v0 = ctx.cands[I.id].v0;
            v1 = ctx.cands[I.id].v1;
            wrap = ctx.cands[I.id].w1;
            L.geo = ctx.lift(I.id, I.w);
        }
        L.v0 = v0;
        L.k0 = I.w;
        L.v1 = v1;
        L.k1 = I.w + wrap;
        P.lifts.push_back(L);
        vset.push_back(v0);
        vset.push_back(v1);
    }
    std::sort(vset.begin(), vset.end());
    vset.erase(std::unique(vset.begin(), vset.end()), vset.end());
    P.vertices = vset;

    // corners: group item ends by vertex lift (quotient representative on
    // periodic faces), pair around the angular fan at the vertex
    struct EndRec {
        int inst;
        double other;
    };
    std::map<std::pair<int, int>, std::vector<EndRec>> groups;
    for (size_t ii = 0; ii < P.lifts.size(); ++ii) {
        const auto& L = P.lifts[ii];
        if (L.core) continue;
        if (f.periodic) {
            groups[{L.v0, 0}].push_back(
                {static_cast<int>(ii), d.vertex_lift(L.v1, L.k1 - L.k0).theta});
            groups[{L.v1, 0}].push_back(
                {static_cast<int>(ii), d.vertex_lift(L.v0, L.k0 - L.k1).theta});
        } else {
            groups[{L.v0, L.k0}].push_back(
                {static_cast<int>(ii), d.vertex_lift(L.v1, L.k1).theta});
            groups[{L.v1, L.k1}].push_back(
                {static_cast<int>(ii), d.vertex_lift(L.v0, L.k0).theta});
        }
    }

    auto corner_label_count = [&](int i1, int i2, char lab) {
        int cnt = 0;
        for (int i : {i1, i2}) {
            const auto& L = P.lifts[i];
            if (L.is_edge && d.edges[L.id].label == lab) ++cnt;
        }
        return cnt;
    };

    P.a_alternating = true;
    P.b_alternating = true;
    bool has_corner = false;
    for (auto& [vk, ends] : groups) {
        double theta_v = d.vertex_lift(vk.first, vk.second).theta;
        std::sort(ends.begin(), ends.end(), [&](const EndRec& x, const EndRec& y) {
            return offset_angle(x.other, theta_v) < offset_angle(y.other, theta_v);
        });
        std::vector<std::pair<int, int>> corners;
        if (ends.size() == 2) {
            corners.push_back({ends[0].inst, ends[1].inst});
        } else {
            require(ends.size() % 2 == 0, errc::bad_input, "odd corner fan");
            for (size_t i = 0; i + 1 < ends.size(); ++i) {
                double o1 = offset_angle(ends[i].other, theta_v);
                double o2 = offset_angle(ends[i + 1].other, theta_v);
                double psi = theta_v + 0.5 * (o1 + o2);
                Geodesic probe_g = geodesic_between(IdealPoint(theta_v), IdealPoint(psi));
                DiskPoint probe = probe_g.at(-kProbeDepth);
                bool inside = face_contains(ctx, f, probe);
                bool expect = (i % 2 == 0);
                require(inside == expect, errc::bad_input, "unexpected corner fan pattern");
                if (inside) corners.push_back({ends[i].inst, ends[i + 1].inst});
            }
        }
        for (auto [i1, i2] : corners) {
            has_corner = true;
            if (corner_label_count(i1, i2, 'a') != 1) P.a_alternating = false;
            if (corner_label_count(i1, i2, 'b') != 1) P.b_alternating = false;
        }
    }
    if (!has_corner) {
        P.a_alternating = false;
        P.b_alternating = false;
    }

    std::ostringstream name;
    name << (f.periodic ? "A:" : "D:");
    for (const auto& it : P.items) {
        if (it.is_edge)
            name << "e" << it.id;
        else
            name << ctx.cands[it.id].name;
        if (it.mult > 1) name << "x" << it.mult;
        name << ",";
    }
    P.name = P.whole_domain ? "Omega" : name.str();
    return P;
}

} // namespace

std::string InscribedPolygon::key() const {
    std::ostringstream k;
    k << euler << "|";
    for (const auto& it : items) k << (it.is_edge ? "e" : "c") << it.id << "x" << it.mult << ",";
    return k.str();
}

int InscribedPolygon::cut_family_size() const {
    int n = 0;
    for (const auto& it : items)
        if (!it.is_edge) ++n;
    return n;
}

std::vector<InscribedPolygon> enumerate_inscribed(const IdealDomain& d, InscribedFilter filter,
                                                  int max_cuts) {
    require(d.N() <= 12, errc::vertex_budget_exceeded,
            "inscribed-polygon enumeration is limited to 12 vertices");
    Ctx ctx = make_ctx(d);

    std::deque<Face> queue;
    std::map<std::string, InscribedPolygon> seen;

    Face root;
    root.periodic = d.annulus();
    InscribedPolygon rootP = extract_polygon(ctx, root);
    seen.emplace(rootP.key(), rootP);
    queue.push_back(root);

    size_t guard = 0;
    while (!queue.empty()) {
        Face f = queue.front();
        queue.pop_front();
        require(++guard < 200000, errc::bad_input, "face enumeration runaway");
        if (max_cuts >= 0) {
            std::set<int> distinct;
            for (const auto& p : f.per) distinct.insert(p.cand);
            for (const auto& a : f.all) distinct.insert(a.cand);
            if (static_cast<int>(distinct.size()) >= max_cuts) continue;
        }
        for (int c = 0; c < static_cast<int>(ctx.cands.size()); ++c) {
            for (Face& child : split_face(ctx, f, c)) {
                InscribedPolygon P = extract_polygon(ctx, child);
                if (seen.emplace(P.key(), P).second) queue.push_back(child);
            }
        }
    }

    std::vector<InscribedPolygon> out;
    for (auto& [k, P] : seen) {
        if (filter == InscribedFilter::a_alternating && !P.a_alternating) continue;
        if (filter == InscribedFilter::b_alternating && !P.b_alternating) continue;
        out.push_back(std::move(P));
    }
    std::sort(out.begin(), out.end(), [](const InscribedPolygon& x, const InscribedPolygon& y) {
        if (x.whole_domain != y.whole_domain) return x.whole_domain;
        if (x.items.size() != y.items.size()) return x.items.size() < y.items.size();
        return x.name < y.name;
    });
    return out;
}

} // namespace hypgraph
