#include "hypgraph/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace hypgraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double lambda_at(Complex z) { return 2.0 / (1.0 - std::norm(z)); }

double orient(Complex a, Complex b, Complex c) {
    return (b.real() - a.real()) * (c.imag() - a.imag()) -
           (b.imag() - a.imag()) * (c.real() - a.real());
}

// ---------------------------------------------------------------- Delaunay

struct DelTri {
    int v[3];
    int nbr[3];  // neighbor across edge (v[i], v[i+1]); -1 none
    bool alive = true;
};

bool incircle(Complex a, Complex b, Complex c, Complex p) {
    long double ax = a.real() - p.real(), ay = a.imag() - p.imag();
    long double bx = b.real() - p.real(), by = b.imag() - p.imag();
    long double cx = c.real() - p.real(), cy = c.imag() - p.imag();
    long double det = (ax * ax + ay * ay) * (bx * cy - by * cx) -
                      (bx * bx + by * by) * (ax * cy - ay * cx) +
                      (cx * cx + cy * cy) * (ax * by - ay * bx);
    return det > 0.0L;
}

class Delaunay {
  public:
    explicit Delaunay(const std::vector<Complex>& pts) : pts_(pts) {
        pts_.push_back(Complex(-8.0, -8.0));
        pts_.push_back(Complex(8.0, -8.0));
        pts_.push_back(Complex(0.0, 12.0));
        int n = static_cast<int>(pts_.size());
        DelTri t;
        t.v[0] = n - 3;
        t.v[1] = n - 2;
        t.v[2] = n - 1;
        t.nbr[0] = t.nbr[1] = t.nbr[2] = -1;
        tris_.push_back(t);
        for (int i = 0; i < n - 3; ++i) insert(i);
    }

    std::vector<std::array<int, 3>> result() const {
        int n = static_cast<int>(pts_.size());
        std::vector<std::array<int, 3>> out;
        for (const DelTri& t : tris_) {
            if (!t.alive) continue;
            if (t.v[0] >= n - 3 || t.v[1] >= n - 3 || t.v[2] >= n - 3) continue;
            out.push_back({t.v[0], t.v[1], t.v[2]});
        }
        return out;
    }

  private:
    std::vector<Complex> pts_;
    std::vector<DelTri> tris_;
    int last_alive_ = 0;

    int locate(Complex p) const {
        int cur = last_alive_;
        if (cur >= static_cast<int>(tris_.size()) || !tris_[cur].alive) cur = -1;
        if (cur >= 0) {
            for (int step = 0; step < 4096; ++step) {
                const DelTri& t = tris_[cur];
                int nxt = -1;
                for (int i = 0; i < 3; ++i) {
                    if (orient(pts_[t.v[i]], pts_[t.v[(i + 1) % 3]], p) < 0.0) {
                        nxt = t.nbr[i];
                        break;
                    }
                }
                if (nxt == -1) return cur;
                cur = nxt;
                if (cur < 0) break;
            }
        }
        for (int i = static_cast<int>(tris_.size()) - 1; i >= 0; --i) {
            const DelTri& t = tris_[i];
            if (!t.alive) continue;
            bool in = true;
            for (int k = 0; k < 3; ++k)
                in = in && orient(pts_[t.v[k]], pts_[t.v[(k + 1) % 3]], p) >= 0.0;
            if (in) return i;
        }
        fail(errc::meshing_failed, "point location failed");
    }

    void insert(int vi) {
        Complex p = pts_[vi];
        int seed = locate(p);
        std::vector<int> cavity{seed};
        tris_[seed].alive = false;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int ti = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                int nb = tris_[ti].nbr[i];
                if (nb < 0 || !tris_[nb].alive) continue;
                const DelTri& t = tris_[nb];
                if (incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p)) {
                    tris_[nb].alive = false;
                    cavity.push_back(nb);
                    stack.push_back(nb);
                }
            }
        }
        struct Wall {
            int a, b, outer;
        };
        std::vector<Wall> walls;
        for (int ti : cavity) {
            for (int i = 0; i < 3; ++i) {
                int nb = tris_[ti].nbr[i];
                if (nb >= 0 && !tris_[nb].alive) continue;
                walls.push_back({tris_[ti].v[i], tris_[ti].v[(i + 1) % 3], nb});
            }
        }
        std::map<std::pair<int, int>, int> open_edge;
        std::vector<int> fresh;
        for (const Wall& w : walls) {
            DelTri t;
            t.v[0] = w.a;
            t.v[1] = w.b;
            t.v[2] = vi;
            t.nbr[0] = w.outer;
            t.nbr[1] = t.nbr[2] = -1;
            int ni = static_cast<int>(tris_.size());
            tris_.push_back(t);
            fresh.push_back(ni);
            if (w.outer >= 0) {
                DelTri& o = tris_[w.outer];
                for (int i = 0; i < 3; ++i)
                    if (o.v[i] == w.b && o.v[(i + 1) % 3] == w.a) o.nbr[i] = ni;
            }
            open_edge[{w.b, vi}] = ni;
            open_edge[{vi, w.a}] = ni;
        }
        for (int ni : fresh) {
            DelTri& t = tris_[ni];
            auto it = open_edge.find({t.v[2], t.v[1]});
            if (it != open_edge.end()) t.nbr[1] = it->second;
            it = open_edge.find({t.v[0], t.v[2]});
            if (it != open_edge.end()) t.nbr[2] = it->second;
        }
        if (!fresh.empty()) last_alive_ = fresh.back();
    }
};

} // namespace

std::vector<std::array<int, 3>> delaunay(const std::vector<Complex>& pts) {
    require(pts.size() >= 3, errc::meshing_failed, "need at least 3 points");
    return Delaunay(pts).result();
}

void Mesh::build_caches() {
    tri_area.clear();
    lambda.clear();
    for (size_t t = 0; t < tris.size(); ++t) {
        Complex a = verts[tris[t][0]], b = verts[tris[t][1]], c = verts[tris[t][2]];
        tri_area.push_back(0.5 * orient(a, b, c));
        lambda.push_back(lambda_at((a + b + c) / 3.0));
    }
}

double Mesh::marker_length(BoundaryKind kind, int id) const {
    double L = 0.0;
    for (const BoundaryEdge& e : bedges) {
        if (e.kind != kind || e.id != id) continue;
        Complex mid = 0.5 * (verts[e.v0] + verts[e.v1]);
        L += lambda_at(mid) * std::abs(verts[e.v1] - verts[e.v0]);
    }
    return L;
}

std::vector<int> Mesh::triangles_adjacent_to_boundary() const {
    std::map<std::pair<int, int>, int> edge_tri;
    for (int t = 0; t < nt(); ++t)
        for (int i = 0; i < 3; ++i)
            edge_tri[{tris[t][i], tris[t][(i + 1) % 3]}] = t;
    std::vector<int> out;
    for (const BoundaryEdge& e : bedges) {
        auto it = edge_tri.find({e.v0, e.v1});
        if (it == edge_tri.end()) it = edge_tri.find({e.v1, e.v0});
        if (it != edge_tri.end()) out.push_back(it->second);
    }
    return out;
}

namespace {

// ------------------------------------------------------ region description

struct ArcSample {
    Complex z;
    BoundaryKind kind;
    int id;
};

struct SidedGeo {
    Geodesic geo;
    double sign;  // inside: sign * side(z) > 0
};

struct RegionGeom {
    std::vector<SidedGeo> walls;     // lifted domain edges
    std::vector<Horodisk> holes;     // lifted horodisks near the window
    std::vector<std::vector<ArcSample>> loops;
    bool periodic = false;
    SidedGeo cut0, cut1;
    std::vector<Complex> cut_samples0, cut_samples1;

    bool inside(Complex z) const {
        double n2 = std::norm(z);
        if (n2 >= 1.0 - 1e-11) return false;
        for (const SidedGeo& w : walls)
            if (w.geo.side(z) * w.sign <= 0.0) return false;
        double b = std::log1p(-n2);
        for (const Horodisk& h : holes) {
            // busemann(center, z) <= -t means inside the horodisk
            if (std::log(std::norm(h.center.unit() - z)) - b <= -h.t) return false;
        }
        if (periodic) {
            if (cut0.geo.side(z) * cut0.sign < 0.0) return false;
            if (cut1.geo.side(z) * cut1.sign < 0.0) return false;
        }
        return true;
    }
};

std::vector<Complex> sample_horocycle(const Horodisk& h, Complex z0, Complex z1, double step) {
    Complex c = h.euclidean_center();
    double r = h.euclidean_radius();
    double a0 = std::arg(z0 - c), a1 = std::arg(z1 - c);
    double ac = std::arg(h.center.unit() - c);
    auto norm_fwd = [&](double from, double to) {
        double s = std::fmod(to - from, 2.0 * kPi);
        if (s < 0) s += 2.0 * kPi;
        return s;
    };
    double ccw = norm_fwd(a0, a1);
    bool ccw_hits_center = norm_fwd(a0, ac) < ccw;
    double span = ccw_hits_center ? ccw - 2.0 * kPi : ccw;

    int n = 8;
    for (int refine = 0; refine < 24; ++refine) {
        double maxstep = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex za = c + std::polar(r, a0 + span * i / n);
            Complex zb = c + std::polar(r, a0 + span * (i + 1) / n);
            maxstep = std::max(maxstep, lambda_at(0.5 * (za + zb)) * std::abs(zb - za));
        }
        if (maxstep <= step) break;
        n = static_cast<int>(std::ceil(n * maxstep / step)) + 1;
    }
    std::vector<Complex> out;
    for (int i = 1; i < n; ++i) out.push_back(c + std::polar(r, a0 + span * i / n));
    return out;
}

struct EdgeTrim {
    double s0 = 0.0, s1 = 0.0;
};

EdgeTrim trim_edge(const IdealDomain& d, int eid, int winding, const TruncationVector& tv,
                   const Geodesic& geo) {
    const DomainEdge& e = d.edges[eid];
    std::vector<Horodisk> hs{d.lifted_horodisk(e.v0, winding, tv.t[e.v0]),
                             d.lifted_horodisk(e.v1, winding + e.wrap, tv.t[e.v1])};
    auto cuts = horodisk_intervals(geo, hs);
    require(cuts.size() == 2, errc::truncation_too_small, "edge not trimmed at both ends");
    require(cuts.front().s1 <= cuts.back().s0 + 1e-12, errc::truncation_too_small,
            "edge fully swallowed by horodisks");
    return {cuts.front().s1, cuts.back().s0};
}

std::vector<Complex> sample_geodesic(const Geodesic& g, double s0, double s1, double step) {
    int n = std::max(1, static_cast<int>(std::ceil(std::fabs(s1 - s0) / step)));
    std::vector<Complex> out;
    for (int i = 1; i < n; ++i) out.push_back(g.at(s0 + (s1 - s0) * i / n).z);
    return out;
}

RegionGeom plane_region(const IdealDomain& d, const TruncationVector& tv, double h) {
    RegionGeom R;
    Complex ref = d.interior_point().z;
    for (const DomainEdge& e : d.edges)
        R.walls.push_back({e.geo, e.geo.side(ref) >= 0 ? 1.0 : -1.0});
    for (int v = 0; v < d.N(); ++v) R.holes.push_back(d.lifted_horodisk(v, 0, tv.t[v]));

    std::vector<ArcSample> loop;
    int n = static_cast<int>(d.edges.size());
    std::vector<EdgeTrim> trims(n);
    for (int e = 0; e < n; ++e) trims[e] = trim_edge(d, e, 0, tv, d.edges[e].geo);

    for (int e = 0; e < n; ++e) {
        const DomainEdge& ed = d.edges[e];
        loop.push_back({ed.geo.at(trims[e].s0).z, BoundaryKind::domain_edge, e});
        for (Complex z : sample_geodesic(ed.geo, trims[e].s0, trims[e].s1, h))
            loop.push_back({z, BoundaryKind::domain_edge, e});
        Complex exitp = ed.geo.at(trims[e].s1).z;
        loop.push_back({exitp, BoundaryKind::domain_edge, e});
        int next = (e + 1) % n;
        Complex enter_next = d.edges[next].geo.at(trims[next].s0).z;
        Horodisk hv = R.holes[ed.v1];
        for (Complex z : sample_horocycle(hv, exitp, enter_next, h))
            loop.push_back({z, BoundaryKind::horocycle, ed.v1});
    }
    R.loops.push_back(std::move(loop));
    return R;
}

RegionGeom annulus_region(const IdealDomain& d, const TruncationVector& tv, double h) {
    RegionGeom R;
    R.periodic = true;
    const int WV = 3;
    Complex ref(0.0, 0.0);  // origin lies on the core
    for (const DomainEdge& e : d.edges) {
        for (int k = -WV; k <= WV; ++k) {
            Geodesic g = k == 0 ? e.geo : transformed(d.deck(k), e.geo);
            R.walls.push_back({g, g.side(ref) >= 0 ? 1.0 : -1.0});
        }
    }
    for (int v = 0; v < d.N(); ++v)
        for (int k = -WV; k <= WV; ++k) R.holes.push_back(d.lifted_horodisk(v, k, tv.t[v]));

    const Geodesic& axis = d.model.axis();
    double ell = d.model.translation_length;

    auto cut_at = [&](double x) {
        double xp = std::tanh(0.5 * x);
        if (std::fabs(xp) < 1e-12)
            return geodesic_between(IdealPoint(kPi / 2), IdealPoint(-kPi / 2));
        double c = (1.0 + xp * xp) / (2.0 * xp);
        double phi = std::acos(1.0 / c);
        if (xp < 0) phi = kPi - phi;
        return geodesic_between(IdealPoint(phi), IdealPoint(-phi));
    };
    double best_x = 0.0, best_clear = -1e300;
    for (int i = 0; i < 96; ++i) {
        double x = ell * (i + 0.5) / 96.0;
        Geodesic cand = cut_at(x);
        double clear = 1e300;
        for (const Horodisk& hh : R.holes) {
            double mb = min_busemann_on_geodesic(hh.center, cand);
            clear = std::min(clear, mb + hh.t);
        }
        if (clear > best_clear) {
            best_clear = clear;
            best_x = x;
        }
    }
    require(best_clear > 0.02, errc::meshing_failed, "no clear cut position for the strip");
    Geodesic cut0 = cut_at(best_x);
    Geodesic cut1 = transformed(d.deck(1), cut0);
    DiskPoint probe = axis.at(best_x + 0.5 * ell);
    R.cut0 = {cut0, cut0.side(probe.z) >= 0 ? 1.0 : -1.0};
    R.cut1 = {cut1, cut1.side(probe.z) >= 0 ? 1.0 : -1.0};

    auto chain = [&](int end) {
        std::vector<ArcSample> open;
        int n = static_cast<int>(d.ends[end].size());
        int base = 0;
        for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
            if (d.edges[e].end == end && d.edges[e].index == 0) base = e;

        int cross_edge = -1, cross_w = 0;
        double cross_s = 0.0;
        for (int j = 0; j < n && cross_edge < 0; ++j) {
            for (int w = -1; w <= 1 && cross_edge < 0; ++w) {
                const DomainEdge& ed = d.edges[base + j];
                Geodesic g = w == 0 ? ed.geo : transformed(d.deck(w), ed.geo);
                EdgeTrim tr = trim_edge(d, base + j, w, tv, g);
                double slo = tr.s0, shi = tr.s1;
                double flo = cut0.side(g.at(slo).z), fhi = cut0.side(g.at(shi).z);
                if (flo * fhi >= 0.0) continue;
                for (int it = 0; it < 100; ++it) {
                    double smid = 0.5 * (slo + shi);
                    double fm = cut0.side(g.at(smid).z);
                    if ((fm > 0) == (flo > 0)) {
                        slo = smid;
                        flo = fm;
                    } else {
                        shi = smid;
                    }
                }
                cross_edge = base + j;
                cross_w = w;
                cross_s = 0.5 * (slo + shi);
            }
        }
        require(cross_edge >= 0, errc::meshing_failed, "cut does not cross the end chain");

        int start_index = d.edges[cross_edge].index;
        for (int step = 0; step <= n; ++step) {
            int j = (start_index + step) % n;
            int w = cross_w + (start_index + step) / n;
            int eid = base + j;
            const DomainEdge& ed = d.edges[eid];
            Geodesic g = w == 0 ? ed.geo : transformed(d.deck(w), ed.geo);
            EdgeTrim tr = trim_edge(d, eid, w, tv, g);
            bool first = step == 0, last = step == n;
            double s0 = first ? cross_s : tr.s0;
            double s1 = last ? cross_s : tr.s1;
            open.push_back({g.at(s0).z, BoundaryKind::domain_edge, eid});
            for (Complex z : sample_geodesic(g, s0, s1, h))
                open.push_back({z, BoundaryKind::domain_edge, eid});
            open.push_back({g.at(s1).z, BoundaryKind::domain_edge, eid});
            if (last) break;
            int nj = (j + 1) % n;
            int nw = w + (j + 1) / n;
            int nid = base + nj;
            Geodesic gn = nw == 0 ? d.edges[nid].geo : transformed(d.deck(nw), d.edges[nid].geo);
            EdgeTrim trn = trim_edge(d, nid, nw, tv, gn);
            Complex entern = gn.at(trn.s0).z;
            Horodisk hv = d.lifted_horodisk(ed.v1, w + ed.wrap, tv.t[ed.v1]);
            for (Complex z : sample_horocycle(hv, g.at(s1).z, entern, h))
                open.push_back({z, BoundaryKind::horocycle, ed.v1});
        }
        return open;
    };

    R.loops.push_back(chain(0));
    R.loops.push_back(chain(1));

    auto param_of = [&](const Geodesic& g, Complex z) {
        Complex w = g.frame.inverse().apply(z);
        return 2.0 * std::atanh(std::clamp(w.real(), -0.999999999999, 0.999999999999));
    };
    Complex top0 = R.loops[0].front().z;
    Complex bot0 = R.loops[1].front().z;
    R.cut_samples0 = sample_geodesic(cut0, param_of(cut0, top0), param_of(cut0, bot0), h);
    Isometry T = d.deck(1);
    for (Complex z : R.cut_samples0) R.cut_samples1.push_back(T(DiskPoint(z)).z);
    return R;
}

} // namespace

Mesh mesh_region(const IdealDomain& d, const TruncationVector& tv, double h) {
    require(h > 0.005 && h < 2.0, errc::bad_input, "mesh size out of range");
    RegionGeom R = d.annulus() ? annulus_region(d, tv, h) : plane_region(d, tv, h);

    Mesh m;
    std::vector<ArcSample> boundary;
    for (const auto& loop : R.loops)
        for (const ArcSample& s : loop) boundary.push_back(s);

    std::vector<Complex> pts;
    for (const ArcSample& s : boundary) pts.push_back(s.z);

    int cut_base = -1;
    if (R.periodic) {
        cut_base = static_cast<int>(pts.size());
        for (Complex z : R.cut_samples0) pts.push_back(z);
        for (Complex z : R.cut_samples1) pts.push_back(z);
    }
    int n_fixed = static_cast<int>(pts.size());

    const double grid_cell = 0.004;
    std::unordered_map<long long, std::vector<int>> grid;
    auto key_at = [&](double x, double y) {
        long long ix = static_cast<long long>(std::floor(x / grid_cell));
        long long iy = static_cast<long long>(std::floor(y / grid_cell));
        return ix * 1000003LL + iy;
    };
    for (int i = 0; i < n_fixed; ++i) grid[key_at(pts[i].real(), pts[i].imag())].push_back(i);
    auto too_close = [&](Complex z, double rad) {
        int span = static_cast<int>(std::ceil(rad / grid_cell)) + 1;
        long long ix = static_cast<long long>(std::floor(z.real() / grid_cell));
        long long iy = static_cast<long long>(std::floor(z.imag() / grid_cell));
        for (long long dx = -span; dx <= span; ++dx) {
            for (long long dy = -span; dy <= span; ++dy) {
                auto it = grid.find((ix + dx) * 1000003LL + (iy + dy));
                if (it == grid.end()) continue;
                for (int i : it->second)
                    if (std::abs(pts[i] - z) < rad) return true;
            }
        }
        return false;
    };

    struct Cell {
        double x, y, s;
    };
    std::vector<Cell> stack{{-1.0, -1.0, 2.0}};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        Complex ctr(c.x + 0.5 * c.s, c.y + 0.5 * c.s);
        if (std::norm(ctr) > 1.0 && std::norm(ctr) - 1.4 * c.s * c.s > 1.0) continue;
        double local = 0.5 * h * std::max(1e-6, 1.0 - std::norm(ctr));
        if (c.s > 0.9 * local) {
            if (c.s < 1e-5) continue;
            double half = 0.5 * c.s;
            stack.push_back({c.x, c.y, half});
            stack.push_back({c.x + half, c.y, half});
            stack.push_back({c.x, c.y + half, half});
            stack.push_back({c.x + half, c.y + half, half});
            continue;
        }
        if (!R.inside(ctr)) continue;
        if (too_close(ctr, 0.62 * local)) continue;
        grid[key_at(ctr.real(), ctr.imag())].push_back(static_cast<int>(pts.size()));
        pts.push_back(ctr);
    }

    auto tris = delaunay(pts);

    std::vector<std::array<int, 3>> kept;
    for (auto& t : tris) {
        Complex b = (pts[t[0]] + pts[t[1]] + pts[t[2]]) / 3.0;
        if (!R.inside(b)) continue;
        if (orient(pts[t[0]], pts[t[1]], pts[t[2]]) <= 0.0) std::swap(t[1], t[2]);
        kept.push_back(t);
    }
    require(!kept.empty(), errc::meshing_failed, "empty mesh");

    std::vector<int> remap(pts.size(), -1);
    for (const auto& t : kept)
        for (int v : t) remap[v] = 0;
    int nv = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        if (remap[i] == 0) remap[i] = nv++;
    m.verts.resize(nv);
    for (size_t i = 0; i < pts.size(); ++i)
        if (remap[i] >= 0) m.verts[remap[i]] = pts[i];
    for (auto t : kept) m.tris.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});

    std::map<std::pair<int, int>, int> mesh_edges;
    for (int t = 0; t < m.nt(); ++t)
        for (int i = 0; i < 3; ++i)
            mesh_edges[{m.tris[t][i], m.tris[t][(i + 1) % 3]}] = t;
    auto has_edge = [&](int a, int b) {
        return mesh_edges.count({a, b}) || mesh_edges.count({b, a});
    };

    int off = 0;
    for (const auto& loop : R.loops) {
        int L = static_cast<int>(loop.size());
        bool closed = !R.periodic;
        int last = closed ? L : L - 1;
        for (int i = 0; i < last; ++i) {
            int ra = remap[off + i], rb = remap[off + (i + 1) % L];
            require(ra >= 0 && rb >= 0, errc::meshing_failed, "boundary vertex dropped");
            require(has_edge(ra, rb), errc::meshing_failed,
                    "boundary not recovered by the triangulation");
            const ArcSample& sa = loop[i];
            const ArcSample& sb = loop[(i + 1) % L];
            BoundaryKind kind = sa.kind;
            int id = sa.id;
            if (sa.kind == BoundaryKind::domain_edge && sb.kind == BoundaryKind::horocycle) {
                kind = sb.kind;
                id = sb.id;
            }
            m.bedges.push_back({ra, rb, kind, id});
        }
        off += L;
    }

    if (R.periodic) {
        int nc = static_cast<int>(R.cut_samples0.size());
        int l0 = static_cast<int>(R.loops[0].size());
        int l1 = static_cast<int>(R.loops[1].size());
        // cut polylines run from the upper chain crossing to the lower one;
        // include the chain endpoints
        std::vector<int> side0{remap[0]};
        for (int i = 0; i < nc; ++i) side0.push_back(remap[cut_base + i]);
        side0.push_back(remap[l0]);
        std::vector<int> side1{remap[l0 - 1]};
        for (int i = 0; i < nc; ++i) side1.push_back(remap[cut_base + nc + i]);
        side1.push_back(remap[l0 + l1 - 1]);
        for (size_t i = 0; i + 1 < side0.size(); ++i) {
            require(side0[i] >= 0 && side0[i + 1] >= 0 && has_edge(side0[i], side0[i + 1]),
                    errc::meshing_failed, "cut polyline not recovered");
            m.bedges.push_back({side0[i], side0[i + 1], BoundaryKind::cut, 0});
        }
        for (size_t i = 0; i + 1 < side1.size(); ++i) {
            require(side1[i] >= 0 && side1[i + 1] >= 0 && has_edge(side1[i], side1[i + 1]),
                    errc::meshing_failed, "cut polyline not recovered");
            m.bedges.push_back({side1[i], side1[i + 1], BoundaryKind::cut, 1});
        }
        Isometry T = d.deck(1);
        for (size_t i = 0; i < side0.size(); ++i) {
            int a = side0[i], b = side1[i];
            require(a >= 0 && b >= 0, errc::meshing_failed, "cut vertex dropped");
            require(std::abs(T(DiskPoint(m.verts[a])).z - m.verts[b]) < 1e-10,
                    errc::meshing_failed, "periodic pair mismatch");
            m.periodic.push_back({a, b});
        }
    }

    m.build_caches();
    for (int t = 0; t < m.nt(); ++t)
        require(m.tri_area[t] > 0.0, errc::meshing_failed, "inverted triangle");
    return m;
}

} // namespace hypgraph
