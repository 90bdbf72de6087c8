#include "hypgraph/hypgeom.hpp"

#include <algorithm>
#include <cmath>

namespace hypgraph {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSMax = 80.0; // arclength cap for root brackets

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    if (a >= 2.0 * kPi) a = 0.0;
    return a;
}

double angle_diff(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, 2.0 * kPi - d);
}

} // namespace

DiskPoint::DiskPoint(Complex zz) : z(zz) {
    require(std::isfinite(zz.real()) && std::isfinite(zz.imag()) &&
                std::abs(zz) < 1.0 - kBoundaryGuard,
            errc::invalid_disk_point, "|z| must be < 1 - 1e-12");
}

IdealPoint::IdealPoint(double angle) {
    require(std::isfinite(angle), errc::bad_input, "ideal angle must be finite");
    theta = wrap_angle(angle);
}

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol) {
    return angle_diff(a.theta, b.theta) <= tol;
}

Isometry Isometry::point_frame(const DiskPoint& p, Complex dir) {
    double n = std::abs(dir);
    require(n > 0.0, errc::bad_input, "frame direction must be nonzero");
    Complex tau = dir / n;
    Complex s = std::sqrt(tau);
    double inv = 1.0 / std::sqrt(1.0 - p.abs2());
    Isometry g;
    g.a = s * inv;
    g.b = p.z * std::conj(s) * inv;
    return g;
}

IdealPoint Isometry::operator()(const IdealPoint& xi) const {
    Complex u = xi.unit();
    Complex w = (a * u + b) / (std::conj(b) * u + std::conj(a));
    return IdealPoint(std::arg(w));
}

Isometry& Isometry::normalize() {
    double d = std::norm(a) - std::norm(b);
    require(d > 0.0, errc::bad_input, "isometry matrix degenerated");
    double s = 1.0 / std::sqrt(d);
    a *= s;
    b *= s;
    return *this;
}

Isometry operator*(const Isometry& f, const Isometry& g) {
    Isometry h;
    h.a = f.a * g.a + f.b * std::conj(g.b);
    h.b = f.a * g.b + f.b * std::conj(g.a);
    h.normalize();
    return h;
}

double hyp_distance(const DiskPoint& p, const DiskPoint& q) {
    Complex num = p.z - q.z;
    Complex den = 1.0 - std::conj(p.z) * q.z;
    double t = std::abs(num) / std::abs(den);
    if (t < 0.5) return 2.0 * std::atanh(t);
    // near-boundary form: 1 - t^2 computed from the defect product
    double one_minus_t2 =
        (1.0 - p.abs2()) * (1.0 - q.abs2()) / std::norm(den);
    return 2.0 * std::log1p(t) - std::log(one_minus_t2);
}

double busemann(const IdealPoint& xi, const DiskPoint& z) {
    return std::log(std::norm(xi.unit() - z.z)) - std::log1p(-z.abs2());
}

Geodesic geodesic_between(const IdealPoint& a, const IdealPoint& b) {
    require(!same_ideal(a, b), errc::coincident_endpoints,
            "geodesic endpoints must be distinct ideal points");
    Geodesic g;
    g.a = a;
    g.b = b;
    Complex ua = a.unit(), ub = b.unit();
    if (std::fabs(kPi - angle_diff(a.theta, b.theta)) < 1e-9) {
        g.is_diameter = true;
        g.frame = Isometry::point_frame(DiskPoint(), ub);
        return g;
    }
    // center along the bisector direction: |ua + ub| = 2 cos(dtheta/2), and
    // orthogonality to the unit circle gives |c| = 1 / cos(dtheta/2)
    Complex s = ua + ub;
    g.center = 2.0 * s / std::norm(s);
    g.radius = std::abs(ua - ub) / std::abs(s);
    double ac = std::abs(g.center);
    Complex m = g.center * (ac - g.radius) / ac; // closest point to origin
    Complex tau = Complex(0, 1) * (m - g.center);
    tau /= std::abs(tau);
    if ((tau.real() * (ub - m).real() + tau.imag() * (ub - m).imag()) < 0.0) tau = -tau;
    g.frame = Isometry::point_frame(DiskPoint(m), tau);
    return g;
}

Geodesic transformed(const Isometry& g, const Geodesic& geo) {
    return geodesic_between(g(geo.a), g(geo.b));
}

DiskPoint Geodesic::at(double s) const {
    return DiskPoint(frame.apply(std::tanh(0.5 * s)));
}

Complex Geodesic::tangent(double s) const {
    // derivative of frame at x = tanh(s/2) has direction 1/conj(b x + conj(a))^2
    Complex x(std::tanh(0.5 * s), 0.0);
    Complex d = std::conj(frame.b) * x + std::conj(frame.a);
    Complex dir = 1.0 / (d * d);
    return dir / std::abs(dir);
}

double Geodesic::side(Complex z) const {
    if (is_diameter) {
        Complex u = b.unit();
        return u.real() * z.imag() - u.imag() * z.real();
    }
    return std::norm(z - center) - radius * radius;
}

double point_to_geodesic(const DiskPoint& p, const Geodesic& g) {
    Complex w = g.frame.inverse().apply(p.z);
    return 0.5 * hyp_distance(DiskPoint(w), DiskPoint(std::conj(w)));
}

double signed_point_to_geodesic(const DiskPoint& p, const Geodesic& g) {
    double d = point_to_geodesic(p, g);
    return g.side(p.z) >= 0.0 ? d : -d;
}

double min_busemann_on_geodesic(const IdealPoint& xi, const Geodesic& g) {
    if (same_ideal(xi, g.a) || same_ideal(xi, g.b))
        return -std::numeric_limits<double>::infinity();
    Complex u = g.frame.inverse().apply(xi.unit());
    double psi = std::arg(u);
    return std::log(std::fabs(std::sin(psi)));
}

Isometry make_translation(const Geodesic& axis, double length) {
    require(length != 0.0, errc::degenerate_axis, "translation length must be nonzero");
    Isometry m;
    m.a = Complex(std::cosh(0.5 * length), 0.0);
    m.b = Complex(std::sinh(0.5 * length), 0.0);
    return axis.frame * m * axis.frame.inverse();
}

Isometry make_parabolic(const IdealPoint& fixed, double step) {
    Isometry m;
    m.a = Complex(1.0, 0.5 * step);
    m.b = Complex(0.0, -0.5 * step) * fixed.unit();
    return m;
}

double Horodisk::euclidean_radius() const { return 1.0 / (1.0 + std::exp(t)); }

Complex Horodisk::euclidean_center() const {
    return center.unit() * (1.0 - euclidean_radius());
}

double horodisk_gap(const Horodisk& h1, const Horodisk& h2) {
    if (same_ideal(h1.center, h2.center))
        return -std::numeric_limits<double>::infinity();
    double chord = 2.0 * std::fabs(std::sin(0.5 * (h1.center.theta - h2.center.theta)));
    return h1.t + h2.t + 2.0 * std::log(0.5 * chord);
}

double tangency_param(const IdealPoint& a, const IdealPoint& b) {
    require(!same_ideal(a, b), errc::coincident_endpoints,
            "tangency parameter needs distinct ideal points");
    double chord = 2.0 * std::fabs(std::sin(0.5 * (a.theta - b.theta)));
    return -std::log(0.5 * chord);
}

double transport_shift(const Isometry& g, const IdealPoint& xi) {
    // the base horodisk passes through the origin; follow that point
    DiskPoint w = g(DiskPoint());
    return -busemann(g(xi), w);
}

namespace {

// busemann(xi, g.at(s)) restricted to the geodesic, in pulled-back coordinates
double busemann_on(double psi, double s) {
    double x = std::tanh(0.5 * s);
    return std::log(1.0 - 2.0 * x * std::cos(psi) + x * x) - std::log1p(-x * x);
}

double bisect_busemann(double psi, double target, double slo, double shi) {
    // f(slo) and f(shi) bracket target
    double flo = busemann_on(psi, slo) - target;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (slo + shi);
        double fm = busemann_on(psi, mid) - target;
        if ((fm > 0.0) == (flo > 0.0)) {
            slo = mid;
            flo = fm;
        } else {
            shi = mid;
        }
        if (std::fabs(shi - slo) < 1e-13 * (1.0 + std::fabs(slo))) break;
    }
    return 0.5 * (slo + shi);
}

} // namespace

std::vector<ArcWindow> horodisk_intervals(const Geodesic& g,
                                          std::span<const Horodisk> horodisks) {
    const double inf = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < horodisks.size(); ++i)
        for (size_t j = i + 1; j < horodisks.size(); ++j)
            require(horodisk_gap(horodisks[i], horodisks[j]) >= -kDistanceTol,
                    errc::overlapping_horodisks,
                    "horodisks must be pairwise disjoint or tangent");

    std::vector<ArcWindow> cut;
    for (const Horodisk& h : horodisks) {
        if (same_ideal(h.center, g.a)) {
            double c = busemann(g.a, g.at(0.0)); // b = s + c along g
            cut.push_back({-inf, -h.t - c});
        } else if (same_ideal(h.center, g.b)) {
            double c = busemann(g.b, g.at(0.0)); // b = -s + c along g
            cut.push_back({h.t + c, inf});
        } else {
            Complex u = g.frame.inverse().apply(h.center.unit());
            double psi = std::arg(u);
            double minb = std::log(std::fabs(std::sin(psi)));
            if (-h.t <= minb + 1e-14) continue; // does not reach the geodesic
            double xstar = std::cos(psi) / (1.0 + std::fabs(std::sin(psi)));
            double sstar = 2.0 * std::atanh(xstar);
            double lo = bisect_busemann(psi, -h.t, -kSMax, sstar);
            double hi = bisect_busemann(psi, -h.t, kSMax, sstar);
            cut.push_back({std::min(lo, hi), std::max(lo, hi)});
        }
    }
    std::sort(cut.begin(), cut.end(),
              [](const ArcWindow& x, const ArcWindow& y) { return x.s0 < y.s0; });
    std::vector<ArcWindow> merged;
    for (const ArcWindow& w : cut) {
        if (!merged.empty() && w.s0 <= merged.back().s1) {
            merged.back().s1 = std::max(merged.back().s1, w.s1);
        } else {
            merged.push_back(w);
        }
    }
    return merged;
}

double truncated_length(const Geodesic& g, std::optional<ArcWindow> window,
                        std::span<const Horodisk> horodisks, bool require_finite) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<ArcWindow> cut = horodisk_intervals(g, horodisks);

    double w0 = window ? window->s0 : -inf;
    double w1 = window ? window->s1 : inf;
    require(!(window && window->s0 > window->s1), errc::bad_input,
            "arclength window reversed");

    if (!window) {
        bool lo_covered = !cut.empty() && cut.front().s0 == -inf;
        bool hi_covered = !cut.empty() && cut.back().s1 == inf;
        if (!lo_covered || !hi_covered) {
            require(!require_finite, errc::untruncated_end,
                    "full geodesic has an uncovered ideal end");
            return inf;
        }
    }

    if (!window) {
        // both ends covered: length = gap between the two boundary rays,
        // minus interior intrusions
        double lead = cut.front().s1;
        double tail = cut.back().s0;
        double mid_removed = 0.0;
        for (size_t i = 1; i + 1 < cut.size(); ++i)
            mid_removed += cut[i].s1 - cut[i].s0;
        return std::max(0.0, tail - lead - mid_removed);
    }
    double removed = 0.0;
    for (const ArcWindow& c : cut) {
        double lo = std::max(c.s0, w0), hi = std::min(c.s1, w1);
        if (hi > lo) removed += hi - lo;
    }
    return std::max(0.0, (w1 - w0) - removed);
}

DiskPoint EquidistantCurve::at(double s) const {
    DiskPoint base = axis.at(s);
    Complex nu = Complex(0, 1) * axis.tangent(s);
    double d = signed_distance;
    if (d == 0.0) return base;
    Isometry f = Isometry::point_frame(base, nu);
    DiskPoint plus = DiskPoint(f.apply(std::tanh(0.5 * std::fabs(d))));
    bool plus_is_positive = axis.side(plus.z) > 0.0;
    bool want_positive = d > 0.0;
    if (plus_is_positive == want_positive) return plus;
    return DiskPoint(f.apply(-std::tanh(0.5 * std::fabs(d))));
}

QuarterSpace quarter_space() {
    QuarterSpace q;
    double y = std::tan(kPi / 8.0);
    q.apex = DiskPoint(Complex(0.0, y));
    // complete geodesics through the apex ending at +1 and -1
    Isometry move; // apex -> 0
    double inv = 1.0 / std::sqrt(1.0 - y * y);
    move.a = Complex(inv, 0.0);
    move.b = Complex(0.0, -y * inv);
    auto other_end = [&](double theta) {
        Complex u = move.apply(std::polar(1.0, theta));
        Complex v = move.inverse().apply(-u / std::abs(u));
        return IdealPoint(std::arg(v));
    };
    q.ray1 = geodesic_between(other_end(0.0), IdealPoint(0.0));
    q.ray2 = geodesic_between(other_end(kPi), IdealPoint(kPi));
    return q;
}

double point_to_ray(const DiskPoint& p, const DiskPoint& from, const IdealPoint& end) {
    // move `from` to the origin: z -> (z - from)/(1 - conj(from) z)
    Complex fz = from.z;
    double inv = 1.0 / std::sqrt(1.0 - std::norm(fz));
    Isometry move;
    move.a = Complex(inv, 0.0);
    move.b = -fz * inv;
    Complex u = move.apply(end.unit());
    u /= std::abs(u);
    Complex w = move.apply(p.z) / u; // rotate the ray onto the positive real axis
    // foot of w on the real diameter
    double a = w.real();
    double x_f = 0.0;
    if (std::fabs(a) > 1e-15) {
        double m = 1.0 + std::norm(w);
        double disc = m * m - 4.0 * a * a;
        x_f = (m - std::sqrt(std::max(0.0, disc))) / (2.0 * a);
    }
    x_f = std::max(0.0, x_f); // clamp to the ray (from = 0 toward +1)
    return hyp_distance(DiskPoint(w), DiskPoint(Complex(x_f, 0.0)));
}

namespace {

// geodesic orthogonal to the imaginary axis, crossing it at signed height y
Geodesic axis_at_height(double y) {
    if (std::fabs(y) < 1e-12) return geodesic_between(IdealPoint(kPi), IdealPoint(0.0));
    double c = (1.0 + y * y) / (2.0 * y);
    double phi = std::asin(1.0 / c);
    return geodesic_between(IdealPoint(kPi - phi), IdealPoint(phi));
}

// signed clearance of the curvature-kappa foliation curve c_t from the first
// quarter-space ray, positive while the curve is still strictly on the
// quarter-space side (the sector between the rays containing the lower ideal
// arc). The foliation curves cross the imaginary axis at height t and curve
// away from the rays: their axes sit at height t - delta.
double quarter_gap(double t, double delta, const QuarterSpace& q, double ref_sign) {
    Geodesic axis = axis_at_height(std::tanh(0.5 * (t - delta)));
    EquidistantCurve curve{axis, delta};
    double want = std::tanh(0.5 * t);
    if (std::fabs(curve.at(0.0).z.imag() - want) > 1e-9) curve.signed_distance = -delta;
    require(std::fabs(curve.at(0.0).z.imag() - want) < 1e-9, errc::bad_input,
            "foliation curve misplaced");

    auto val = [&](double s) {
        DiskPoint z = curve.at(s);
        double d = point_to_geodesic(z, q.ray1);
        return (q.ray1.side(z.z) * ref_sign >= 0.0 ? 1.0 : -1.0) * d;
    };

    double span = 2.0 * (std::fabs(t) + delta) + 8.0;
    int nscan = 320;
    double best = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    for (int i = 0; i <= nscan; ++i) {
        double s = -span + 2.0 * span * i / nscan;
        double v = val(s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    // golden-section refinement around the best sample
    double lo = best_s - 2.0 * span / nscan, hi = best_s + 2.0 * span / nscan;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = val(x1), f2 = val(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = val(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = val(x2);
        }
    }
    return std::min(best, std::min(f1, f2));
}

} // namespace

double dk_constant(double kappa) {
    require(kappa > 0.0 && kappa < 1.0, errc::kappa_out_of_range,
            "kappa must lie in (0,1)");
    QuarterSpace q = quarter_space();
    // quarter-space side marker: the sector between the rays contains -0.9i
    double ref_sign = q.ray1.side(Complex(0.0, -0.9));
    double delta = std::atanh(kappa);

    // clearance is positive for t near 0 and decreases as the curve rises
    double lo = 1e-9;
    require(quarter_gap(lo, delta, q, ref_sign) > 0.0, errc::kappa_out_of_range,
            "degenerate tangency bracket");
    double hi = 0.25;
    while (quarter_gap(hi, delta, q, ref_sign) > 0.0) {
        hi *= 2.0;
        require(hi < 64.0, errc::kappa_out_of_range, "tangency bracket not found");
    }
    for (int it = 0; it < 120; ++it) {
        double mid = 0.5 * (lo + hi);
        if (quarter_gap(mid, delta, q, ref_sign) > 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-10) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace hypgraph
