#pragma once

// Shared independent oracles and random generators for the test suites.
// Everything here deliberately avoids the library's own code paths where an
// independent check is wanted.

#include <cmath>
#include <complex>
#include <random>

#include "hypgraph/hypgeom.hpp"

namespace oracles {

using hypgraph::Complex;

// cross-ratio form of the disk distance, independent of hyp_distance
inline double dist_crossratio(Complex p, Complex q) {
    double num = std::norm(p - q);
    double den = (1.0 - std::norm(p)) * (1.0 - std::norm(q));
    return std::acosh(1.0 + 2.0 * num / den);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

inline hypgraph::DiskPoint random_point(double rmax = 0.9) {
    double r = std::sqrt(uniform(0.0, rmax * rmax));
    double a = uniform(0.0, 2.0 * M_PI);
    return hypgraph::DiskPoint(std::polar(r, a));
}

// random orientation-preserving isometry: rotation * translation * rotation
inline hypgraph::Isometry random_isometry() {
    using namespace hypgraph;
    double phi = uniform(0.0, 2.0 * M_PI);
    double ell = uniform(-2.0, 2.0);
    double psi = uniform(0.0, 2.0 * M_PI);
    Isometry rot1, rot2, tra;
    rot1.a = std::polar(1.0, 0.5 * phi);
    rot2.a = std::polar(1.0, 0.5 * psi);
    tra.a = Complex(std::cosh(0.5 * ell), 0.0);
    tra.b = Complex(std::sinh(0.5 * ell), 0.0);
    return rot1 * tra * rot2;
}

} // namespace oracles
