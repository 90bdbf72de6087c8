#pragma once

// Enumeration of inscribed polygonal domains: faces of arrangements of
// pairwise disjoint candidate geodesics (diagonals between domain vertices,
// plus the core geodesic on the annulus model).

#include <string>
#include <vector>

#include "hypgraph/domain.hpp"

namespace hypgraph {

struct CutCandidate {
    enum class Kind { chord, core } kind = Kind::chord;
    int v0 = -1, v1 = -1;  // vertex ids (chord)
    int w1 = 0;            // winding of the v1 lift; v0 is taken at winding 0
    Geodesic geo;          // the (v0,0)-(v1,w1) lift; the core axis for Kind::core
    std::string name;
};

std::vector<CutCandidate> cut_candidates(const IdealDomain& d);

enum class InscribedFilter { all, a_alternating, b_alternating };

struct PolygonItem {
    bool is_edge = true;
    int id = 0;    // edge index or candidate index
    int mult = 1;  // 2 when the polygon lies on both sides
};

struct InscribedPolygon {
    std::vector<PolygonItem> items;  // sorted (edges first, then cuts)
    std::vector<int> vertices;       // quotient vertex ids, sorted unique
    int euler = 1;
    bool whole_domain = false;
    bool a_alternating = false;  // every corner joins exactly one a-edge
    bool b_alternating = false;
    std::string name;

    struct ItemLift {
        bool is_edge = true;
        bool core = false;
        int id = 0;
        int mult = 1;
        int v0 = -1, k0 = 0, v1 = -1, k1 = 0;
        Geodesic geo;
    };
    std::vector<ItemLift> lifts;

    std::string key() const;
    int cut_family_size() const;  // number of distinct interior geodesics
};

// All inscribed polygonal domains reachable by cutting along disjoint
// candidate subsets; includes the domain itself. Vertex budget: N <= 12.
// Families are limited to two cut-ends per vertex (strict alternation never
// admits more). max_cuts, when nonnegative, caps the cut-family size: margins
// of larger faces decompose into sums over faces with at most 2 cuts, so the
// solvability check enumerates with max_cuts = 2.
std::vector<InscribedPolygon> enumerate_inscribed(const IdealDomain& d,
                                                  InscribedFilter filter = InscribedFilter::all,
                                                  int max_cuts = -1);

// Lemma-style bound on the size of a disjoint proper-geodesic family.
double finite_family_bound(const IdealDomain& d);

} // namespace hypgraph
