#pragma once

#include <stdexcept>
#include <string>

namespace hypgraph {

// Error codes, grouped by the subsystem that raises them.
enum class errc {
    // geometry kernel
    invalid_disk_point,
    coincident_endpoints,
    degenerate_axis,
    overlapping_horodisks,
    untruncated_end,
    kappa_out_of_range,
    // domains
    odd_vertex_count,
    non_alternating_labels,
    edge_leaves_end,
    truncation_too_small,
    vertex_budget_exceeded,
    odd_l,
    horodisk_escapes_end,
    bad_labels,
    non_consecutive_edges,
    t_out_of_range,
    // meshing / solving
    meshing_failed,
    newton_diverged,
    non_finite_boundary_data,
    unresolved_curve,
    // limit experiments
    ambiguous_fit,
    step_rejected,
    // parabolicity
    disconnected_mesh,
    grid_too_short,
    not_an_annulus,
    orientation_reversed,
    not_diffeomorphism,
    // cli / io
    missing_artifact,
    bad_input
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_disk_point: return "InvalidDiskPoint";
        case errc::coincident_endpoints: return "CoincidentEndpoints";
        case errc::degenerate_axis: return "DegenerateAxis";
        case errc::overlapping_horodisks: return "OverlappingHorodisks";
        case errc::untruncated_end: return "UntruncatedEnd";
        case errc::kappa_out_of_range: return "KappaOutOfRange";
        case errc::odd_vertex_count: return "OddVertexCount";
        case errc::non_alternating_labels: return "NonAlternatingLabels";
        case errc::edge_leaves_end: return "EdgeLeavesEnd";
        case errc::truncation_too_small: return "TruncationTooSmall";
        case errc::vertex_budget_exceeded: return "VertexBudgetExceeded";
        case errc::odd_l: return "OddL";
        case errc::horodisk_escapes_end: return "HorodiskEscapesEnd";
        case errc::bad_labels: return "BadLabels";
        case errc::non_consecutive_edges: return "NonConsecutiveEdges";
        case errc::t_out_of_range: return "TOutOfRange";
        case errc::meshing_failed: return "MeshingFailed";
        case errc::newton_diverged: return "NewtonDiverged";
        case errc::non_finite_boundary_data: return "NonFiniteBoundaryData";
        case errc::unresolved_curve: return "UnresolvedCurve";
        case errc::ambiguous_fit: return "AmbiguousFit";
        case errc::step_rejected: return "StepRejected";
        case errc::disconnected_mesh: return "DisconnectedMesh";
        case errc::grid_too_short: return "GridTooShort";
        case errc::not_an_annulus: return "NotAnAnnulus";
        case errc::orientation_reversed: return "OrientationReversed";
        case errc::not_diffeomorphism: return "NotDiffeomorphism";
        case errc::missing_artifact: return "MissingArtifact";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace hypgraph
