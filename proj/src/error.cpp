#include "flipcover/error.hpp"

namespace flipcover {

const char* errc_name(errc c) {
    switch (c) {
    case errc::loop_edge: return "LoopEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::overlapping_sides: return "OverlappingSides";
    case errc::empty_set: return "EmptySet";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::bad_params: return "BadParams";
    case errc::asymmetric_relation: return "AsymmetricR";
    case errc::retry_budget_exhausted: return "RetryBudgetExhausted";
    case errc::degree_zero_vertex: return "DegreeZeroVertex";
    case errc::branching_bound_violated: return "BranchingBoundViolated";
    case errc::parameter_too_small: return "ParameterTooSmall";
    case errc::not_popular: return "NotPopular";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::color_undetermined: return "ColorUndetermined";
    case errc::format_error: return "FormatError";
    }
    return "UnknownError";
}

} // namespace flipcover
