#pragma once

#include <stdexcept>
#include <string>

namespace flipcover {

enum class errc {
    loop_edge,
    vertex_out_of_range,
    overlapping_sides,
    empty_set,
    size_limit_exceeded,
    bad_params,
    asymmetric_relation,
    retry_budget_exhausted,
    degree_zero_vertex,
    branching_bound_violated,
    parameter_too_small,
    not_popular,
    not_automorphism,
    color_undetermined,
    format_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

} // namespace flipcover
