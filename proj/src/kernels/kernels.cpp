#include "flipcover/kernels.hpp"

namespace flipcover::kern {

namespace {

const ops_table* forced = nullptr;

const ops_table* detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return &avx2_ops;
#endif
    return &scalar_ops;
}

} // namespace

const ops_table& active() {
    if (forced) return *forced;
    static const ops_table* auto_detected = detect();
    return *auto_detected;
}

void force(const ops_table* t) { forced = t; }

} // namespace flipcover::kern
