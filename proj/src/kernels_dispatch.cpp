#include "fillcert/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace fillcert::kernels {

namespace {

using RowFn = void (*)(double, double, double, double, double, double*, std::size_t);

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

RowFn table(Impl impl) {
    switch (impl) {
        case Impl::scalar:
            return &row_norms_sq_scalar;
        case Impl::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return &row_norms_sq_avx2;
#else
            return nullptr;
#endif
        case Impl::neon:
#if defined(__aarch64__)
            return &row_norms_sq_neon;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

Impl pick_default() {
    if (const char* env = std::getenv("FILLCERT_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::scalar;
        if (std::strcmp(env, "avx2") == 0 && available(Impl::avx2)) return Impl::avx2;
        if (std::strcmp(env, "neon") == 0 && available(Impl::neon)) return Impl::neon;
        // Unknown or unavailable request: fall through to auto selection.
    }
    if (available(Impl::avx2)) return Impl::avx2;
    if (available(Impl::neon)) return Impl::neon;
    return Impl::scalar;
}

struct State {
    Impl impl;
    RowFn fn;
    State() : impl(pick_default()), fn(table(impl)) {}
};

State& state() {
    static State s;
    return s;
}

}  // namespace

const char* name(Impl impl) {
    switch (impl) {
        case Impl::scalar: return "scalar";
        case Impl::avx2: return "avx2";
        case Impl::neon: return "neon";
    }
    return "?";
}

bool available(Impl impl) {
    if (table(impl) == nullptr) return false;
    if (impl == Impl::avx2) return cpu_has_avx2();
    return true;
}

Impl active() { return state().impl; }

void force(Impl impl) {
    if (!available(impl)) {
        throw std::invalid_argument(std::string("kernel variant not available: ") + name(impl));
    }
    state().impl = impl;
    state().fn = table(impl);
}

void row_norms_sq(double bx, double by, double sx, double sy,
                  double q0, double* out, std::size_t n) {
    state().fn(bx, by, sx, sy, q0, out, n);
}

}  // namespace fillcert::kernels
