#pragma once

#include <cstddef>

// Batch evaluation of squared translation lengths along one lattice row.
//
// Slope enumeration walks axis-aligned boxes of integer coordinates. For a
// fixed first coordinate the candidate vectors are base + q * step with q
// running over consecutive integers, so the hot loop is a fused
// multiply-free "x = bx + q*sx; y = by + q*sy; out = x*x + y*y" per lane.
// That loop is what gets vectorized here. Every variant keeps the exact
// scalar operation order (multiply then add, no FMA contraction), so all
// implementations produce bit-identical doubles and can be swapped freely
// at runtime.

namespace fillcert::kernels {

enum class Impl {
    scalar,
    avx2,
    neon,
};

const char* name(Impl impl);

// Impls compiled into this binary and usable on the current CPU.
bool available(Impl impl);

// Currently selected implementation. The first call picks the widest
// available variant unless the FILLCERT_KERNEL environment variable
// (scalar|avx2|neon) asks for a specific one.
Impl active();

// Pin the implementation, mainly for equivalence tests.
// Throws std::invalid_argument if the variant is not available here.
void force(Impl impl);

// out[j] = |(bx, by) + (q0 + j) * (sx, sy)|^2 for j in [0, n).
// q0 is an integer passed as double; callers guarantee |q0 + n| < 2^53.
void row_norms_sq(double bx, double by, double sx, double sy,
                  double q0, double* out, std::size_t n);

// Direct entry points, exposed so tests can diff variants pairwise.
void row_norms_sq_scalar(double bx, double by, double sx, double sy,
                         double q0, double* out, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
void row_norms_sq_avx2(double bx, double by, double sx, double sy,
                       double q0, double* out, std::size_t n);
#endif
#if defined(__aarch64__)
void row_norms_sq_neon(double bx, double by, double sx, double sy,
                       double q0, double* out, std::size_t n);
#endif

}  // namespace fillcert::kernels
