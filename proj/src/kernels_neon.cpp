#include "fillcert/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace fillcert::kernels {

// 2-wide NEON variant. Same story as the AVX2 one: vmulq/vaddq instead of
// vfmaq so the rounding matches the scalar reference exactly.
void row_norms_sq_neon(double bx, double by, double sx, double sy,
                       double q0, double* out, std::size_t n) {
    const float64x2_t vbx = vdupq_n_f64(bx);
    const float64x2_t vby = vdupq_n_f64(by);
    const float64x2_t vsx = vdupq_n_f64(sx);
    const float64x2_t vsy = vdupq_n_f64(sy);
    const float64x2_t lane = {0.0, 1.0};

    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t q = vaddq_f64(vdupq_n_f64(q0 + static_cast<double>(j)), lane);
        const float64x2_t x = vaddq_f64(vbx, vmulq_f64(q, vsx));
        const float64x2_t y = vaddq_f64(vby, vmulq_f64(q, vsy));
        const float64x2_t nsq = vaddq_f64(vmulq_f64(x, x), vmulq_f64(y, y));
        vst1q_f64(out + j, nsq);
    }
    if (j < n) {
        row_norms_sq_scalar(bx, by, sx, sy, q0 + static_cast<double>(j), out + j, n - j);
    }
}

}  // namespace fillcert::kernels

#endif
