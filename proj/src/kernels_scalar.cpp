#include "fillcert/kernels.hpp"

namespace fillcert::kernels {

// Reference implementation. This is the semantics every other variant must
// reproduce bit for bit: q as a double, one multiply and one add per
// coordinate, then the squared norm. This translation unit is built without
// extended ISA flags so the compiler cannot contract the multiply-add pairs.
void row_norms_sq_scalar(double bx, double by, double sx, double sy,
                         double q0, double* out, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        const double q = q0 + static_cast<double>(j);
        const double x = bx + q * sx;
        const double y = by + q * sy;
        out[j] = x * x + y * y;
    }
}

}  // namespace fillcert::kernels
