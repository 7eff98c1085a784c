#include "entangler/kernels.hpp"

#include <cmath>
#include <cstdlib>

namespace entangler::kernels {

void closed_form_grid_scalar(const double* tau, std::size_t n, double* c1,
                             double* c2_im, double* c3, double* c4_im) {
  constexpr double third = 1.0 / 3.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ct = std::cos(tau[i]);
    const double st = std::sin(tau[i]);
    // Double-angle forms keep the arithmetic identical across variants.
    const double c2t = 2.0 * ct * ct - 1.0;
    const double s2t = 2.0 * st * ct;
    c1[i] = third * (2.0 * ct + c2t);
    c2_im[i] = -third * (st + s2t);
    c3[i] = third * (c2t - ct);
    c4_im[i] = third * (2.0 * st - s2t);
  }
}

namespace {

ClosedFormGridFn pick() {
  if (const char* env = std::getenv("ENTANGLER_FORCE_SCALAR");
      env && env[0] == '1')
    return &closed_form_grid_scalar;
#if defined(ENTANGLER_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2"))
    return &closed_form_grid_avx2;
#endif
  return &closed_form_grid_scalar;
}

}  // namespace

ClosedFormGridFn select_closed_form_grid() {
  static const ClosedFormGridFn fn = pick();
  return fn;
}

std::string_view selected_kernel_name() {
#if defined(ENTANGLER_HAVE_AVX2)
  if (select_closed_form_grid() == &closed_form_grid_avx2) return "avx2";
#endif
  return "scalar";
}

void closed_form_grid(const double* tau, std::size_t n, double* c1,
                      double* c2_im, double* c3, double* c4_im) {
  select_closed_form_grid()(tau, n, c1, c2_im, c3, c4_im);
}

}  // namespace entangler::kernels
