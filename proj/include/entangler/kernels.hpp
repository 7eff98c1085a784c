#pragma once

#include <cstddef>
#include <string_view>

namespace entangler::kernels {

// Batched evaluation of the closed-form coefficients over a tau grid.
// The six coefficients reduce to four independent real series (c5 = c3
// and c6 = c2, and the two-excitation components are purely imaginary):
//   c1     =  2/3 cos(tau) + 1/3 cos(2 tau)
//   c2_im  = -1/3 (sin(tau) + sin(2 tau))     (c2 = i * c2_im)
//   c3     = -1/3 cos(tau) + 1/3 cos(2 tau)
//   c4_im  =  2/3 sin(tau) - 1/3 sin(2 tau)   (c4 = i * c4_im)
using ClosedFormGridFn = void (*)(const double* tau, std::size_t n, double* c1,
                                  double* c2_im, double* c3, double* c4_im);

/// Portable reference kernel.
void closed_form_grid_scalar(const double* tau, std::size_t n, double* c1,
                             double* c2_im, double* c3, double* c4_im);

#if defined(ENTANGLER_HAVE_AVX2)
/// AVX2 variant, four grid points per iteration (libmvec sin/cos).
void closed_form_grid_avx2(const double* tau, std::size_t n, double* c1,
                           double* c2_im, double* c3, double* c4_im);
#endif

/// Best kernel for this machine. Honors ENTANGLER_FORCE_SCALAR=1 in the
/// environment; the choice is made once and cached.
ClosedFormGridFn select_closed_form_grid();

/// Name of the selected variant ("scalar" or "avx2"), for diagnostics.
std::string_view selected_kernel_name();

/// Dispatched entry point.
void closed_form_grid(const double* tau, std::size_t n, double* c1,
                      double* c2_im, double* c3, double* c4_im);

}  // namespace entangler::kernels
