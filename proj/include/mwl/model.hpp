#pragma once

#include "mwl/field.hpp"

namespace mwl {

/// The right-hand side u_t = u_x + 14*u*u_x + dx Lambda^{-2} R(u), split into
/// its advective and nonlocal parts.
struct RhsBreakdown {
    SpectralField transport;
    SpectralField nonlocal;
    SpectralField total;
};

/// R(u) = 7*u_x^2 - 3*u^4 + 2*u^3 - 10*u^2 - 2*u, dealiased.
SpectralField r_of_u(const SpectralField& u);

RhsBreakdown rhs_nonlocal(const SpectralField& u);

/// H^0 norm of (1 - dx^2)(rhs_nonlocal total) plus the local-form terms
/// u_x + 6uu_x - 6u^2u_x + 12u^3u_x + u_xxx + 14uu_xxx + 28u_x u_xx.
/// Pure roundoff when u is band-limited to <= N/6 modes; throws otherwise.
double local_form_residual(const SpectralField& u);

/// Conserved H^1 functional.
double h1_energy(const SpectralField& u);

/// Test hook: flips the sign of R(u) so consistency audits can prove they
/// would catch a transcription error. Never set outside tests.
void set_r_sign_flip_for_test(bool flip);

} // namespace mwl
