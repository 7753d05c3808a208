#pragma once

// Two worked degenerations.
//
// Ordinary double points in dimension d: symbols Q_k stand for a smooth
// k-dimensional quadric with trivial action and Qp_d for the double cover of
// P^d branched along a smooth quadric, with mu_2 acting by the involution.
//
// The Cynk-van Straten family: the snc-model over k[[u]] of W has strata
// E0o, Et1o (a mu_2-torsor) and E01; after the base change u = t^2 they
// restrict to F0o, F1o and F01.

#include "motzeta/groth_ring.hpp"
#include "motzeta/realization.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/zeta_series.hpp"

#include <string>
#include <vector>

namespace motzeta::examples {

std::string quadric_symbol(std::int64_t k);        // "Q_k"
std::string double_cover_symbol(std::int64_t d);   // "Qp_d"

/// Class of a smooth k-dimensional quadric: 1 + L + ... + L^k, plus L^{k/2} for even k.
GrothElement quadric_class(std::int64_t k);
/// Q_d -> class, Q_{d-1} -> class.
std::vector<RewriteRule> quadric_rewrites(std::int64_t d);

/// Blow-up of the origin of t + x_0^2 + ... + x_d^2 = 0, restricted to the
/// exceptional locus: E0 (N=1, nu=0), E1 (N=2, nu=d-1).
SncModel odp_local_model(std::int64_t d);
ZetaFunction odp_local_zeta(std::int64_t d);

/// Qp_d restricts to Q_d under even base change.
RestrictionMap odp_restriction(std::int64_t d, std::int64_t m);
/// The local zeta function after base change of degree m, simplified.
ZetaFunction odp_zm(std::int64_t d, std::int64_t m);
/// The closed forms for Z_m, written out term by term.
ZetaFunction odp_zm_reference(std::int64_t d, std::int64_t m);

struct OdpConfig {
    std::int64_t d = 1;
    std::vector<std::int64_t> moduli;
    GrothElement smooth_class = GrothElement::symbol("S");
};

void validate(const OdpConfig& cfg);
/// smooth_class * T/(1-T) + sum of Z_{m_i}.
ZetaFunction odp_global_zeta(const OdpConfig& cfg);

/// EP of the quadric symbols of dimension d and d-1 (Qp_d like Q_d), and a
/// positive value for S.
EpAssignment odp_generic_ep(std::int64_t d);

struct CvsData {
    SncModel w_model;
    ZetaFunction z_w;
    RestrictionMap restriction;  // at m = 2
    ZetaFunction z_x;            // multisect(z_w, 2, restriction)
};

CvsData cvs_models();
/// The snc-model of X after normalized base change: F0 (1, 0), F1 (1, 1).
SncModel cvs_x_model();
/// The displayed closed forms.
ZetaFunction cvs_zw_reference();
ZetaFunction cvs_zx_reference();

/// An assignment satisfying the parity constraints: EP(F1o) has an odd-degree
/// term, EP(F01) is even, and EP(F0o) + EP(F01) is nonzero.
EpAssignment cvs_generic_ep();
/// The same values on the W-model symbols.
EpAssignment cvs_w_generic_ep();

}  // namespace motzeta::examples
