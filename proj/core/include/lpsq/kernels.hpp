#pragma once

#include <string>

#include "lpsq/trig_poly.hpp"

namespace lpsq {

// Fejer kernel of order n: \hat K_n(j) = 1 - |j|/(n+1) for |j| <= n.
TrigPoly fejer(int n);

// de la Vallee Poussin kernel with exact trapezoid coefficients:
// \hat V(j) = 1 for |j| <= 2^N and 2 - |j|/2^N for 2^N < |j| <= 2^{N+1}.
TrigPoly vallee_poussin(int N);

// f_N = e^{i 2 pi 2^{N+1} x} V_{2^N}(x), tensored d-fold for d > 1.
TrigPoly pichorides_fn(int N, int d);

// Unit coefficients on [2^N, 2^{N+1} - 1].
TrigPoly dirichlet_block(int N);

// Places \hat F on the diagonal: \hat f(n,...,n) = \hat F(n).
TrigPoly diag_embed(const TrigPoly& F, int d);

enum class FamilyName { fejer, vallee_poussin, pichorides, zygmund_tensor, diagonal };

struct FamilySpec {
  FamilyName name = FamilyName::pichorides;
  int N = 1;
  int d = 1;
};

FamilyName family_from_string(const std::string& s);
std::string family_to_string(FamilyName name);

TrigPoly make_family(const FamilySpec& spec);

// Largest |frequency| carried by the family member along any axis; closed
// form so callers can pick N caps without materializing huge members.
int64_t family_max_abs_freq(FamilyName name, int N);

}  // namespace lpsq
