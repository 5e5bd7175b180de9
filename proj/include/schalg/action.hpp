#pragma once

#include "schalg/spaces.hpp"

namespace schalg {

// Right derivation action of an ambient basis element X on a chain:
//   [a_1^...^a_k, X]      = sum_i a_1^...^[a_i,X]^...^a_k
//   [g(x)a_1^...^a_k, X]  = [g,X](x)a_1^... + sum_i g(x)...^[a_i,X]^...
//   tensor slots likewise, slot by slot.
// Requires [v, X] to stay inside the space's factor (resp. coeff) span.
Chain act(const Chain& w, int ambient_x);

// Linear extension over an Element of the ambient algebra.
Chain act(const Chain& w, const Element& x);

inline constexpr int kAntisymmetrizeCap = 8;

// Wedge(V,k) -> Tensor(V,k):
//   v_1^...^v_k -> (1/k!) sum_sigma sgn(sigma) v_sigma(1)(x)...(x)v_sigma(k)
// k is capped (k! terms per wedge monomial).
Chain antisymmetrize(const Chain& w, int cap = kAntisymmetrizeCap);

// Canonical projection pi: V^{(x)k} -> Lambda^k(V), tensor monomial to
// sorted wedge with sign.
Chain wedge_projection(const Chain& t);

}  // namespace schalg
