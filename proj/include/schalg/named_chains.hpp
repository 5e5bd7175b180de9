#pragma once

#include "schalg/action.hpp"
#include "schalg/spaces.hpp"

namespace schalg {

enum class ChainName {
  Alpha,      // y_1^...^y_2n                      in Lambda^{2n}(I)
  Beta,       // sum_i y_i^y_{n+i}                 in Lambda^2(I)
  Zeta,       // sum_i y_1^..\hat y_i..^..\hat y_{n+i}..  in Lambda^{2n-2}(I)
  Rho,        // sum_{i<j} X_ij(x)y_i^y_{n+j} - X_ij(x)y_j^y_{n+i}
  RhoBar,     // same with all slots wedged, in Lambda^3(sch)
  Gamma,      // sum_{i<j} X_ij(x)(omit y_i,y_{n+j}) - X_ij(x)(omit y_j,y_{n+i})
  AlphaTilde, // antisymmetrization of alpha, in I^{(x)2n}
  ZetaTilde,  // antisymmetrization of zeta, in I^{(x)2n-2}
  GammaTilde, // gamma with the wedge part antisymmetrized, in sch^{(x)2n-1}
};

ChainName parse_chain_name(const std::string& s);
std::string chain_name_str(ChainName c);

// The algebra must contain the needed components (so/sl2/ideal). Tilde
// variants obey the antisymmetrization cap.
Chain named_chain(std::shared_ptr<const LieAlgebra> alg, ChainName name);

// Convenience: builds sch_n and returns the chain over it.
Chain named_chain(ChainName name, int n);

}  // namespace schalg
