#pragma once

// Shared core of the Blaschke formula: given derivations D1 = d/df1 and
// D2 = d/df2 acting on rational functions, returns
//   2 D1 D2 log( D2 f3 / D1 f3 ).

#include "ppk/error.hpp"
#include "ppk/ratexpr.hpp"

namespace ppk::detail {

template <class D1, class D2>
RatExpr blaschke_coefficient(const D1& d1, const D2& d2, const RatExpr& f3) {
  RatExpr a = d1(f3);
  RatExpr b = d2(f3);
  if (a.is_zero() || b.is_zero()) throw MathError("third web function is constant along a family");
  RatExpr ratio = b / a;
  RatExpr log_d2 = d2(ratio) / ratio;
  return d1(log_d2).scaled(2);
}

}  // namespace ppk::detail
