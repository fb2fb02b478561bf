#pragma once

#include <string>

#include "liecot/lie_algebra.hpp"

namespace liecot {

// Built-in algebras, each in the basis ordering used throughout the library:
//   abelian(n)           all brackets zero
//   aff_r                [e1,e2] = e2
//   sl2                  [e1,e2] = -2e2, [e1,e3] = 2e3, [e2,e3] = -e1
//   so3                  [e1,e2] = -e3, [e1,e3] = e2, [e2,e3] = -e1
//   h3                   [e1,e2] = e3
//   oscillator(lambda)   basis (e-1, e0, e1, ě1):
//                        [e-1,e1] = λě1, [e-1,ě1] = -λe1, [e1,ě1] = e0
LieAlgebra abelian(std::size_t n);
LieAlgebra aff_r();
LieAlgebra sl2();
LieAlgebra so3();
LieAlgebra h3();
LieAlgebra oscillator(const Rational& lambda);

// name in {abelian, aff_r, sl2, so3, h3, oscillator}. abelian takes n,
// oscillator takes lambda > 0. Throws UnknownName / InvalidParam.
LieAlgebra catalog(const std::string& name, std::size_t n = 0,
                   const Rational& lambda = Rational(1));

}  // namespace liecot
