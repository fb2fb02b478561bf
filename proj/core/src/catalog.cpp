#include "liecot/catalog.hpp"

#include "liecot/errors.hpp"

namespace liecot {

namespace {

std::vector<Rational> unit(std::size_t dim, std::size_t k, Rational c = Rational(1)) {
  std::vector<Rational> v(dim);
  v[k] = std::move(c);
  return v;
}

}  // namespace

LieAlgebra abelian(std::size_t n) {
  return LieAlgebra("abelian" + std::to_string(n), n, {});
}

LieAlgebra aff_r() {
  return LieAlgebra("aff_r", 2, {{0, 1, unit(2, 1)}});
}

LieAlgebra sl2() {
  return LieAlgebra("sl2", 3,
                    {{0, 1, unit(3, 1, Rational(-2))},
                     {0, 2, unit(3, 2, Rational(2))},
                     {1, 2, unit(3, 0, Rational(-1))}});
}

LieAlgebra so3() {
  return LieAlgebra("so3", 3,
                    {{0, 1, unit(3, 2, Rational(-1))},
                     {0, 2, unit(3, 1)},
                     {1, 2, unit(3, 0, Rational(-1))}});
}

LieAlgebra h3() {
  return LieAlgebra("h3", 3, {{0, 1, unit(3, 2)}});
}

LieAlgebra oscillator(const Rational& lambda) {
  if (lambda <= 0) throw InvalidParam("oscillator parameter must be positive");
  // Basis order (e_-1, e_0, e_1, ě_1).
  return LieAlgebra("oscillator", 4,
                    {{0, 2, unit(4, 3, lambda)},
                     {0, 3, unit(4, 2, -lambda)},
                     {2, 3, unit(4, 1)}},
                    {"e-1", "e0", "e1", "ě1"});
}

LieAlgebra catalog(const std::string& name, std::size_t n, const Rational& lambda) {
  if (name == "abelian") {
    if (n == 0) throw InvalidParam("abelian requires a positive dimension");
    return abelian(n);
  }
  if (name == "aff_r") return aff_r();
  if (name == "sl2") return sl2();
  if (name == "so3") return so3();
  if (name == "h3") return h3();
  if (name == "oscillator") return oscillator(lambda);
  throw UnknownName("unknown catalog algebra '" + name + "'");
}

}  // namespace liecot
