#include "modcartan/modrep/hom.hpp"

#include "modcartan/error.hpp"

namespace modcartan::rep {

std::vector<FpMatrix> hom_space(const RepModule& m, const RepModule& n) {
  if (!(m.field() == n.field()) || !(*m.group() == *n.group()))
    throw ParentMismatch("hom space between modules over different algebras");
  const auto& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
  std::vector<FpMatrix> basis;
  if (unknowns == 0) return basis;
  const std::size_t ngens = m.generator_actions().size();
  // Unknown X(a, b) sits at a * dm + b; one equation per generator and entry.
  FpMatrix sys(f, ngens * unknowns, unknowns);
  for (std::size_t s = 0; s < ngens; ++s) {
    const FpMatrix& am = m.generator_action(s);
    const FpMatrix& bn = n.generator_action(s);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = s * unknowns + a * dm + c;
        for (std::size_t b = 0; b < dm; ++b)  // (X A)(a, c)
          sys.at(row, a * dm + b) = f.add(sys(row, a * dm + b), am(b, c));
        for (std::size_t e = 0; e < dn; ++e)  // -(B X)(a, c)
          sys.at(row, e * dm + c) = f.sub(sys(row, e * dm + c), bn(a, e));
      }
  }
  const FpMatrix null = la::nullspace(sys);
  for (std::size_t r = 0; r < null.rows(); ++r) {
    FpMatrix x(f, dn, dm);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b) x.at(a, b) = null(r, a * dm + b);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t hom_dim(const RepModule& m, const RepModule& n) { return hom_space(m, n).size(); }

}  // namespace modcartan::rep
