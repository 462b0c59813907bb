#pragma once

#include <vector>

#include "modcartan/modrep/rep_module.hpp"

namespace modcartan::rep {

/// Basis of Hom(m, n): all X (dim n x dim m) with X rho_m(g) = rho_n(g) X for
/// every generator g. Throws ParentMismatch for different groups or fields.
std::vector<FpMatrix> hom_space(const RepModule& m, const RepModule& n);
std::size_t hom_dim(const RepModule& m, const RepModule& n);

}  // namespace modcartan::rep
