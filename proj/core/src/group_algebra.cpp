#include "modcartan/groupalg/group_algebra.hpp"

#include <algorithm>

#include "modcartan/error.hpp"

namespace modcartan::alg {

GroupAlgebra::GroupAlgebra(grp::GroupPtr group, ChainRing coeff)
    : group_(std::move(group)), coeff_(coeff) {
  if (!group_) throw InvalidArgument("group algebra needs a group");
}

AlgElement GroupAlgebra::zero() const { return AlgElement(*this, ChainVector(dim(), 0)); }

AlgElement GroupAlgebra::one() const { return basis(0); }

AlgElement GroupAlgebra::basis(grp::Elem g) const {
  ChainVector v(dim(), 0);
  v.at(g) = 1;
  return AlgElement(*this, std::move(v));
}

AlgElement GroupAlgebra::group_sum() const { return AlgElement(*this, ChainVector(dim(), 1)); }

AlgElement GroupAlgebra::element(ChainVector coeffs) const {
  for (auto& c : coeffs) c = coeff_.from_code(c);
  return AlgElement(*this, std::move(coeffs));
}

AlgElement::AlgElement(GroupAlgebra parent, ChainVector coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != parent_.dim())
    throw DimensionMismatch("coefficient vector length differs from the group order");
}

bool AlgElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

void AlgElement::check_parent(const AlgElement& o) const {
  if (!(parent_ == o.parent_)) throw ParentMismatch("elements of different group algebras");
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
  check_parent(o);
  const auto& g = *parent_.group();
  const auto& r = parent_.coeff();
  ChainVector out(coeffs_.size(), 0);
  for (grp::Elem a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (grp::Elem b = 0; b < coeffs_.size(); ++b) {
      if (o.coeffs_[b] == 0) continue;
      const auto ab = g.mul(a, b);
      out[ab] = r.add(out[ab], r.mul(coeffs_[a], o.coeffs_[b]));
    }
  }
  return AlgElement(parent_, std::move(out));
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  check_parent(o);
  ChainVector out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = parent_.coeff().add(coeffs_[i], o.coeffs_[i]);
  return AlgElement(parent_, std::move(out));
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  check_parent(o);
  ChainVector out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = parent_.coeff().sub(coeffs_[i], o.coeffs_[i]);
  return AlgElement(parent_, std::move(out));
}

AlgElement AlgElement::scaled(ChainRing::Elem c) const {
  ChainVector out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = parent_.coeff().mul(coeffs_[i], c);
  return AlgElement(parent_, std::move(out));
}

std::string AlgElement::to_string() const {
  std::string s;
  for (grp::Elem g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(coeffs_[g]) + "*" + parent_.group()->name(g);
  }
  return s.empty() ? "0" : s;
}

}  // namespace modcartan::alg
