#pragma once

// Label groups acting on Vessiot constants.
//
// Each structure family carries a finite-dimensional parameter group that
// rescales or re-bases the defining object without leaving the family.  The
// induced action on the extracted constants is what this header implements:
//
//   co_frame           invertible p x p matrix, acting by change of basis
//   metric             nonzero scalar a, acting by c -> c / a
//   contact_density    nonzero scalar a, acting by c -> a^2 c
//   unimodular_contact nonzero pair (a, b), acting by
//                      (c', c'') -> ((a/b) c', (1/a) c'')
//
// The linearisation of each action at the identity label is exactly the
// first map of the deformation sequence (see sequence.hpp), which is why
// the two headers share conventions.

#include <string>
#include <utility>

#include "liejets/lie/structure_constants.hpp"
#include "liejets/matrix.hpp"
#include "liejets/rational.hpp"
#include "liejets/vessiot/constants.hpp"
#include "liejets/vessiot/object.hpp"

namespace liejets {

class LabelParams {
 public:
  static LabelParams coframe(QMatrix a) {
    if (a.rows() != a.cols() || a.rows() == 0)
      throw InputError("coframe label must be a square matrix");
    if (!a.inverse(Rational(1)))
      throw InputError("degenerate label parameters: matrix is singular");
    LabelParams p(StructureFamily::CoFrame);
    p.matrix_ = std::move(a);
    return p;
  }

  static LabelParams metric(Rational a) {
    if (a == 0) throw InputError("degenerate label parameters: scale is zero");
    LabelParams p(StructureFamily::Metric);
    p.scalars_ = {std::move(a)};
    return p;
  }

  static LabelParams contact_density(Rational a) {
    if (a == 0) throw InputError("degenerate label parameters: scale is zero");
    LabelParams p(StructureFamily::ContactDensity);
    p.scalars_ = {std::move(a)};
    return p;
  }

  static LabelParams unimodular_contact(Rational a, Rational b) {
    if (a == 0 || b == 0)
      throw InputError("degenerate label parameters: scale is zero");
    LabelParams p(StructureFamily::UnimodularContact);
    p.scalars_ = {std::move(a), std::move(b)};
    return p;
  }

  // Identity label.  `p` is the frame rank and only matters for co_frame.
  static LabelParams identity(StructureFamily f, unsigned p = 1) {
    switch (f) {
      case StructureFamily::CoFrame:
        return coframe(DenseMatrix<Rational>::identity(p, Rational(0), Rational(1)));
      case StructureFamily::Metric:
        return metric(Rational(1));
      case StructureFamily::ContactDensity:
        return contact_density(Rational(1));
      case StructureFamily::UnimodularContact:
        return unimodular_contact(Rational(1), Rational(1));
    }
    throw InputError("unknown structure family");
  }

  StructureFamily family() const { return family_; }

  const QMatrix& matrix() const {
    require(StructureFamily::CoFrame, "matrix");
    return matrix_;
  }

  const Rational& scalar() const {
    if (family_ != StructureFamily::Metric && family_ != StructureFamily::ContactDensity)
      throw InputError("scalar label is only defined for metric and contact_density");
    return scalars_[0];
  }

  const Rational& first() const {
    require(StructureFamily::UnimodularContact, "first");
    return scalars_[0];
  }

  const Rational& second() const {
    require(StructureFamily::UnimodularContact, "second");
    return scalars_[1];
  }

  friend bool operator==(const LabelParams& a, const LabelParams& b) {
    if (a.family_ != b.family_) return false;
    if (a.family_ == StructureFamily::CoFrame) return a.matrix_ == b.matrix_;
    return a.scalars_ == b.scalars_;
  }

 private:
  explicit LabelParams(StructureFamily f) : family_(f) {}

  void require(StructureFamily f, const char* what) const {
    if (family_ != f)
      throw InputError(std::string(what) + " is not defined for family " + family_name(family_));
  }

  StructureFamily family_;
  QMatrix matrix_ = QMatrix(0, 0, Rational(0));
  std::vector<Rational> scalars_;
};

// The label whose action equals acting by `h` first, then by `g`:
//   label_action(compose(g, h), c) == label_action(g, label_action(h, c)).
// For co_frame labels the underlying matrices therefore multiply in
// application order (inner label on the left), matching the change-of-basis
// composition rule; the scalar families are abelian and the order is moot.
inline LabelParams compose(const LabelParams& g, const LabelParams& h) {
  if (g.family() != h.family())
    throw InputError("cannot compose labels from different families");
  switch (g.family()) {
    case StructureFamily::CoFrame:
      return LabelParams::coframe(h.matrix() * g.matrix());
    case StructureFamily::Metric:
      return LabelParams::metric(g.scalar() * h.scalar());
    case StructureFamily::ContactDensity:
      return LabelParams::contact_density(g.scalar() * h.scalar());
    case StructureFamily::UnimodularContact:
      return LabelParams::unimodular_contact(g.first() * h.first(),
                                             g.second() * h.second());
  }
  throw InputError("unknown structure family");
}

inline VessiotConstants label_action(const LabelParams& g, const VessiotConstants& c) {
  if (g.family() != c.family())
    throw InputError("label family does not match constants family");
  switch (g.family()) {
    case StructureFamily::CoFrame:
      return VessiotConstants::coframe(c.tensor().change_basis(g.matrix()));
    case StructureFamily::Metric:
      return VessiotConstants::metric(c.scalar() / g.scalar());
    case StructureFamily::ContactDensity: {
      // A density rescale acts quadratically on the constant, so the labels
      // fixing a given nonzero c are exactly those with a^2 c = c.
      const Rational& a = g.scalar();
      return VessiotConstants::contact_density(a * a * c.scalar());
    }
    case StructureFamily::UnimodularContact: {
      const Rational& a = g.first();
      const Rational& b = g.second();
      return VessiotConstants::unimodular_contact(a / b * c.c_prime(),
                                                  c.c_second() / a);
    }
  }
  throw InputError("unknown structure family");
}

}  // namespace liejets
