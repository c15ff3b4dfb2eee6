#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liejets/lie/structure_constants.hpp"
#include "liejets/vessiot/curvature.hpp"
#include "liejets/vessiot/object.hpp"

namespace liejets {

// Raised when solving the structure equations of an object produces values
// that are not literally constant: the object carries the family's data but
// does not define a transitive structure.
struct NotAStructureError : MathError {
  explicit NotAStructureError(const std::string& what) : MathError(what) {}
};

// The constants classifying a transitive structure within its family.
//   CoFrame            a full tensor c^tau_{rho sigma} (antisymmetric pair)
//   Metric             one scalar (the sectional curvature constant)
//   ContactDensity     one scalar
//   UnimodularContact  a pair (c', c'')
class VessiotConstants {
 public:
  static VessiotConstants coframe(StructureConstants c) {
    VessiotConstants v(StructureFamily::CoFrame);
    v.tensor_ = std::move(c);
    return v;
  }
  static VessiotConstants metric(Rational c) {
    VessiotConstants v(StructureFamily::Metric);
    v.scalars_ = {std::move(c)};
    return v;
  }
  static VessiotConstants contact_density(Rational c) {
    VessiotConstants v(StructureFamily::ContactDensity);
    v.scalars_ = {std::move(c)};
    return v;
  }
  static VessiotConstants unimodular_contact(Rational c_prime, Rational c_second) {
    VessiotConstants v(StructureFamily::UnimodularContact);
    v.scalars_ = {std::move(c_prime), std::move(c_second)};
    return v;
  }

  StructureFamily family() const { return family_; }

  const StructureConstants& tensor() const {
    if (!tensor_) throw InputError("constants of this family are not a tensor");
    return *tensor_;
  }

  // Metric / ContactDensity value.
  const Rational& scalar() const {
    if (scalars_.size() != 1) throw InputError("constants of this family are not one scalar");
    return scalars_[0];
  }

  const Rational& c_prime() const { return pair_part(0); }
  const Rational& c_second() const { return pair_part(1); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family_);
    if (family_ == StructureFamily::CoFrame) {
      j["tensor"] = tensor_->to_json();
    } else {
      nlohmann::json vals = nlohmann::json::array();
      for (const Rational& s : scalars_) vals.push_back(to_string(s));
      j["constants"] = vals;
    }
    return j;
  }

  static VessiotConstants from_json(const nlohmann::json& j) {
    StructureFamily fam = parse_family(j.at("family").get<std::string>());
    if (fam == StructureFamily::CoFrame)
      return coframe(StructureConstants::from_json(j.at("tensor")));
    const auto& vals = j.at("constants");
    std::vector<Rational> parsed;
    for (const auto& v : vals) parsed.push_back(parse_rational(v.get<std::string>()));
    switch (fam) {
      case StructureFamily::Metric:
        if (parsed.size() != 1) throw InputError("metric constants hold one value");
        return metric(parsed[0]);
      case StructureFamily::ContactDensity:
        if (parsed.size() != 1) throw InputError("contact density constants hold one value");
        return contact_density(parsed[0]);
      case StructureFamily::UnimodularContact:
        if (parsed.size() != 2) throw InputError("unimodular contact constants hold a pair");
        return unimodular_contact(parsed[0], parsed[1]);
      default:
        throw InputError("unknown structure family");
    }
  }

  friend bool operator==(const VessiotConstants& a, const VessiotConstants& b) {
    if (a.family_ != b.family_) return false;
    if (a.family_ == StructureFamily::CoFrame) return *a.tensor_ == *b.tensor_;
    return a.scalars_ == b.scalars_;
  }

 private:
  explicit VessiotConstants(StructureFamily f) : family_(f) {}

  const Rational& pair_part(std::size_t i) const {
    if (family_ != StructureFamily::UnimodularContact || scalars_.size() != 2)
      throw InputError("constants of this family are not a pair");
    return scalars_[i];
  }

  StructureFamily family_;
  std::optional<StructureConstants> tensor_;
  std::vector<Rational> scalars_;
};

// Coframe constants are stored on the structure-equation side:
//   d_i w^tau_j - d_j w^tau_i = c^tau_{rho sigma} w^rho_i w^sigma_j.
// The reciprocal frame fields then bracket with the opposite sign,
// [a_rho, a_sigma] = -c^tau_{rho sigma} a_tau, so code wanting the
// frame-bracket tensor applies this toggle.
inline StructureConstants maurer_cartan_tensor(const StructureConstants& c) {
  return c * Rational(-1);
}

struct FamilyJacobiReport {
  bool holds = true;
  std::string witness;  // empty when the condition holds
};

// Family dispatch of the algebraic compatibility condition on the constants.
inline FamilyJacobiReport jacobi_condition(const VessiotConstants& vc) {
  FamilyJacobiReport rep;
  switch (vc.family()) {
    case StructureFamily::CoFrame: {
      auto w = vc.tensor().jacobi_witness();
      if (w) {
        rep.holds = false;
        unsigned tau = 0;
        Rational value(0);
        for (unsigned t = 0; t < w->defect.size(); ++t)
          if (w->defect[t] != 0) {
            tau = t + 1;
            value = w->defect[t];
            break;
          }
        rep.witness = "J(c) component (" + std::to_string(tau) + ";" +
                      std::to_string(w->i) + "," + std::to_string(w->j) + "," +
                      std::to_string(w->k) + ") = " + to_string(value);
      }
      break;
    }
    case StructureFamily::UnimodularContact: {
      Rational prod = vc.c_prime() * vc.c_second();
      if (prod != 0) {
        rep.holds = false;
        rep.witness = "c'c'' = " + to_string(prod);
      }
      break;
    }
    case StructureFamily::Metric:
    case StructureFamily::ContactDensity:
      break;  // no condition
  }
  return rep;
}

namespace detail {

inline Rational require_constant(const RationalFunction& f, const char* what) {
  if (f.is_zero()) return Rational(0);
  if (!(f.den().is_constant() && f.num().is_constant()))
    throw NotAStructureError(std::string(what) +
                             " solves to a non-constant function: not a transitive structure");
  return f.num().constant_value() / f.den().constant_value();
}

}  // namespace detail

// Solves the family's structure equations for the constants and verifies the
// residual vanishes identically. The solved values must reduce to literal
// constants; any genuine function of x means the object is not a transitive
// structure of its family and raises NotAStructureError.
inline VessiotConstants vessiot_constants(const GeometricObject& obj) {
  const unsigned n = obj.base_dim();
  switch (obj.family()) {
    case StructureFamily::CoFrame: {
      // d w^tau has coefficients d_i w^tau_j - d_j w^tau_i; contracting with
      // the reciprocal frame A = omega^{-1} isolates each constant:
      //   c^tau_{rho sigma} = sum_{i,j} (d_i w^tau_j) (A^i_rho A^j_sigma - A^j_rho A^i_sigma).
      const FMatrix& w = obj.matrix();
      auto a = adjugate_inverse(w, RationalFunction::constant(n, 1));
      if (!a) throw MathError("degenerate coframe");
      StructureConstants c(n);
      for (unsigned tau = 1; tau <= n; ++tau)
        for (unsigned rho = 1; rho <= n; ++rho)
          for (unsigned sigma = rho + 1; sigma <= n; ++sigma) {
            RationalFunction v = RationalFunction::constant(n, 0);
            for (unsigned i = 1; i <= n; ++i)
              for (unsigned j = 1; j <= n; ++j) {
                RationalFunction dw = w.at(tau - 1, j - 1).derivative(i);
                v = v + dw * (a->at(i - 1, rho - 1) * a->at(j - 1, sigma - 1) -
                              a->at(j - 1, rho - 1) * a->at(i - 1, sigma - 1));
              }
            c.set(tau, rho, sigma, detail::require_constant(v, "a coframe constant"));
          }
      // Residual: d_i w^tau_j - d_j w^tau_i - sum c^tau_{rho sigma} (w^rho_i w^sigma_j - w^sigma_i w^rho_j).
      for (unsigned tau = 1; tau <= n; ++tau)
        for (unsigned i = 1; i <= n; ++i)
          for (unsigned j = i + 1; j <= n; ++j) {
            RationalFunction res =
                w.at(tau - 1, j - 1).derivative(i) - w.at(tau - 1, i - 1).derivative(j);
            for (unsigned rho = 1; rho <= n; ++rho)
              for (unsigned sigma = rho + 1; sigma <= n; ++sigma)
                res = res - RationalFunction::constant(n, c.at(tau, rho, sigma)) *
                                (w.at(rho - 1, i - 1) * w.at(sigma - 1, j - 1) -
                                 w.at(sigma - 1, i - 1) * w.at(rho - 1, j - 1));
            if (!res.is_zero())
              throw NotAStructureError("coframe structure equations leave a nonzero residual");
          }
      VessiotConstants out = VessiotConstants::coframe(c);
      auto jac = jacobi_condition(out);
      if (!jac.holds) throw MathError("Jacobi violated: " + jac.witness);
      return out;
    }
    case StructureFamily::Metric: {
      // Constant-curvature form: rho^k_lij = c (delta^k_i w_lj - delta^k_j w_li).
      const FMatrix& w = obj.matrix();
      CurvatureField rho = riemann(christoffel(obj));
      std::optional<Rational> c;
      for (unsigned k = 0; k < n && !c; ++k)
        for (unsigned l = 0; l < n && !c; ++l)
          for (unsigned i = 0; i < n && !c; ++i)
            for (unsigned j = 0; j < n && !c; ++j) {
              RationalFunction coeff = RationalFunction::constant(n, 0);
              if (k == i) coeff = coeff + w.at(l, j);
              if (k == j) coeff = coeff - w.at(l, i);
              if (coeff.is_zero()) continue;
              c = detail::require_constant(rho.at(k, l, i, j) / coeff, "the curvature constant");
            }
      if (!c) throw MathError("degenerate metric");
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l)
          for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
              RationalFunction coeff = RationalFunction::constant(n, 0);
              if (k == i) coeff = coeff + w.at(l, j);
              if (k == j) coeff = coeff - w.at(l, i);
              RationalFunction res =
                  rho.at(k, l, i, j) - RationalFunction::constant(n, *c) * coeff;
              if (!res.is_zero())
                throw NotAStructureError("curvature is not of constant-curvature form");
            }
      return VessiotConstants::metric(*c);
    }
    case StructureFamily::ContactDensity: {
      // c = w_1(d_2 w_3 - d_3 w_2) + w_2(d_3 w_1 - d_1 w_3) + w_3(d_1 w_2 - d_2 w_1).
      const auto& w = obj.one_form();
      RationalFunction v = w[0] * (w[2].derivative(2) - w[1].derivative(3)) +
                           w[1] * (w[0].derivative(3) - w[2].derivative(1)) +
                           w[2] * (w[1].derivative(1) - w[0].derivative(2));
      return VessiotConstants::contact_density(
          detail::require_constant(v, "the contact density constant"));
    }
    case StructureFamily::UnimodularContact: {
      // d alpha = c' beta and d beta = c'' alpha^beta.
      const auto& al = obj.one_form();
      const auto& be = obj.two_form();
      std::vector<RationalFunction> da = {al[2].derivative(2) - al[1].derivative(3),
                                          al[0].derivative(3) - al[2].derivative(1),
                                          al[1].derivative(1) - al[0].derivative(2)};
      std::optional<Rational> cp;
      for (unsigned i = 0; i < 3 && !cp; ++i) {
        if (be[i].is_zero()) continue;
        cp = detail::require_constant(da[i] / be[i], "c'");
      }
      if (!cp) throw MathError("degenerate pair: beta = 0");
      for (unsigned i = 0; i < 3; ++i)
        if (!(da[i] - RationalFunction::constant(n, *cp) * be[i]).is_zero())
          throw NotAStructureError("d(alpha) is not a constant multiple of beta");
      RationalFunction db =
          be[0].derivative(1) + be[1].derivative(2) + be[2].derivative(3);
      RationalFunction vol = obj.volume_coefficient();
      Rational cs = detail::require_constant(db / vol, "c''");
      if (!(db - RationalFunction::constant(n, cs) * vol).is_zero())
        throw NotAStructureError("d(beta) is not a constant multiple of alpha^beta");
      VessiotConstants out = VessiotConstants::unimodular_contact(*cp, cs);
      auto jac = jacobi_condition(out);
      if (!jac.holds) throw MathError("Jacobi violated: " + jac.witness);
      return out;
    }
  }
  throw InputError("unknown structure family");
}

}  // namespace liejets
