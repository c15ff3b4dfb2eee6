#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liejets/expr.hpp"
#include "liejets/matrix.hpp"
#include "liejets/rational_function.hpp"

namespace liejets {

// The four structure families the library computes with. Each one is a field
// on the base whose pointwise Lie derivative produces a linear first-order
// system on vector fields; everything downstream (structure constants, label
// actions, the finite-dimensional deformation complexes) is driven by which
// family an object belongs to.
enum class StructureFamily { CoFrame, Metric, ContactDensity, UnimodularContact };

inline const char* family_name(StructureFamily f) {
  switch (f) {
    case StructureFamily::CoFrame: return "co_frame";
    case StructureFamily::Metric: return "metric";
    case StructureFamily::ContactDensity: return "contact_density";
    case StructureFamily::UnimodularContact: return "unimodular_contact";
  }
  throw InputError("unknown structure family");
}

inline StructureFamily parse_family(const std::string& s) {
  if (s == "co_frame" || s == "coframe") return StructureFamily::CoFrame;
  if (s == "metric") return StructureFamily::Metric;
  if (s == "contact_density") return StructureFamily::ContactDensity;
  if (s == "unimodular_contact") return StructureFamily::UnimodularContact;
  throw InputError("unsupported family: " + s);
}

// A geometric object: the data of one structure, with the family's
// nondegeneracy condition checked symbolically (as a rational-function
// identity, never by sampling).
//
//   CoFrame            n independent 1-forms; omega(tau, i) is the i-th
//                      coefficient of the tau-th form. det != 0.
//   Metric             symmetric omega(i, j) with det != 0.
//   ContactDensity     a single 1-form density (omega_1, omega_2, omega_3),
//                      base dimension 3 only.
//   UnimodularContact  a 1-form alpha and a 2-form beta, stored by the
//                      components (beta_23, beta_31, beta_12); the volume
//                      coefficient of alpha^beta must be nonzero.
class GeometricObject {
 public:
  static GeometricObject coframe(unsigned n, FMatrix omega) {
    if (omega.rows() != n || omega.cols() != n)
      throw InputError("coframe needs an n x n coefficient matrix");
    GeometricObject o(StructureFamily::CoFrame, n);
    o.matrix_ = std::move(omega);
    if (laplace_determinant(o.matrix_).is_zero())
      throw InputError("degenerate coframe: det(omega) = 0");
    return o;
  }

  static GeometricObject metric(unsigned n, FMatrix omega) {
    if (omega.rows() != n || omega.cols() != n)
      throw InputError("metric needs an n x n coefficient matrix");
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (!(omega.at(i, j) - omega.at(j, i)).is_zero())
          throw InputError("metric matrix must be symmetric");
    GeometricObject o(StructureFamily::Metric, n);
    o.matrix_ = std::move(omega);
    if (laplace_determinant(o.matrix_).is_zero())
      throw InputError("degenerate metric: det(omega) = 0");
    return o;
  }

  static GeometricObject contact_density(unsigned n, std::vector<RationalFunction> omega) {
    if (n != 3)
      throw InputError("contact densities are supported in base dimension 3 only");
    if (omega.size() != 3) throw InputError("contact density needs 3 components");
    GeometricObject o(StructureFamily::ContactDensity, n);
    o.alpha_ = std::move(omega);
    bool nonzero = false;
    for (const auto& c : o.alpha_) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw InputError("degenerate contact density: omega = 0");
    return o;
  }

  static GeometricObject unimodular_contact(unsigned n, std::vector<RationalFunction> alpha,
                                            std::vector<RationalFunction> beta) {
    if (n != 3) throw InputError("unimodular contact pairs live in base dimension 3");
    if (alpha.size() != 3 || beta.size() != 3)
      throw InputError("unimodular contact pair needs 3 components each");
    GeometricObject o(StructureFamily::UnimodularContact, n);
    o.alpha_ = std::move(alpha);
    o.beta_ = std::move(beta);
    if (o.volume_coefficient().is_zero())
      throw InputError("degenerate pair: alpha^beta = 0");
    return o;
  }

  StructureFamily family() const { return family_; }
  unsigned base_dim() const { return n_; }

  // CoFrame / Metric coefficient matrix.
  const FMatrix& matrix() const { return matrix_; }

  // ContactDensity components, or the alpha part of a unimodular pair.
  const std::vector<RationalFunction>& one_form() const { return alpha_; }

  // (beta_23, beta_31, beta_12) of a unimodular pair.
  const std::vector<RationalFunction>& two_form() const { return beta_; }

  // Full antisymmetric component beta_ij (1-based indices).
  RationalFunction beta_component(unsigned i, unsigned j) const {
    if (i == j) return RationalFunction::constant(n_, 0);
    if (i == 2 && j == 3) return beta_[0];
    if (i == 3 && j == 1) return beta_[1];
    if (i == 1 && j == 2) return beta_[2];
    return RationalFunction::constant(n_, 0) - beta_component(j, i);
  }

  // Coefficient of alpha^beta on dx1^dx2^dx3.
  RationalFunction volume_coefficient() const {
    RationalFunction v = RationalFunction::constant(n_, 0);
    for (unsigned i = 0; i < 3; ++i) v = v + alpha_[i] * beta_[i];
    return v;
  }

  static GeometricObject from_json(const nlohmann::json& j) {
    if (!j.contains("family")) throw InputError("object file lacks a family field");
    StructureFamily fam = parse_family(j.at("family").get<std::string>());
    unsigned n = j.at("n").get<unsigned>();
    if (n == 0) throw InputError("base dimension must be positive");
    switch (fam) {
      case StructureFamily::CoFrame:
      case StructureFamily::Metric: {
        const auto& rows = j.at("omega");
        if (!rows.is_array() || rows.size() != n)
          throw InputError("omega must be an n x n matrix of expressions");
        FMatrix m = make_fmatrix(n, n, n);
        for (unsigned r = 0; r < n; ++r) {
          if (!rows[r].is_array() || rows[r].size() != n)
            throw InputError("omega must be an n x n matrix of expressions");
          for (unsigned c = 0; c < n; ++c)
            m.at(r, c) = parse_expression(rows[r][c].get<std::string>(), n);
        }
        return fam == StructureFamily::CoFrame ? coframe(n, std::move(m))
                                               : metric(n, std::move(m));
      }
      case StructureFamily::ContactDensity: {
        return contact_density(n, parse_component_list(j.at("omega"), n));
      }
      case StructureFamily::UnimodularContact: {
        std::vector<RationalFunction> alpha = parse_component_list(j.at("alpha"), n);
        const auto& b = j.at("beta");
        if (!b.is_object()) throw InputError("beta must map component labels to expressions");
        std::vector<RationalFunction> beta;
        for (const char* key : {"23", "31", "12"}) {
          if (!b.contains(key)) throw InputError(std::string("beta lacks component ") + key);
          beta.push_back(parse_expression(b.at(key).get<std::string>(), n));
        }
        return unimodular_contact(n, std::move(alpha), std::move(beta));
      }
    }
    throw InputError("unknown structure family");
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family_);
    j["n"] = n_;
    switch (family_) {
      case StructureFamily::CoFrame:
      case StructureFamily::Metric: {
        nlohmann::json rows = nlohmann::json::array();
        for (unsigned r = 0; r < n_; ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (unsigned c = 0; c < n_; ++c) row.push_back(format(matrix_.at(r, c)));
          rows.push_back(row);
        }
        j["omega"] = rows;
        break;
      }
      case StructureFamily::ContactDensity: {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : alpha_) comps.push_back(format(c));
        j["omega"] = comps;
        break;
      }
      case StructureFamily::UnimodularContact: {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : alpha_) comps.push_back(format(c));
        j["alpha"] = comps;
        j["beta"] = {{"23", format(beta_[0])},
                     {"31", format(beta_[1])},
                     {"12", format(beta_[2])}};
        break;
      }
    }
    return j;
  }

  static GeometricObject load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open object file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("malformed object file " + path + ": " + e.what());
    }
    try {
      return from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("malformed object file " + path + ": " + e.what());
    }
  }

 private:
  GeometricObject(StructureFamily f, unsigned n) : family_(f), n_(n) {}

  static std::vector<RationalFunction> parse_component_list(const nlohmann::json& a,
                                                            unsigned n) {
    if (!a.is_array() || a.size() != 3) throw InputError("expected 3 component expressions");
    std::vector<RationalFunction> out;
    for (const auto& e : a) out.push_back(parse_expression(e.get<std::string>(), n));
    return out;
  }

  StructureFamily family_;
  unsigned n_;
  FMatrix matrix_;
  std::vector<RationalFunction> alpha_;
  std::vector<RationalFunction> beta_;
};

}  // namespace liejets
