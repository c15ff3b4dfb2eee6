#pragma once

// The finite-dimensional deformation sequence attached to a structure family.
//
// For each family the sections of the relevant bundles that are invariant
// under the symmetry algebra form small constant-parameter spaces Upsilon_r.
// The naturally induced maps between them assemble into a complex
//
//   0 -> Z(Theta) -> C(Theta) --D--> Upsilon_0 --D1--> Upsilon_1 --D2--> ...
//
// whose cohomology controls deformations of the structure constants.  All
// spaces here are explicit and tiny, so the maps are stored as dense exact
// matrices and every derived quantity (normalizer and centralizer quotients,
// cohomology dimensions, the exactness identity
// dim N(Theta)/Theta = dim C(Theta)/Z(Theta) + dim H_0) is recomputed from
// them rather than tabulated.
//
// janet_bundle_dims sits at the jet-theoretic end of the same story: from an
// involutive first-order system it reads off the dimensions of the Janet
// bundles F_0, F_1, ... that house the compatibility conditions, with an
// independent rank-based cross-check of F_1.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "liejets/lie/ce.hpp"
#include "liejets/lie/cochain.hpp"
#include "liejets/matrix.hpp"
#include "liejets/rational.hpp"
#include "liejets/rational_function.hpp"
#include "liejets/jet/system.hpp"
#include "liejets/vessiot/constants.hpp"
#include "liejets/vessiot/medolaghi.hpp"
#include "liejets/vessiot/object.hpp"

namespace liejets {

struct SectionBasis {
  StructureFamily family;
  unsigned r = 0;
  std::size_t dim = 0;
  std::vector<std::string> basis;  // one constant-parameter label per element
};

namespace detail {

inline std::string cochain_label(unsigned tau, const std::vector<unsigned>& tuple) {
  std::string s = "A^" + std::to_string(tau) + "_";
  for (unsigned idx : tuple) s += std::to_string(idx);
  return s;
}

inline std::vector<std::string> cochain_labels(unsigned p, unsigned degree) {
  Cochain probe(p, degree);
  std::vector<std::string> out;
  for (const auto& tuple : probe.index_tuples())
    for (unsigned tau = 1; tau <= p; ++tau) out.push_back(cochain_label(tau, tuple));
  return out;
}

}  // namespace detail

// Constant-parameter basis of the invariant sections at level r.  The scalar
// families only have a closed-form description at level 0; the unimodular
// contact family has levels 0, 1, 2 matching its three Janet bundles.
inline SectionBasis invariant_sections(const VessiotConstants& vc, unsigned r) {
  SectionBasis out;
  out.family = vc.family();
  out.r = r;
  switch (vc.family()) {
    case StructureFamily::CoFrame: {
      unsigned p = vc.tensor().dim();
      if (r + 1 <= p) out.basis = detail::cochain_labels(p, r + 1);
      out.dim = out.basis.size();
      return out;
    }
    case StructureFamily::Metric:
      if (r != 0)
        throw InputError("unsupported (family, r) pair: metric invariant sections "
                         "have a closed form at level 0 only");
      out.basis = {"A"};
      out.dim = 1;
      return out;
    case StructureFamily::ContactDensity:
      if (r != 0)
        throw InputError("unsupported (family, r) pair: contact_density invariant "
                         "sections have a closed form at level 0 only");
      out.basis = {"A"};
      out.dim = 1;
      return out;
    case StructureFamily::UnimodularContact:
      if (r == 0)
        out.basis = {"A", "B"};
      else if (r == 1)
        out.basis = {"C'", "C''"};
      else if (r == 2)
        out.basis = {"D"};
      else
        throw InputError("unsupported (family, r) pair: unimodular_contact levels "
                         "run from 0 to 2");
      out.dim = out.basis.size();
      return out;
  }
  throw InputError("unknown structure family");
}

struct NormalizerReport {
  std::size_t dim = 0;
  std::string conditions;  // the linear equations cutting out N(Theta)/Theta
};

struct CentralizerReport {
  std::size_t c_dim = 0;  // dim C(Theta)
  std::size_t z_dim = 0;  // dim Z(Theta)
  // Object route only: generating vector fields, one component list each.
  std::vector<std::vector<RationalFunction>> generators;
};

struct DeformationSequenceReport {
  StructureFamily family;
  VessiotConstants constants;
  std::vector<std::string> space_labels;               // "C(Theta)", "Upsilon_0", ...
  std::vector<std::size_t> space_dims;
  std::vector<std::vector<std::string>> space_basis;   // parameter names per space
  std::vector<QMatrix> maps;                           // maps[i]: space i -> space i+1
  std::vector<std::size_t> cohomology;                 // at Upsilon_0, Upsilon_1, ...
  std::size_t c_dim = 0;
  std::size_t z_dim = 0;
  std::size_t normalizer_dim = 0;                      // dim N(Theta)/Theta = ker maps[1]
  bool compositions_vanish = false;
  bool exactness_identity = false;  // normalizer_dim == (c_dim - z_dim) + cohomology[0]

  DeformationSequenceReport(StructureFamily f, VessiotConstants c)
      : family(f), constants(std::move(c)) {}
};

namespace detail {

inline bool matrix_is_zero(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

}  // namespace detail

inline DeformationSequenceReport deformation_sequence(const VessiotConstants& vc) {
  FamilyJacobiReport jac = jacobi_condition(vc);
  if (!jac.holds) throw MathError("Jacobi violated: " + jac.witness);

  DeformationSequenceReport rep(vc.family(), vc);
  switch (vc.family()) {
    case StructureFamily::CoFrame: {
      // The sequence is the cochain complex of the extracted Lie algebra:
      // C(Theta) is the algebra itself acting by its bracket, Upsilon_r its
      // degree-(r+1) cochains, and every map a coboundary.
      const StructureConstants& c = vc.tensor();
      unsigned p = c.dim();
      rep.space_labels.push_back("C(Theta)");
      rep.space_dims.push_back(p);
      std::vector<std::string> frame;
      for (unsigned i = 1; i <= p; ++i) frame.push_back("K_" + std::to_string(i));
      rep.space_basis.push_back(frame);
      for (unsigned r = 0; r + 1 <= p; ++r) {
        rep.space_labels.push_back("Upsilon_" + std::to_string(r));
        std::vector<std::string> basis = detail::cochain_labels(p, r + 1);
        rep.space_dims.push_back(basis.size());
        rep.space_basis.push_back(std::move(basis));
        rep.maps.push_back(ce_differential_matrix(c, r));
      }
      break;
    }
    case StructureFamily::Metric:
    case StructureFamily::ContactDensity: {
      // One section parameter, one target slot; the only interesting entry
      // is the derivative of the label action at the identity label.
      bool metric = vc.family() == StructureFamily::Metric;
      Rational c = vc.scalar();
      rep.space_labels = {"C(Theta)", "Upsilon_0", "Upsilon_1"};
      rep.space_dims = {0, 1, 1};
      rep.space_basis = {{}, {"A"}, {"C"}};
      rep.maps.push_back(make_qmatrix(1, 0));
      QMatrix d1 = make_qmatrix(1, 1);
      d1.at(0, 0) = metric ? -c : Rational(2) * c;
      rep.maps.push_back(d1);
      break;
    }
    case StructureFamily::UnimodularContact: {
      Rational cp = vc.c_prime(), cs = vc.c_second();
      rep.space_labels = {"C(Theta)", "Upsilon_0", "Upsilon_1", "Upsilon_2"};
      rep.space_dims = {1, 2, 2, 1};
      rep.space_basis = {{"K"}, {"A", "B"}, {"C'", "C''"}, {"D"}};
      QMatrix d = make_qmatrix(2, 1);   // K -> (0, c''K)
      d.at(1, 0) = cs;
      QMatrix d1 = make_qmatrix(2, 2);  // (A,B) -> (c'(A-B), -c''A)
      d1.at(0, 0) = cp;
      d1.at(0, 1) = -cp;
      d1.at(1, 0) = -cs;
      QMatrix d2 = make_qmatrix(1, 2);  // (C',C'') -> c''C' + c'C''
      d2.at(0, 0) = cs;
      d2.at(0, 1) = cp;
      rep.maps = {d, d1, d2};
      break;
    }
  }

  std::vector<std::size_t> ranks;
  ranks.reserve(rep.maps.size());
  for (const QMatrix& m : rep.maps) ranks.push_back(m.rank());

  rep.c_dim = rep.space_dims[0];
  rep.z_dim = rep.space_dims[0] - ranks[0];
  // When the complex already ends at Upsilon_0 the normalizer condition is
  // vacuous there (a one-dimensional frame has only derivations).
  rep.normalizer_dim =
      rep.maps.size() > 1 ? rep.space_dims[1] - ranks[1] : rep.space_dims[1];
  for (std::size_t k = 1; k < rep.space_dims.size(); ++k) {
    std::size_t out_rank = k < rep.maps.size() ? ranks[k] : 0;
    rep.cohomology.push_back(rep.space_dims[k] - out_rank - ranks[k - 1]);
  }

  rep.compositions_vanish = true;
  for (std::size_t i = 0; i + 1 < rep.maps.size(); ++i)
    if (!detail::matrix_is_zero(rep.maps[i + 1] * rep.maps[i]))
      rep.compositions_vanish = false;
  rep.exactness_identity =
      rep.normalizer_dim == (rep.c_dim - rep.z_dim) + rep.cohomology[0];
  return rep;
}

// dim N(Theta)/Theta together with the linear conditions defining it inside
// Upsilon_0.  Everything is read off the deformation sequence.
inline NormalizerReport normalizer_quotient(const VessiotConstants& vc) {
  NormalizerReport out;
  out.dim = deformation_sequence(vc).normalizer_dim;
  switch (vc.family()) {
    case StructureFamily::CoFrame:
      out.conditions = "A a derivation of c";
      break;
    case StructureFamily::Metric:
      out.conditions = "cA = 0";
      break;
    case StructureFamily::ContactDensity:
      out.conditions = "Ac = 0";
      break;
    case StructureFamily::UnimodularContact:
      out.conditions = "c'(A-B) = 0, c''A = 0";
      break;
  }
  return out;
}

inline CentralizerReport centralizer_dim(const VessiotConstants& vc) {
  CentralizerReport out;
  switch (vc.family()) {
    case StructureFamily::CoFrame: {
      const StructureConstants& c = vc.tensor();
      out.c_dim = c.dim();
      out.z_dim = c.dim() - ce_differential_matrix(c, 0).rank();
      break;
    }
    case StructureFamily::Metric:
    case StructureFamily::ContactDensity:
      break;  // both spaces vanish
    case StructureFamily::UnimodularContact:
      out.c_dim = 1;
      out.z_dim = vc.c_second() == 0 ? 1 : 0;
      break;
  }
  return out;
}

// Object route: same dimensions, plus explicit generating fields.
inline CentralizerReport centralizer_dim(const GeometricObject& obj) {
  CentralizerReport out = centralizer_dim(vessiot_constants(obj));
  unsigned n = obj.base_dim();
  switch (obj.family()) {
    case StructureFamily::CoFrame: {
      // The commuting fields are the reciprocal frame of the coframe matrix.
      auto inv = adjugate_inverse(obj.matrix(), RationalFunction::constant(n, 1));
      if (!inv) throw MathError("coframe matrix is singular");
      for (unsigned rho = 0; rho < n; ++rho) {
        std::vector<RationalFunction> field;
        for (unsigned i = 0; i < n; ++i) field.push_back(inv->at(i, rho));
        out.generators.push_back(std::move(field));
      }
      break;
    }
    case StructureFamily::UnimodularContact: {
      RationalFunction vol = obj.volume_coefficient();
      std::vector<RationalFunction> field;
      for (const RationalFunction& b : obj.two_form()) field.push_back(b / vol);
      out.generators.push_back(std::move(field));
      break;
    }
    case StructureFamily::Metric:
    case StructureFamily::ContactDensity:
      break;
  }
  return out;
}

struct JanetDims {
  unsigned t_dim = 0;                 // base dimension
  std::vector<std::size_t> f_dims;    // F_0, F_1, ... until the recursion dies out
  long long euler = 0;                // t_dim - F_0 + F_1 - ...
  std::vector<std::size_t> beta;      // per-class solved counts of the system
  std::size_t compatibility_count = 0;  // sum_i (n-i) beta^i, equals dim F_1
};

// Dimensions of the Janet bundles of the structure's defining system at the
// given section.  The recursion b^{r+1}_j = sum_{i<j} b^r_i starting from the
// solved per-class counts produces every F_r; F_1 is cross-checked against a
// direct rank computation on the once-prolonged system.
inline JanetDims janet_bundle_dims(const GeometricObject& obj, std::uint64_t seed = 0) {
  LinearJetSystem sys = medolaghi_system(obj);
  InvolutivityReport inv = involutivity(sys, seed);
  if (!inv.involutive)
    throw MathError("the defining system is not involutive at this section; "
                    "Janet bundle dimensions are only meaningful past involutivity");

  JanetDims out;
  unsigned n = sys.base_dim();
  out.t_dim = n;
  out.beta = inv.beta;

  std::size_t f0 = std::accumulate(out.beta.begin(), out.beta.end(), std::size_t{0});
  std::size_t direct_f0 = sys.coefficient_matrix().rank();
  if (f0 != direct_f0)
    throw MathError("solved-form class counts disagree with the system rank");

  for (unsigned i = 1; i <= n; ++i)
    out.compatibility_count += (n - i) * out.beta[i - 1];

  std::vector<std::size_t> b(out.beta);
  out.f_dims.push_back(f0);
  while (true) {
    std::vector<std::size_t> next(n, 0);
    for (unsigned j = 0; j < n; ++j)
      for (unsigned i = 0; i < j; ++i) next[j] += b[i];
    std::size_t total = std::accumulate(next.begin(), next.end(), std::size_t{0});
    if (total == 0) break;
    out.f_dims.push_back(total);
    b = std::move(next);
  }

  if (out.f_dims.size() > 1) {
    std::size_t prolonged_rank = sys.prolong_once().coefficient_matrix().rank();
    std::size_t direct_f1 = (n + 1) * f0 - prolonged_rank;
    if (direct_f1 != out.f_dims[1])
      throw MathError("Janet bundle recursion disagrees with the direct rank count for F_1");
  }

  out.euler = static_cast<long long>(out.t_dim);
  long long sign = -1;
  for (std::size_t f : out.f_dims) {
    out.euler += sign * static_cast<long long>(f);
    sign = -sign;
  }
  return out;
}

}  // namespace liejets
