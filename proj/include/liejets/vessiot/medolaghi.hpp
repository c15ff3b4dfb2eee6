#pragma once

#include <array>
#include <vector>

#include "liejets/jet/system.hpp"
#include "liejets/vessiot/curvature.hpp"
#include "liejets/vessiot/object.hpp"

namespace liejets {

// The linearized invariance equations of a geometric object: the rows say
// that the Lie derivative of the object along a vector field xi vanishes,
// written out in jet coordinates xi^k_mu. Row counts per family:
//
//   CoFrame            n^2   rows  sum_r w^tau_r xi^r_i + (d_r w^tau_i) xi^r
//   Metric             n(n+1)/2    sum_r w_rj xi^r_i + w_ir xi^r_j + (d_r w_ij) xi^r
//   ContactDensity     3           sum_r w_r xi^r_i - (1/2) w_i xi^r_r + (d_r w_i) xi^r
//   UnimodularContact  6           the alpha rows (as for a single 1-form)
//                                  and the beta rows (as for a 2-form)
inline LinearJetSystem medolaghi_system(const GeometricObject& obj) {
  const unsigned n = obj.base_dim();
  LinearJetSystem sys(n, n, 1);
  auto unit = [&](unsigned i) {
    MultiIndex mu(n, 0);
    mu[i - 1] = 1;
    return mu;
  };
  const MultiIndex base(n, 0);

  auto one_form_rows = [&](const std::vector<RationalFunction>& w) {
    for (unsigned i = 1; i <= n; ++i) {
      JetRow row;
      for (unsigned r = 1; r <= n; ++r) {
        row.push_back({r, unit(i), w[r - 1]});
        row.push_back({r, base, w[i - 1].derivative(r)});
      }
      sys.add_row(row);
    }
  };

  switch (obj.family()) {
    case StructureFamily::CoFrame: {
      const FMatrix& w = obj.matrix();
      for (unsigned tau = 0; tau < n; ++tau)
        for (unsigned i = 1; i <= n; ++i) {
          JetRow row;
          for (unsigned r = 1; r <= n; ++r) {
            row.push_back({r, unit(i), w.at(tau, r - 1)});
            row.push_back({r, base, w.at(tau, i - 1).derivative(r)});
          }
          sys.add_row(row);
        }
      break;
    }
    case StructureFamily::Metric: {
      const FMatrix& w = obj.matrix();
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
          JetRow row;
          for (unsigned r = 1; r <= n; ++r) {
            row.push_back({r, unit(i), w.at(r - 1, j - 1)});
            row.push_back({r, unit(j), w.at(i - 1, r - 1)});
            row.push_back({r, base, w.at(i - 1, j - 1).derivative(r)});
          }
          sys.add_row(row);
        }
      break;
    }
    case StructureFamily::ContactDensity: {
      const auto& w = obj.one_form();
      const RationalFunction half = RationalFunction::constant(n, Rational(1, 2));
      for (unsigned i = 1; i <= n; ++i) {
        JetRow row;
        for (unsigned r = 1; r <= n; ++r) {
          row.push_back({r, unit(i), w[r - 1]});
          row.push_back({r, unit(r), RationalFunction::constant(n, 0) - half * w[i - 1]});
          row.push_back({r, base, w[i - 1].derivative(r)});
        }
        sys.add_row(row);
      }
      break;
    }
    case StructureFamily::UnimodularContact: {
      one_form_rows(obj.one_form());
      const std::array<std::array<unsigned, 2>, 3> pairs = {{{2, 3}, {3, 1}, {1, 2}}};
      for (const auto& [i, j] : pairs) {
        JetRow row;
        for (unsigned r = 1; r <= n; ++r) {
          row.push_back({r, unit(i), obj.beta_component(r, j)});
          row.push_back({r, unit(j), obj.beta_component(i, r)});
          row.push_back({r, base, obj.beta_component(i, j).derivative(r)});
        }
        sys.add_row(row);
      }
      break;
    }
  }
  return sys;
}

// Second invariance form of a metric: the transformation law of its
// Christoffel symbols, an order-2 system. Solutions are the vector fields
// preserving the associated connection:
//   xi^k_{ij} + gamma^k_rj xi^r_i + gamma^k_ir xi^r_j - gamma^r_ij xi^k_r
//             + (d_r gamma^k_ij) xi^r = 0.
inline LinearJetSystem metric_christoffel_system(const GeometricObject& obj) {
  if (obj.family() != StructureFamily::Metric)
    throw InputError("the christoffel extension needs a metric object");
  const unsigned n = obj.base_dim();
  ChristoffelField g = christoffel(obj);
  LinearJetSystem sys(n, n, 2);
  auto unit = [&](unsigned i) {
    MultiIndex mu(n, 0);
    mu[i - 1] = 1;
    return mu;
  };
  const MultiIndex base(n, 0);
  const RationalFunction one = RationalFunction::constant(n, 1);
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i; j <= n; ++j) {
        JetRow row;
        MultiIndex second(n, 0);
        second[i - 1] += 1;
        second[j - 1] += 1;
        row.push_back({k, second, one});
        for (unsigned r = 1; r <= n; ++r) {
          row.push_back({r, unit(i), g.at(k - 1, r - 1, j - 1)});
          row.push_back({r, unit(j), g.at(k - 1, i - 1, r - 1)});
          row.push_back({k, unit(r),
                         RationalFunction::constant(n, 0) - g.at(r - 1, i - 1, j - 1)});
          row.push_back({r, base, g.at(k - 1, i - 1, j - 1).derivative(r)});
        }
        sys.add_row(row);
      }
  return sys;
}

}  // namespace liejets
