#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liejets/jet/bracket.hpp"
#include "liejets/jet/system.hpp"

namespace liejets {

struct ClosureViolation {
  std::size_t section_a = 0;
  std::size_t section_b = 0;
  std::size_t row = 0;  // first row of the system the bracket fails to satisfy
};

struct ClosureReport {
  bool closed = false;
  unsigned degree_bound = 0;
  std::size_t sections_tested = 0;
  // generating data of each spanning section: which parametric jet
  // coordinate was switched on, and with which monomial
  std::vector<std::pair<std::size_t, MultiIndex>> section_tags;
  std::optional<ClosureViolation> violation;
};

// Build the spanning section: one parametric coordinate set to the monomial
// x^nu, the others zero, principal coordinates filled in from the solved
// rows so the section satisfies the system identically.
inline JetSection spanning_section(const LinearJetSystem& sys, const SolvedForm& sf,
                                   std::size_t parametric_col, const MultiIndex& nu) {
  unsigned n = sys.base_dim();
  JetLayout layout(n, sys.fiber_dim(), sys.order());
  RationalFunction mono = RationalFunction::constant(n, Rational(1));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned rep = 0; rep < nu[i - 1]; ++rep)
      mono = mono * RationalFunction::variable(n, i);

  std::vector<RationalFunction> coords(layout.coordinate_count(),
                                       RationalFunction::constant(n, Rational(0)));
  coords[parametric_col] = mono;
  for (std::size_t r = 0; r < sf.principal_cols.size(); ++r)
    coords[sf.principal_cols[r]] =
        RationalFunction::constant(n, Rational(-1)) * sf.reduced.at(r, parametric_col) * mono;

  JetSection out(n, sys.fiber_dim(), sys.order());
  std::size_t idx = 0;
  for (const MultiIndex& mu : layout.indices())
    for (unsigned k = 1; k <= sys.fiber_dim(); ++k) out.set(k, mu, coords[idx++]);
  return out;
}

// Check [R_q, R_q] subset R_q on a spanning family of solutions: every
// parametric coordinate times every monomial up to the degree bound. The
// differential bracket of two solutions must again satisfy every row as a
// rational-function identity; the first failing pair is reported.
inline ClosureReport algebroid_closure_check(const LinearJetSystem& sys,
                                             unsigned degree_bound = 2) {
  if (sys.fiber_dim() != sys.base_dim())
    throw InputError("closure concerns systems on vector fields");
  SolvedForm sf = solved_form(sys);

  ClosureReport rep;
  rep.degree_bound = degree_bound;
  std::vector<JetSection> family;
  for (std::size_t pc : sf.parametric_cols)
    for (const MultiIndex& nu : enumerate_jet_indices(sys.base_dim(), degree_bound)) {
      family.push_back(spanning_section(sys, sf, pc, nu));
      rep.section_tags.push_back({pc, nu});
    }
  rep.sections_tested = family.size();

  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      JetSection br = differential_bracket(family[a], family[b]);
      for (std::size_t r = 0; r < sys.rows().size(); ++r)
        if (!sys.evaluate_row(r, br).is_zero()) {
          rep.closed = false;
          rep.violation = ClosureViolation{a, b, r};
          return rep;
        }
    }
  rep.closed = true;
  return rep;
}

}  // namespace liejets
