#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liejets/expr.hpp"
#include "liejets/generic_point.hpp"
#include "liejets/jet/section.hpp"
#include "liejets/jet/spencer.hpp"

namespace liejets {

struct JetTerm {
  unsigned k = 0;
  MultiIndex mu;
  RationalFunction coeff;
};

using JetRow = std::vector<JetTerm>;

// Homogeneous linear equations on the order-q jet fiber with coefficients
// that are rational functions of the base point. Rows are kept normalized:
// one term per (k, mu), zero terms dropped.
class LinearJetSystem {
 public:
  LinearJetSystem(unsigned n, unsigned m, unsigned q) : n_(n), m_(m), q_(q) {
    if (n == 0 || m == 0) throw InputError("system needs positive dimensions");
  }

  unsigned base_dim() const { return n_; }
  unsigned fiber_dim() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<JetRow>& rows() const { return rows_; }

  void add_row(const JetRow& row) {
    JetRow norm;
    for (const JetTerm& t : row) {
      if (t.k == 0 || t.k > m_) throw InputError("row component index out of range");
      if (t.mu.size() != n_) throw InputError("row multi-index has wrong length");
      if (index_length(t.mu) > q_) throw InputError("row term exceeds the system order");
      bool merged = false;
      for (JetTerm& u : norm)
        if (u.k == t.k && u.mu == t.mu) {
          u.coeff = u.coeff + t.coeff;
          merged = true;
          break;
        }
      if (!merged) norm.push_back(t);
    }
    JetRow cleaned;
    for (JetTerm& t : norm)
      if (!t.coeff.is_zero()) cleaned.push_back(std::move(t));
    if (!cleaned.empty()) rows_.push_back(std::move(cleaned));
  }

  RationalFunction evaluate_row(std::size_t row_idx, const JetSection& f) const {
    if (f.base_dim() != n_ || f.fiber_dim() != m_ || f.order() < q_)
      throw InputError("section does not fit the system");
    RationalFunction acc = RationalFunction::constant(n_, Rational(0));
    for (const JetTerm& t : rows_.at(row_idx)) acc = acc + t.coeff * f.at(t.k, t.mu);
    return acc;
  }

  // a section solves the system when every row vanishes identically
  bool annihilates(const JetSection& f) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!evaluate_row(r, f).is_zero()) return false;
    return true;
  }

  // coefficient matrix over the function field, columns in the frozen
  // jet-coordinate order
  FMatrix coefficient_matrix() const {
    JetLayout layout(n_, m_, q_);
    FMatrix M = make_fmatrix(rows_.size(), layout.coordinate_count(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const JetTerm& t : rows_[r]) M.at(r, layout.coordinate(t.mu, t.k)) = t.coeff;
    return M;
  }

  // top-degree columns only
  FMatrix symbol_matrix() const {
    SymbolLayout layout(n_, m_, q_);
    FMatrix M = make_fmatrix(rows_.size(), layout.coordinate_count(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const JetTerm& t : rows_[r])
        if (index_length(t.mu) == q_) M.at(r, layout.coordinate(t.mu, t.k)) = t.coeff;
    return M;
  }

  // d_i of a row: differentiate coefficients and push every jet one step
  static JetRow formal_derivative(const JetRow& row, unsigned i) {
    JetRow out;
    for (const JetTerm& t : row) {
      out.push_back({t.k, t.mu, t.coeff.derivative(i)});
      out.push_back({t.k, bump(t.mu, i), t.coeff});
    }
    return out;
  }

  // originals plus all first formal derivatives, as a system one order up
  LinearJetSystem prolong_once() const {
    LinearJetSystem out(n_, m_, q_ + 1);
    for (const JetRow& row : rows_) out.add_row(row);
    for (const JetRow& row : rows_)
      for (unsigned i = 1; i <= n_; ++i) out.add_row(formal_derivative(row, i));
    return out;
  }

  LinearJetSystem prolong(unsigned r) const {
    LinearJetSystem out = *this;
    for (unsigned step = 0; step < r; ++step) out = out.prolong_once();
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const JetRow& row : rows_) {
      nlohmann::json terms = nlohmann::json::array();
      for (const JetTerm& t : row)
        terms.push_back({{"k", t.k}, {"mu", t.mu}, {"coeff", format(t.coeff)}});
      rows.push_back({{"terms", terms}});
    }
    return {{"n", n_}, {"m", m_}, {"q", q_}, {"rows", rows}};
  }

  static LinearJetSystem from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("q"))
      throw InputError("jet system file needs n, m, q");
    unsigned n = JetSection::read_dim(j, "n");
    unsigned m = JetSection::read_dim(j, "m");
    unsigned q = JetSection::read_order(j, "q");
    LinearJetSystem out(n, m, q);
    if (!j.contains("rows") || !j["rows"].is_array())
      throw InputError("jet system file needs a rows list");
    for (const auto& rj : j["rows"]) {
      if (!rj.is_object() || !rj.contains("terms") || !rj["terms"].is_array())
        throw InputError("each row needs a terms list");
      JetRow row;
      for (const auto& tj : rj["terms"]) {
        auto [k, mu] = JetSection::read_target(tj, n, m);
        if (index_length(mu) > q) throw InputError("row term exceeds the system order");
        if (!tj.contains("coeff") || !tj["coeff"].is_string())
          throw InputError("row term needs a coeff string");
        row.push_back({k, mu, parse_expression(tj["coeff"].get<std::string>(), n)});
      }
      out.add_row(row);
    }
    return out;
  }

  static LinearJetSystem load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return from_json(j);
  }

 private:
  unsigned n_, m_, q_;
  std::vector<JetRow> rows_;
};

// Row-reduced description of the system: pivot (principal) jet coordinates
// expressed in the remaining (parametric) ones.
struct SolvedForm {
  FMatrix reduced;                          // rref of the coefficient matrix
  std::vector<std::size_t> principal_cols;  // pivot columns, frozen layout
  std::vector<std::size_t> parametric_cols;
};

inline SolvedForm solved_form(const LinearJetSystem& sys) {
  FMatrix M = sys.coefficient_matrix();
  auto ech = M.rref(PivotStrategy::FirstNonzero);
  SolvedForm out{ech.reduced, ech.pivots, {}};
  for (std::size_t c = 0; c < M.cols(); ++c) {
    bool pivot = false;
    for (std::size_t p : ech.pivots)
      if (p == c) pivot = true;
    if (!pivot) out.parametric_cols.push_back(c);
  }
  return out;
}

// Solution-space dimension at a generic base point, from the exact rank
// over the function field.
inline std::size_t solution_dim(const LinearJetSystem& sys) {
  return jet_fiber_dim(sys.base_dim(), sys.fiber_dim(), sys.order()) -
         sys.coefficient_matrix().rank();
}

inline std::size_t symbol_dim(const LinearJetSystem& sys) {
  SymbolLayout layout(sys.base_dim(), sys.fiber_dim(), sys.order());
  return layout.coordinate_count() - sys.symbol_matrix().rank();
}

// Kernel of the symbol at an explicit point; the point must keep the rank
// the function field sees, otherwise the basis would be too big.
inline SymbolSpace symbol_space_at(const LinearJetSystem& sys,
                                   const std::vector<Rational>& point) {
  FMatrix S = sys.symbol_matrix();
  std::size_t generic = S.rank();
  QMatrix at = evaluate_matrix(S, point);
  if (at.rank() != generic) throw MathError("point does not preserve the symbol rank");
  SymbolSpace g{sys.base_dim(), sys.fiber_dim(), sys.order(), at.kernel_basis(Rational(1))};
  return g;
}

// dim of the projection of the solution set one order down: eliminate the
// top-degree jets exactly. With M = [T | L] split by degree, the induced
// equations on lower jets have rank (rank M - rank T).
inline std::size_t projected_solution_dim(const LinearJetSystem& sys) {
  if (sys.order() == 0) throw InputError("nothing below order 0");
  std::size_t full = sys.coefficient_matrix().rank();
  std::size_t top = sys.symbol_matrix().rank();
  return jet_fiber_dim(sys.base_dim(), sys.fiber_dim(), sys.order() - 1) - (full - top);
}

struct IntegrabilityRow {
  unsigned order = 0;
  std::size_t dim_solution = 0;
  std::size_t dim_symbol = 0;
  std::optional<std::size_t> projected_dim;  // of the next order's solutions, into this one
  bool surjective = false;
};

struct IntegrabilityReport {
  std::vector<IntegrabilityRow> table;
  std::vector<Rational> point;
  std::vector<Rational> check_point;
  bool integrable_up_to_bound = false;
};

// Dimension profile of the prolongation tower. Ranks are exact over the
// function field; the two sample points only confirm that the generic
// counts are attained at honest evaluations.
inline IntegrabilityReport formal_integrability_report(const LinearJetSystem& sys,
                                                       unsigned r_max,
                                                       std::uint64_t seed = 0) {
  std::vector<LinearJetSystem> tower{sys};
  for (unsigned r = 0; r < r_max + 1; ++r) tower.push_back(tower.back().prolong_once());

  std::vector<FMatrix> mats;
  std::vector<std::pair<const FMatrix*, std::size_t>> family;
  for (const auto& t : tower) {
    mats.push_back(t.coefficient_matrix());
    mats.push_back(t.symbol_matrix());
  }
  std::vector<std::size_t> ranks;
  for (const auto& m : mats) ranks.push_back(m.rank());
  for (std::size_t i = 0; i < mats.size(); ++i) family.push_back({&mats[i], ranks[i]});

  GenericPoint gen(seed);
  IntegrabilityReport rep;
  rep.point = gen.find_rank_preserving_all(family, sys.base_dim());
  rep.check_point = gen.find_rank_preserving_all(family, sys.base_dim());

  rep.integrable_up_to_bound = true;
  for (unsigned r = 0; r <= r_max; ++r) {
    IntegrabilityRow row;
    row.order = sys.order() + r;
    row.dim_solution = solution_dim(tower[r]);
    row.dim_symbol = symbol_dim(tower[r]);
    row.projected_dim = projected_solution_dim(tower[r + 1]);
    row.surjective = (*row.projected_dim == row.dim_solution);
    if (!row.surjective) rep.integrable_up_to_bound = false;
    rep.table.push_back(row);
  }
  return rep;
}

namespace detail {

// Action of a base change A on degree-q symbol coordinates: the monomial
// factor transforms by substituting z_i -> sum_j A_{ji} z_j and expanding;
// for systems on vector fields (m = n) the fiber transforms by A as well.
inline QMatrix symbol_change_matrix(unsigned n, unsigned m, unsigned q, const QMatrix& A) {
  SymbolLayout layout(n, m, q);
  QMatrix T = make_qmatrix(layout.coordinate_count(), layout.coordinate_count());
  for (const MultiIndex& mu_new : layout.indices()) {
    // expand prod_i (sum_j A_{ji} z_j)^{mu_new_i}
    std::map<MultiIndex, Rational> poly{{MultiIndex(n, 0), Rational(1)}};
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned rep = 0; rep < mu_new[i - 1]; ++rep) {
        std::map<MultiIndex, Rational> next;
        for (const auto& [nu, cnu] : poly)
          for (unsigned jv = 1; jv <= n; ++jv) {
            Rational a = A.at(jv - 1, i - 1);
            if (a == 0) continue;
            next[bump(nu, jv)] += cnu * a;
          }
        poly = std::move(next);
      }
    for (unsigned k_new = 1; k_new <= m; ++k_new) {
      std::size_t col = layout.coordinate(mu_new, k_new);
      for (const auto& [nu, cnu] : poly) {
        if (cnu == 0) continue;
        if (m == n) {
          for (unsigned k = 1; k <= m; ++k) {
            Rational a = A.at(k - 1, k_new - 1);
            if (a == 0) continue;
            T.at(layout.coordinate(nu, k), col) += cnu * a;
          }
        } else {
          T.at(layout.coordinate(nu, k_new), col) += cnu;
        }
      }
    }
  }
  return T;
}

// Count solved equations per class: bring the transformed symbol matrix to
// echelon form with its columns sorted class-descending, then tally the
// pivot classes.
inline std::vector<std::size_t> beta_counts(const QMatrix& symbol, unsigned n, unsigned m,
                                            unsigned q) {
  SymbolLayout layout(n, m, q);
  std::vector<std::size_t> col_order;
  for (unsigned cls = n; cls >= 1; --cls) {
    for (std::size_t s = 0; s < layout.indices().size(); ++s)
      if (index_class(layout.indices()[s]) == cls)
        for (unsigned k = 1; k <= m; ++k) col_order.push_back(s * m + (k - 1));
    if (cls == 1) break;
  }
  QMatrix reordered = make_qmatrix(symbol.rows(), symbol.cols());
  for (std::size_t r = 0; r < symbol.rows(); ++r)
    for (std::size_t c = 0; c < col_order.size(); ++c)
      reordered.at(r, c) = symbol.at(r, col_order[c]);
  auto ech = reordered.rref(PivotStrategy::FirstNonzero);
  std::vector<std::size_t> beta(n, 0);
  for (std::size_t p : ech.pivots) {
    const MultiIndex& mu = layout.indices()[col_order[p] / m];
    beta[index_class(mu) - 1] += 1;
  }
  return beta;
}

}  // namespace detail

struct InvolutivityReport {
  std::vector<std::size_t> beta;   // solved equations per class, 1..n
  std::vector<std::size_t> alpha;  // characters per class, 1..n
  std::size_t dim_symbol = 0;
  std::size_t dim_prolonged_symbol = 0;
  bool involutive = false;
  unsigned formally_integrable_up_to = 0;  // projections verified surjective this far
  std::vector<IntegrabilityRow> dim_table;
  DeltaSpot cross_check;  // delta homology at wedge degree 1, must vanish when involutive
};

// Cartan's test: maximize the per-class solved counts over a few random
// linear coordinate changes (quasi-regularity is generic, not checkable
// directly), form the characters, and compare sum i*alpha^i against the
// exact dimension of the prolonged symbol.
inline InvolutivityReport involutivity(const LinearJetSystem& sys, std::uint64_t seed = 0,
                                       unsigned fi_bound = 2) {
  unsigned n = sys.base_dim(), m = sys.fiber_dim(), q = sys.order();
  if (q == 0) throw InputError("involutivity analysis needs order at least 1");

  InvolutivityReport rep;
  IntegrabilityReport fi = formal_integrability_report(sys, fi_bound, seed);
  rep.dim_table = fi.table;
  rep.formally_integrable_up_to = 0;
  for (const auto& row : fi.table) {
    if (!row.surjective) break;
    ++rep.formally_integrable_up_to;
  }

  LinearJetSystem up = sys.prolong_once();
  FMatrix S = sys.symbol_matrix();
  FMatrix S1 = up.symbol_matrix();
  std::size_t rank_S = S.rank();
  std::vector<std::pair<const FMatrix*, std::size_t>> family{{&S, rank_S},
                                                             {&S1, S1.rank()}};
  GenericPoint gen(seed);
  std::vector<Rational> point = gen.find_rank_preserving_all(family, n);
  QMatrix S_at = evaluate_matrix(S, point);

  rep.dim_symbol = symbol_dim(sys);
  rep.dim_prolonged_symbol = symbol_dim(up);

  // identity coordinates first, then a few random changes; keep the best
  std::mt19937_64 rng(seed + 17);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::vector<std::size_t> best;
  std::size_t best_weight = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    QMatrix A = QMatrix::identity(n, Rational(0), Rational(1));
    if (attempt > 0) {
      do {
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j) A.at(i, j) = Rational(entry(rng));
      } while (!A.inverse(Rational(1)).has_value());
    }
    QMatrix transformed = S_at * detail::symbol_change_matrix(n, m, q, A);
    std::vector<std::size_t> beta = detail::beta_counts(transformed, n, m, q);
    std::size_t weight = 0;
    for (unsigned i = 1; i <= n; ++i) weight += i * beta[i - 1];
    if (best.empty() || weight > best_weight) {
      best = beta;
      best_weight = weight;
    }
  }
  rep.beta = best;

  rep.alpha.assign(n, 0);
  std::size_t predicted = 0;
  for (unsigned i = 1; i <= n; ++i) {
    std::size_t full = static_cast<std::size_t>(m) *
                       binomial(q - 1 + n - i, n - i).convert_to<std::size_t>();
    if (rep.beta[i - 1] > full) throw MathError("class count exceeds its bound");
    rep.alpha[i - 1] = full - rep.beta[i - 1];
    predicted += i * rep.alpha[i - 1];
  }
  rep.involutive = (rep.dim_prolonged_symbol == predicted);

  // independent route: an involutive symbol has exact delta sequences; test
  // the first interior spot and refuse to report contradictory answers
  SymbolSpace g_here = symbol_space_at(sys, point);
  SymbolSpace g_above = symbol_space_at(up, point);
  std::optional<SymbolSpace> g_below;
  if (q >= 1) g_below = full_symbol_space(n, m, q - 1);
  rep.cross_check = delta_cohomology_at(g_above, g_here, g_below, 1);
  if (rep.involutive && rep.cross_check.homology_dim != 0)
    throw MathError("involutivity tests disagree: Cartan count passes but the delta "
                    "sequence is not exact");
  return rep;
}

}  // namespace liejets
