#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liejets/expr.hpp"
#include "liejets/jet/multi_index.hpp"
#include "liejets/rational_function.hpp"

namespace liejets {

// A section of the order-q jet bundle: one rational function per jet
// coordinate f^k_mu, |mu| <= q. Holonomic sections are the honest jets
// j_q(f); general sections may decouple a derivative coordinate from the
// derivative of the coordinate below it.
class JetSection {
 public:
  JetSection(unsigned n, unsigned m, unsigned q)
      : layout_(n, m, q),
        comps_(layout_.coordinate_count(), RationalFunction::constant(n, Rational(0))) {}

  unsigned base_dim() const { return layout_.base_dim(); }
  unsigned fiber_dim() const { return layout_.fiber_dim(); }
  unsigned order() const { return layout_.order(); }
  const JetLayout& layout() const { return layout_; }

  const RationalFunction& at(unsigned k, const MultiIndex& mu) const {
    return comps_[layout_.coordinate(mu, k)];
  }
  void set(unsigned k, const MultiIndex& mu, const RationalFunction& v) {
    comps_[layout_.coordinate(mu, k)] = v;
  }

  // components of the underlying vector field / fiber point
  std::vector<RationalFunction> base_components() const {
    MultiIndex zero(base_dim(), 0);
    std::vector<RationalFunction> out;
    for (unsigned k = 1; k <= fiber_dim(); ++k) out.push_back(at(k, zero));
    return out;
  }

  // the jet of an actual map: every coordinate is the matching derivative
  static JetSection jet_of(const std::vector<RationalFunction>& f, unsigned n, unsigned q) {
    JetSection out(n, static_cast<unsigned>(f.size()), q);
    for (unsigned k = 1; k <= out.fiber_dim(); ++k)
      for (const MultiIndex& mu : out.layout_.indices()) {
        RationalFunction v = f[k - 1];
        for (unsigned i = 1; i <= n; ++i)
          for (unsigned rep = 0; rep < mu[i - 1]; ++rep) v = v.derivative(i);
        out.set(k, mu, v);
      }
    return out;
  }

  bool is_holonomic() const {
    for (unsigned k = 1; k <= fiber_dim(); ++k)
      for (const MultiIndex& mu : layout_.indices()) {
        if (index_length(mu) + 1 > order()) continue;
        for (unsigned i = 1; i <= base_dim(); ++i)
          if (!(at(k, bump(mu, i)) == at(k, mu).derivative(i))) return false;
      }
    return true;
  }

  JetSection project(unsigned q_low) const {
    if (q_low > order()) throw InputError("projection cannot raise the order");
    JetSection out(base_dim(), fiber_dim(), q_low);
    for (unsigned k = 1; k <= fiber_dim(); ++k)
      for (const MultiIndex& mu : out.layout_.indices()) out.set(k, mu, at(k, mu));
    return out;
  }

  // lift to a higher order by declaring the new top coordinates zero; any
  // construction advertised as lift-independent is tested against these
  JetSection lift_zero(unsigned q_high) const {
    if (q_high < order()) throw InputError("lift cannot lower the order");
    JetSection out(base_dim(), fiber_dim(), q_high);
    for (unsigned k = 1; k <= fiber_dim(); ++k)
      for (const MultiIndex& mu : layout_.indices()) out.set(k, mu, at(k, mu));
    return out;
  }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  JetSection& operator+=(const JetSection& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] = comps_[i] + o.comps_[i];
    return *this;
  }
  friend JetSection operator+(JetSection a, const JetSection& b) { return a += b; }
  friend JetSection operator-(const JetSection& a, const JetSection& b) {
    return a + b * Rational(-1);
  }
  friend JetSection operator*(const JetSection& a, const Rational& s) {
    JetSection out = a;
    RationalFunction f = RationalFunction::constant(a.base_dim(), s);
    for (auto& c : out.comps_) c = c * f;
    return out;
  }
  // multiply by a function of the base variables
  friend JetSection operator*(const RationalFunction& f, const JetSection& a) {
    JetSection out = a;
    for (auto& c : out.comps_) c = f * c;
    return out;
  }
  friend bool operator==(const JetSection& a, const JetSection& b) {
    a.require_same_shape(b);
    return a.comps_ == b.comps_;
  }

  nlohmann::json to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (unsigned k = 1; k <= fiber_dim(); ++k)
      for (const MultiIndex& mu : layout_.indices())
        if (!at(k, mu).is_zero())
          comps.push_back({{"k", k}, {"mu", mu}, {"expression", format(at(k, mu))}});
    return {{"n", base_dim()}, {"m", fiber_dim()}, {"q", order()}, {"components", comps}};
  }

  static JetSection from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("q"))
      throw InputError("jet section file needs n, m, q");
    unsigned n = read_dim(j, "n"), m = read_dim(j, "m"), q = read_order(j, "q");
    JetSection out(n, m, q);
    if (j.contains("components")) {
      if (!j["components"].is_array()) throw InputError("components must be a list");
      for (const auto& e : j["components"]) {
        auto [k, mu] = read_target(e, n, m);
        if (index_length(mu) > q) throw InputError("component index exceeds the order");
        if (!e.contains("expression") || !e["expression"].is_string())
          throw InputError("component needs an expression string");
        out.set(k, mu, parse_expression(e["expression"].get<std::string>(), n));
      }
    }
    return out;
  }

  static JetSection load_file(const std::string& path) {
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

  static unsigned read_dim(const nlohmann::json& j, const char* key) {
    if (!j[key].is_number_unsigned() || j[key].get<unsigned>() == 0)
      throw InputError(std::string(key) + " must be a positive integer");
    return j[key].get<unsigned>();
  }
  static unsigned read_order(const nlohmann::json& j, const char* key) {
    if (!j[key].is_number_unsigned())
      throw InputError(std::string(key) + " must be a nonnegative integer");
    return j[key].get<unsigned>();
  }
  static std::pair<unsigned, MultiIndex> read_target(const nlohmann::json& e, unsigned n,
                                                     unsigned m) {
    if (!e.is_object() || !e.contains("k") || !e.contains("mu"))
      throw InputError("jet term needs k and mu");
    if (!e["k"].is_number_unsigned() || e["k"].get<unsigned>() == 0 || e["k"].get<unsigned>() > m)
      throw InputError("component index k out of range");
    if (!e["mu"].is_array() || e["mu"].size() != n)
      throw InputError("mu must list one exponent per base variable");
    MultiIndex mu;
    for (const auto& x : e["mu"]) {
      if (!x.is_number_unsigned()) throw InputError("mu entries must be nonnegative integers");
      mu.push_back(x.get<unsigned>());
    }
    return {e["k"].get<unsigned>(), mu};
  }

 private:
  void require_same_shape(const JetSection& o) const {
    if (base_dim() != o.base_dim() || fiber_dim() != o.fiber_dim() || order() != o.order())
      throw InputError("jet sections have different shapes");
  }

  JetLayout layout_;
  std::vector<RationalFunction> comps_;
};

}  // namespace liejets
