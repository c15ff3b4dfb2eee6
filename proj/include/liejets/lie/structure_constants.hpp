#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liejets/matrix.hpp"

namespace liejets {

// Antisymmetric bracket table c^tau_{rho sigma} on a p-dimensional space.
// This type makes no Lie-algebra promise by itself: the Jacobi identity is
// a property to query, so candidate brackets arising mid-deformation live
// here too. All public indices are 1-based, matching the usual tables.
class StructureConstants {
 public:
  explicit StructureConstants(unsigned p)
      : p_(p), c_(static_cast<std::size_t>(p) * p * p, Rational(0)) {
    if (p == 0) throw InputError("dimension must be positive");
  }

  unsigned dim() const { return p_; }

  const Rational& at(unsigned tau, unsigned rho, unsigned sigma) const {
    return c_[index(tau, rho, sigma)];
  }

  void set(unsigned tau, unsigned rho, unsigned sigma, const Rational& v) {
    if (rho == sigma && v != 0) throw InputError("bracket of a vector with itself");
    c_[index(tau, rho, sigma)] = v;
    c_[index(tau, sigma, rho)] = -v;
  }

  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const {
    if (x.size() != p_ || y.size() != p_) throw InputError("vector dimension mismatch");
    std::vector<Rational> z(p_, Rational(0));
    for (unsigned tau = 1; tau <= p_; ++tau)
      for (unsigned rho = 1; rho <= p_; ++rho) {
        if (x[rho - 1] == 0) continue;
        for (unsigned sigma = 1; sigma <= p_; ++sigma)
          z[tau - 1] += at(tau, rho, sigma) * x[rho - 1] * y[sigma - 1];
      }
    return z;
  }

  std::vector<Rational> bracket_basis(unsigned rho, unsigned sigma) const {
    std::vector<Rational> z(p_);
    for (unsigned tau = 1; tau <= p_; ++tau) z[tau - 1] = at(tau, rho, sigma);
    return z;
  }

  // Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
  std::vector<Rational> jacobi_defect(unsigned i, unsigned j, unsigned k) const {
    std::vector<Rational> d(p_, Rational(0));
    auto add = [&](unsigned a, unsigned b, unsigned c) {
      std::vector<Rational> inner = bracket_basis(a, b);
      for (unsigned tau = 1; tau <= p_; ++tau)
        for (unsigned m = 1; m <= p_; ++m)
          d[tau - 1] += at(tau, m, c) * inner[m - 1];
    };
    add(i, j, k);
    add(j, k, i);
    add(k, i, j);
    return d;
  }

  struct JacobiWitness {
    unsigned i, j, k;
    std::vector<Rational> defect;
  };

  std::optional<JacobiWitness> jacobi_witness() const {
    for (unsigned i = 1; i <= p_; ++i)
      for (unsigned j = i + 1; j <= p_; ++j)
        for (unsigned k = j + 1; k <= p_; ++k) {
          std::vector<Rational> d = jacobi_defect(i, j, k);
          for (const Rational& v : d)
            if (v != 0) return JacobiWitness{i, j, k, d};
        }
    return std::nullopt;
  }

  bool jacobi_holds() const { return !jacobi_witness().has_value(); }

  void require_jacobi() const {
    if (auto w = jacobi_witness()) {
      throw MathError("Jacobi identity fails on basis triple (" + std::to_string(w->i) +
                      "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")");
    }
  }

  // New basis f_j = sum_i a_{ij} e_i; the returned table satisfies
  // a.cbar(X, Y) = c(aX, aY).
  StructureConstants change_basis(const QMatrix& a) const {
    if (a.rows() != p_ || a.cols() != p_) throw InputError("basis matrix has wrong shape");
    auto ainv = a.inverse(Rational(1));
    if (!ainv) throw InputError("basis matrix is singular");
    StructureConstants out(p_);
    for (unsigned i = 1; i <= p_; ++i)
      for (unsigned j = i + 1; j <= p_; ++j) {
        std::vector<Rational> fi(p_), fj(p_);
        for (unsigned r = 0; r < p_; ++r) {
          fi[r] = a.at(r, i - 1);
          fj[r] = a.at(r, j - 1);
        }
        std::vector<Rational> br = ainv->apply(bracket(fi, fj));
        for (unsigned tau = 1; tau <= p_; ++tau) out.set(tau, i, j, br[tau - 1]);
      }
    return out;
  }

  StructureConstants& operator+=(const StructureConstants& o) {
    check_dim(o);
    for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
    return *this;
  }

  friend StructureConstants operator+(StructureConstants a, const StructureConstants& b) {
    return a += b;
  }

  friend StructureConstants operator*(const StructureConstants& a, const Rational& s) {
    StructureConstants r = a;
    for (Rational& v : r.c_) v *= s;
    return r;
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  bool is_zero() const {
    for (const Rational& v : c_)
      if (v != 0) return false;
    return true;
  }

  static StructureConstants from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim"))
      throw InputError("structure-constants file needs a \"dim\" field");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<unsigned>() == 0)
      throw InputError("\"dim\" must be a positive integer");
    StructureConstants c(j["dim"].get<unsigned>());
    for (const auto& e : j.value("brackets", nlohmann::json::array())) {
      unsigned rho = field_index(e, "rho", c.p_);
      unsigned sigma = field_index(e, "sigma", c.p_);
      unsigned tau = field_index(e, "tau", c.p_);
      if (rho >= sigma)
        throw InputError("bracket entries must have rho < sigma");
      if (!e.contains("value") || !e["value"].is_string())
        throw InputError("bracket entry needs a string \"value\"");
      c.set(tau, rho, sigma, parse_rational(e["value"].get<std::string>()));
    }
    return c;
  }

  static StructureConstants load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return from_json(j);
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["dim"] = p_;
    out["brackets"] = nlohmann::json::array();
    for (unsigned rho = 1; rho <= p_; ++rho)
      for (unsigned sigma = rho + 1; sigma <= p_; ++sigma)
        for (unsigned tau = 1; tau <= p_; ++tau) {
          const Rational& v = at(tau, rho, sigma);
          if (v == 0) continue;
          out["brackets"].push_back({{"rho", rho},
                                     {"sigma", sigma},
                                     {"tau", tau},
                                     {"value", to_string(v)}});
        }
    return out;
  }

 private:
  std::size_t index(unsigned tau, unsigned rho, unsigned sigma) const {
    if (tau < 1 || tau > p_ || rho < 1 || rho > p_ || sigma < 1 || sigma > p_)
      throw InputError("bracket index out of range");
    return (static_cast<std::size_t>(tau - 1) * p_ + (rho - 1)) * p_ + (sigma - 1);
  }

  void check_dim(const StructureConstants& o) const {
    if (p_ != o.p_) throw InputError("dimension mismatch");
  }

  static unsigned field_index(const nlohmann::json& e, const char* name, unsigned p) {
    if (!e.contains(name) || !e[name].is_number_unsigned())
      throw InputError(std::string("bracket entry needs an index \"") + name + "\"");
    unsigned v = e[name].get<unsigned>();
    if (v < 1 || v > p) throw InputError(std::string("index \"") + name + "\" out of range");
    return v;
  }

  unsigned p_;
  std::vector<Rational> c_;
};

}  // namespace liejets
