#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "khom/errors.hpp"

namespace khom {

using Int = mpz_class;

// Element of Z[q, q^-1], stored as exponent -> coefficient with no zero
// coefficients (canonical form).
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
  }

  // c * q^e
  static LaurentPoly monomial(Int c, long e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly q_plus_q_inverse() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(-1, 1);
    return p;
  }

  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(long e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Scalar multiple c * p.
  friend LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
  }

  static LaurentPoly pow(const LaurentPoly& base, unsigned long n) {
    LaurentPoly r = constant(1);
    LaurentPoly b = base;
    while (n > 0) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  // q -> q^k (k may be negative; k = -1 is the mirror substitution).
  LaurentPoly substituted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Terms sorted by descending exponent; `q^1` prints as `q`, `q^0` is
  // omitted; unit coefficients are suppressed, e.g. "q^2 + 2 + q^-2".
  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      Int mag = abs(c);
      if (e == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) {
          out += mag.get_str();
          out += "*";
        }
        out += "q";
        if (e != 1) {
          out += "^";
          out += std::to_string(e);
        }
      }
    }
    return out;
  }

  // Array of [exponent, coefficient-as-string] pairs, descending exponent.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      arr.push_back({it->first, it->second.get_str()});
    return arr;
  }

  static LaurentPoly from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("laurent: expected a JSON array");
    LaurentPoly p;
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2)
        throw parse_error("laurent: each term must be [exponent, coefficient]");
      long e = pair[0].get<long>();
      std::string c = pair[1].is_string() ? pair[1].get<std::string>()
                                          : pair[1].dump();
      p.add_term(e, Int(c));
    }
    return p;
  }

 private:
  std::map<long, Int> terms_;
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
  return a + b;
}
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  return a * b;
}
inline LaurentPoly laurent_scale(const Int& c, const LaurentPoly& p) {
  return c * p;
}

}  // namespace khom
