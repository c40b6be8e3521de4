#pragma once
#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace dybe {

// Exponent vector of a monomial; all monomials of one Poly share nvars.
struct Mono {
  std::vector<int> e;

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
};

// Graded-lexicographic order: total degree first, then exponents of the
// earlier variables weigh more.  Used both as the map order and to pick
// leading terms, so "monic" is unambiguous everywhere.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

inline bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, MonoLess>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);  // x_{i+1}

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  int total_degree() const;    // -1 for the zero polynomial
  int degree_in(int var) const;

  const Mono& leading_mono() const;  // max under graded-lex
  const Rat& leading_coeff() const;

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rat& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rat eval(const std::vector<Rat>& point) const;
  // substitute x_i -> sign_i * x_i + shift_i (sign_i in {+1,-1})
  Poly subst_affine(const std::vector<int>& signs, const std::vector<Rat>& shifts) const;
  Poly shifted(const std::vector<Rat>& shifts) const;

  // exact division; throws Error if the division leaves a remainder
  Poly divexact(const Poly& d) const;

  static Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)

  std::string str(const std::string& var_prefix) const;

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace dybe
