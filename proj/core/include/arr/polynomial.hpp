#pragma once
#include <string>
#include <vector>

#include "arr/linalg.hpp"

namespace arr {

// Dense univariate polynomial over Q, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> ascending) : c_(ascending) { normalize(); }
  explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { normalize(); }
  static Poly constant(const Rat& v);
  static Poly variable();  // t

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int k) const;  // 0 outside the stored range
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  Rat eval(const Rat& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly scaled(const Rat& f) const;
  Poly derivative() const;

  // Euclidean division; the divisor must be nonzero.
  struct PolyDivMod divmod(const Poly& divisor) const;

  // Content-free integer form with positive leading coefficient.
  Poly primitive_integer() const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

struct PolyDivMod {
  Poly quot, rem;
};

Poly poly_gcd(Poly a, Poly b);       // monic gcd
Poly squarefree_part(const Poly& p); // p / gcd(p, p'), monic

// All rational roots of p (each listed once, no multiplicity). Exact:
// candidate p/q roots run over divisors of the primitive integer form.
std::vector<Rat> rational_roots(const Poly& p);

// Deflates every rational linear factor out of p. Returns the roots with
// multiplicity and the (rational-root-free) remaining cofactor.
struct RootSplit {
  std::vector<Rat> roots;  // sorted ascending, repeated per multiplicity
  Poly cofactor;           // primitive integer form, no rational roots
};
RootSplit split_rational_roots(const Poly& p);

// Determinant of a square polynomial matrix (Laplace DP over column subsets).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace arr
