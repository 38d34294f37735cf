#include "arr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace arr {

namespace {
const Rat kZero(0);
}

Poly Poly::constant(const Rat& v) {
  Poly p;
  if (v != 0) p.c_.push_back(v);
  return p;
}

Poly Poly::variable() {
  Poly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int k) const {
  if (k < 0 || k >= int(c_.size())) return kZero;
  return c_[k];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int k = int(c_.size()) - 1; k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& f) const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= f;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(long(i)) * c_[i];
  return Poly(std::move(r));
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> rem(c_);
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rat> quot(degree() - dd + 1, Rat(0));
  for (int k = degree(); k >= dd; --k) {
    Rat f = rem[k] / divisor.c_.back();
    if (f == 0) continue;
    quot[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::primitive_integer() const {
  if (is_zero()) return *this;
  Int den_lcm = 1;
  for (const auto& x : c_) {
    Int d = x.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Int num_gcd = 0;
  std::vector<Rat> r(c_);
  for (auto& x : r) {
    x *= Rat(den_lcm);
    num_gcd = gcd(num_gcd, Int(x.get_num()));
  }
  if (num_gcd != 0)
    for (auto& x : r) x /= Rat(num_gcd);
  if (r.back() < 0)
    for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    const bool first = s.empty();
    if (a > 0 && !first) s += " + ";
    if (a < 0) s += first ? "-" : " - ";
    Rat mag = abs(a);
    if (mag != 1 || k == 0) s += rat_str(mag);
    if (k > 0) {
      if (mag != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p.is_zero() ? p : p.scaled(1 / p.leading());
  Poly g = poly_gcd(p, p.derivative());
  Poly q = p.divmod(g).quot;
  return q.scaled(1 / q.leading());
}

namespace {

std::vector<Int> divisors_of(Int v) {
  v = abs(v);
  std::vector<Int> ds;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      ds.push_back(d);
      if (d * d != v) ds.push_back(v / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.is_zero() || p.degree() == 0) return roots;
  Poly q = p.primitive_integer();
  // strip powers of t
  int low = 0;
  while (q.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    std::vector<Rat> shifted(q.coeffs().begin() + low, q.coeffs().end());
    q = Poly(std::move(shifted));
  }
  if (q.degree() >= 1) {
    Int a0 = q.coeff(0).get_num();
    Int al = q.leading().get_num();
    for (const Int& pn : divisors_of(a0)) {
      for (const Int& qd : divisors_of(al)) {
        for (int s : {1, -1}) {
          Rat cand(s * pn, qd);
          cand.canonicalize();
          if (q.eval(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RootSplit split_rational_roots(const Poly& p) {
  RootSplit out;
  if (p.is_zero()) {
    out.cofactor = p;
    return out;
  }
  Poly q = p.primitive_integer();
  for (const Rat& r : rational_roots(q)) {
    Poly lin({-r, Rat(1)});
    for (;;) {
      auto dm = q.divmod(lin);
      if (!dm.rem.is_zero()) break;
      out.roots.push_back(r);
      q = dm.quot;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.cofactor = q.primitive_integer();
  return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const int n = int(m.size());
  for (const auto& row : m)
    if (int(row.size()) != n) throw std::invalid_argument("poly_det: not square");
  if (n == 0) return Poly::constant(Rat(1));
  // DP over column subsets: minor(row r, subset S) with |S| = r+1.
  std::vector<Poly> cur(size_t(1) << n);
  for (int j = 0; j < n; ++j) cur[size_t(1) << j] = m[0][j];
  for (int r = 1; r < n; ++r) {
    std::vector<Poly> next(size_t(1) << n);
    for (size_t s = 0; s < next.size(); ++s) {
      if (__builtin_popcountll(s) != r + 1) continue;
      Poly acc;
      int idx = 0;
      for (int j = 0; j < n; ++j) {
        if (!(s & (size_t(1) << j))) continue;
        const Poly& sub = cur[s ^ (size_t(1) << j)];
        if (!sub.is_zero() && !m[r][j].is_zero()) {
          Poly term = sub * m[r][j];
          acc = ((r + idx) % 2 == 0) ? acc + term : acc - term;
        }
        ++idx;
      }
      next[s] = std::move(acc);
    }
    cur = std::move(next);
  }
  return cur[(size_t(1) << n) - 1];
}

}  // namespace arr
