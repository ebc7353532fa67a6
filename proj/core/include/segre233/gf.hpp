#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace segre233 {

// Field element in canonical encoding. For GF(p^k) the residue
// sum_i c_i x^i (0 <= c_i < p) is encoded as the integer sum_i c_i p^i,
// so every element lives in [0, q). For prime fields this is just the
// least nonnegative residue.
using Fel = std::uint8_t;

bool is_prime(int n);

/* GF(p^k), q = p^k <= 256.
 *
 * Prime fields compute with plain modular arithmetic. Extension fields are
 * built once per (p, k): multiplication and inversion go through log/antilog
 * tables over a fixed irreducible modulus, addition through a q*q table.
 * Instances are immutable after construction; copies share the tables and
 * are cheap, so a Gf can be passed by value or const reference freely across
 * threads.
 *
 * The modulus is chosen deterministically: the lexicographically smallest
 * monic irreducible of degree k over GF(p), comparing the coefficient tuple
 * (c_0, c_1, ..., c_{k-1}) low degree first. GF(4) gets x^2 + x + 1.
 */
class Gf {
 public:
  // Throws std::invalid_argument unless p is prime, k >= 1 and p^k <= 256.
  Gf(int p, int k);

  // Factors q as p^k. Throws std::invalid_argument if q is not a prime
  // power in [2, 256].
  static Gf from_order(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;  // throws std::domain_error on 0
  Fel pow(Fel a, long e) const;

  // A fixed generator of the multiplicative group.
  Fel generator() const { return gen_; }

  // All q elements in encoding order: 0, 1, 2, ..., q-1.
  std::vector<Fel> elements() const;

  // Modulus coefficients, low degree first, size k+1, leading 1.
  // Empty for prime fields (no modulus involved).
  const std::vector<int>& modulus() const { return modulus_; }
  // Human-readable modulus, e.g. "x^2+x+1". Empty string for prime fields.
  std::string modulus_string() const;

  bool operator==(const Gf& o) const {
    return o.p_ == p_ && o.k_ == k_ && o.modulus_ == modulus_;
  }

 private:
  struct Tables {
    std::vector<Fel> exp;   // size 2(q-1), exp[i] = g^i
    std::vector<Fel> log;   // size q, log[exp[i]] = i for i < q-1
    std::vector<Fel> add;   // size q*q
    std::vector<Fel> neg;   // size q
    std::vector<Fel> inv;   // size q (inv[0] unused)
  };

  int p_ = 0, k_ = 0, q_ = 0;
  Fel gen_ = 0;
  std::vector<int> modulus_;           // empty when k == 1
  std::shared_ptr<const Tables> t_;    // null for prime fields (k == 1)

  void build_extension_tables();
  void build_prime_tables();
  std::vector<Fel> prime_inv_;         // size p, k == 1 only
};

inline Fel Gf::add(Fel a, Fel b) const {
  if (k_ == 1) {
    int s = int(a) + int(b);
    return Fel(s >= q_ ? s - q_ : s);
  }
  return t_->add[std::size_t(a) * q_ + b];
}

inline Fel Gf::neg(Fel a) const {
  if (k_ == 1) return Fel(a == 0 ? 0 : q_ - a);
  return t_->neg[a];
}

inline Fel Gf::sub(Fel a, Fel b) const { return add(a, neg(b)); }

inline Fel Gf::mul(Fel a, Fel b) const {
  if (k_ == 1) return Fel((unsigned(a) * unsigned(b)) % unsigned(q_));
  if (a == 0 || b == 0) return 0;
  return t_->exp[std::size_t(t_->log[a]) + t_->log[b]];
}

inline Fel Gf::inv(Fel a) const {
  if (a == 0) throw std::domain_error("Gf::inv: 0 is not invertible");
  if (k_ == 1) return prime_inv_[a];
  return t_->exp[std::size_t(q_ - 1) - t_->log[a]];
}

}  // namespace segre233
