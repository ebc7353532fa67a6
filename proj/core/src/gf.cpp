#include <segre233/gf.hpp>

#include <algorithm>

namespace segre233 {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Residue polynomials over GF(p) as int vectors, low degree first, trimmed.
using IPoly = std::vector<int>;

void trim(IPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

IPoly pmul(const IPoly& a, const IPoly& b, int p) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

int inv_mod(int a, int p) {
  int t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int qq = r / nr;
    t -= qq * nt; std::swap(t, nt);
    r -= qq * nr; std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

IPoly pmod(IPoly a, const IPoly& m, int p) {
  int il = inv_mod(m.back(), p);
  while (a.size() >= m.size() && !(a.size() == 1 && a[0] == 0)) {
    int c = a.back() * il % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
    if (a.size() < m.size()) break;
  }
  return a;
}

bool is_zero(const IPoly& a) { return a.size() == 1 && a[0] == 0; }

bool irreducible(const IPoly& f, int p) {
  int k = int(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      IPoly g(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) { g[i] = int(c % p); c /= p; }
      g[d] = 1;
      if (is_zero(pmod(f, g, p))) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree k, ordering candidates by the
// coefficient tuple (c_0, c_1, ..., c_{k-1}) compared left to right.
IPoly smallest_irreducible(int p, int k) {
  std::vector<int> c(k, 0);
  for (;;) {
    IPoly f(c.begin(), c.end());
    f.push_back(1);
    if (irreducible(f, p)) return f;
    // advance the tuple: last coordinate is least significant
    int i = k - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
    ++c[i];
  }
}

int encode(const IPoly& a, int p) {
  int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

IPoly decode(int v, int p, int k) {
  IPoly a(k, 0);
  for (int i = 0; i < k; ++i) { a[i] = v % p; v /= p; }
  trim(a);
  return a;
}

}  // namespace

Gf::Gf(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("Gf: p must be prime");
  if (k < 1) throw std::invalid_argument("Gf: k must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("Gf: p^k must be <= 256");
  }
  q_ = int(q);
  if (k_ == 1) {
    build_prime_tables();
  } else {
    modulus_ = smallest_irreducible(p_, k_);
    build_extension_tables();
  }
}

Gf Gf::from_order(int q) {
  if (q < 2 || q > 256) throw std::invalid_argument("Gf: order out of range");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p > q) throw std::invalid_argument("Gf: order is not a prime power");
  }
  int k = 0;
  int rest = q;
  while (rest % p == 0) { rest /= p; ++k; }
  if (rest != 1) throw std::invalid_argument("Gf: order is not a prime power");
  return Gf(p, k);
}

void Gf::build_prime_tables() {
  prime_inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) prime_inv_[a] = Fel(inv_mod(a, q_));
  for (int g = 1; g < q_; ++g) {
    int x = 1, ord = 0;
    do { x = x * g % q_; ++ord; } while (x != 1);
    if (ord == q_ - 1) { gen_ = Fel(g); break; }
  }
  if (q_ == 2) gen_ = 1;
}

void Gf::build_extension_tables() {
  auto t = std::make_shared<Tables>();
  auto mulp = [&](int a, int b) {
    return encode(pmod(pmul(decode(a, p_, k_), decode(b, p_, k_), p_), modulus_, p_), p_);
  };

  // find a multiplicative generator by direct order computation
  for (int g = 2; g < q_; ++g) {
    int x = 1, ord = 0;
    do { x = mulp(x, g); ++ord; } while (x != 1);
    if (ord == q_ - 1) { gen_ = Fel(g); break; }
  }

  t->exp.assign(2 * (q_ - 1), 0);
  t->log.assign(q_, 0);
  int x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    t->exp[i] = Fel(x);
    t->exp[i + q_ - 1] = Fel(x);
    t->log[x] = Fel(i);
    x = mulp(x, gen_);
  }

  t->add.assign(std::size_t(q_) * q_, 0);
  t->neg.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    IPoly da = decode(a, p_, k_);
    da.resize(k_, 0);
    IPoly na(k_, 0);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    t->neg[a] = Fel(encode(na, p_));
    for (int b = 0; b < q_; ++b) {
      IPoly db = decode(b, p_, k_);
      db.resize(k_, 0);
      IPoly s(k_, 0);
      for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      t->add[std::size_t(a) * q_ + b] = Fel(encode(s, p_));
    }
  }

  t->inv.assign(q_, 0);
  for (int a = 1; a < q_; ++a) t->inv[a] = t->exp[(q_ - 1) - t->log[a]];
  t_ = std::move(t);
}

Fel Gf::pow(Fel a, long e) const {
  if (e < 0) throw std::invalid_argument("Gf::pow: negative exponent");
  Fel r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<Fel> Gf::elements() const {
  std::vector<Fel> v(q_);
  for (int i = 0; i < q_; ++i) v[i] = Fel(i);
  return v;
}

std::string Gf::modulus_string() const {
  if (k_ == 1) return "";
  std::string s;
  for (int i = k_; i >= 0; --i) {
    int c = modulus_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace segre233
