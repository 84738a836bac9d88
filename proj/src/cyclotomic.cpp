#include "ncgeo/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<long> distinct_prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Dense little-endian integer polynomials, used only for cyclotomic polynomials.
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, divisor monic.
IPoly idiv(IPoly num, const IPoly& den) {
  IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size() && !num.empty()) {
    Int c = num.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    itrim(num);
  }
  return q;
}

const IPoly& cyclotomic_poly(long n) {
  static std::map<long, IPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  for (long d : divisors(n)) {
    if (cache.count(d)) continue;
    IPoly num(static_cast<std::size_t>(d) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    for (long e : divisors(d)) {
      if (e == d) continue;
      num = idiv(std::move(num), cache.at(e));
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

// Dense rational polynomials.
using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const std::map<long, Rat>& m, long min_size) {
  long deg = -1;
  for (const auto& [e, c] : m) deg = std::max(deg, e);
  QPoly p(static_cast<std::size_t>(std::max(deg + 1, min_size)), Rat(0));
  for (const auto& [e, c] : m) p[static_cast<std::size_t>(e)] = c;
  qtrim(p);
  return p;
}

std::map<long, Rat> to_map(const QPoly& p) {
  std::map<long, Rat> m;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) m.emplace(static_cast<long>(i), p[i]);
  return m;
}

// Remainder of p modulo Phi_n.
QPoly qmod_phi(QPoly p, long n) {
  const IPoly& phi = cyclotomic_poly(n);
  while (p.size() >= phi.size()) {
    Rat c = p.back();
    std::size_t shift = p.size() - phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * Rat(phi[i]);
    qtrim(p);
  }
  return p;
}

// q, r with a = q*b + r, b nonzero.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  Rat lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qtrim(a);
  }
  qtrim(q);
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p : distinct_prime_factors(n)) r -= r / p;
  return r;
}

Scalar Scalar::from_rational(const Rat& q) {
  Scalar s;
  if (q != 0) s.coeffs_.emplace(0, q);
  return s;
}

Scalar Scalar::root_of_unity(const Int& p, const Int& q) {
  if (q == 0) fail(ErrorKind::DivisionByZero, "root_of_unity: zero order");
  Rat turns(p, q);
  return from_turns(turns);
}

Scalar Scalar::from_turns(const Rat& turns) {
  Rat t = rat_mod_one(turns);
  long den = to_long(denominator(t));
  long num = to_long(numerator(t));
  std::map<long, Rat> m;
  m.emplace(num % den, Rat(1));
  return Scalar(den, std::move(m));
}

Scalar Scalar::from_complex(std::complex<double> z) {
  Scalar s;
  s.flt_ = true;
  s.fval_ = z;
  return s;
}

bool Scalar::is_zero() const {
  if (flt_) return std::abs(fval_) <= kTolerance;
  return coeffs_.empty();
}

bool Scalar::is_rational() const {
  if (flt_) return std::abs(fval_.imag()) <= kTolerance;
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rat Scalar::as_rational() const {
  if (flt_) fail(ErrorKind::DivisionByZero, "as_rational on float scalar");
  if (coeffs_.empty()) return Rat(0);
  if (!is_rational()) fail(ErrorKind::DivisionByZero, "scalar is not rational: " + to_string());
  return coeffs_.begin()->second;
}

std::complex<double> Scalar::to_complex() const {
  if (flt_) return fval_;
  std::complex<double> z{0.0, 0.0};
  for (const auto& [e, c] : coeffs_) {
    double arg = 2.0 * kPi * static_cast<double>(e) / static_cast<double>(n_);
    z += static_cast<double>(c) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

void Scalar::canonicalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
  if (coeffs_.empty()) {
    n_ = 1;
    return;
  }
  // Reduce exponents into [0, n) and then modulo Phi_n.
  {
    std::map<long, Rat> folded;
    bool needs_fold = false;
    for (const auto& [e, c] : coeffs_)
      if (e < 0 || e >= n_) needs_fold = true;
    if (needs_fold) {
      for (const auto& [e, c] : coeffs_) {
        long r = ((e % n_) + n_) % n_;
        folded[r] += c;
      }
      coeffs_ = std::move(folded);
    }
  }
  long phi = euler_phi(n_);
  bool reduced = true;
  for (const auto& [e, c] : coeffs_)
    if (e >= phi) reduced = false;
  if (!reduced) coeffs_ = to_map(qmod_phi(to_qpoly(coeffs_, 0), n_));
  if (coeffs_.empty()) {
    n_ = 1;
    return;
  }
  fold_two_mod_four();
  // Greedily drop primes from the conductor while the value lives in the
  // smaller cyclotomic field; the set of admissible conductors is closed
  // under gcd, so this reaches the unique minimum.
  bool shrunk = true;
  while (shrunk && n_ > 1 && !coeffs_.empty()) {
    shrunk = false;
    for (long p : distinct_prime_factors(n_)) {
      long m = n_ / p;
      if (fixed_by_subgroup(m)) {
        rebase(m);
        fold_two_mod_four();
        shrunk = true;
        break;
      }
    }
  }
  if (coeffs_.empty()) n_ = 1;
}

// zeta_{2m}^j = (-1)^j zeta_m^{j(m+1)/2 mod m} for odd m.
void Scalar::fold_two_mod_four() {
  if (n_ % 4 != 2) return;
  long m = n_ / 2;
  std::map<long, Rat> out;
  for (const auto& [e, c] : coeffs_) {
    long ne = (e * ((m + 1) / 2)) % m;
    out[ne] += (e % 2 == 0) ? c : -c;
  }
  n_ = m;
  coeffs_ = to_map(qmod_phi(to_qpoly(out, 0), std::max(n_, 1L)));
}

bool Scalar::fixed_by_subgroup(long m) const {
  // Fixed by every Galois automorphism sigma_a with a = 1 (mod m)?
  QPoly self = to_qpoly(coeffs_, 0);
  for (long a = 1 + m; a < n_; a += m) {
    if (std::gcd(a, n_) != 1) continue;
    std::map<long, Rat> img;
    for (const auto& [e, c] : coeffs_) img[(e * a) % n_] += c;
    if (qmod_phi(to_qpoly(img, 0), n_) != self) return false;
  }
  return true;
}

void Scalar::rebase(long m) {
  // Rewrite in powers of zeta_m = zeta_n^{n/m} by exact linear solve.
  long k = n_ / m;
  long phin = euler_phi(n_);
  long phim = euler_phi(m);
  // Columns: zeta_n^{k*j} mod Phi_n, j = 0..phim-1. Augmented with the value.
  std::vector<std::vector<Rat>> mat(static_cast<std::size_t>(phin),
                                    std::vector<Rat>(static_cast<std::size_t>(phim) + 1, Rat(0)));
  for (long j = 0; j < phim; ++j) {
    std::map<long, Rat> pw;
    pw.emplace(k * j, Rat(1));
    QPoly col = qmod_phi(to_qpoly(pw, 0), n_);
    for (std::size_t r = 0; r < col.size(); ++r) mat[r][static_cast<std::size_t>(j)] = col[r];
  }
  for (const auto& [e, c] : coeffs_) mat[static_cast<std::size_t>(e)].back() = c;

  std::vector<Rat> sol(static_cast<std::size_t>(phim), Rat(0));
  std::size_t row = 0;
  std::vector<long> pivot_col_of_row;
  for (long col = 0; col < phim && row < mat.size(); ++col) {
    std::size_t piv = row;
    while (piv < mat.size() && mat[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[row], mat[piv]);
    Rat lead = mat[row][static_cast<std::size_t>(col)];
    for (auto& v : mat[row]) v /= lead;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == row) continue;
      Rat f = mat[r][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (std::size_t cidx = 0; cidx < mat[r].size(); ++cidx) mat[r][cidx] -= f * mat[row][cidx];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
    sol[static_cast<std::size_t>(pivot_col_of_row[r])] = mat[r].back();

  n_ = m;
  coeffs_.clear();
  for (long j = 0; j < phim; ++j)
    if (sol[static_cast<std::size_t>(j)] != 0) coeffs_.emplace(j, sol[static_cast<std::size_t>(j)]);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (flt_ || o.flt_) return from_complex(to_complex() + o.to_complex());
  long n = std::lcm(n_, o.n_);
  std::map<long, Rat> m;
  for (const auto& [e, c] : coeffs_) m[e * (n / n_)] += c;
  for (const auto& [e, c] : o.coeffs_) m[e * (n / o.n_)] += c;
  return Scalar(n, std::move(m));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (flt_) return from_complex(-fval_);
  Scalar s = *this;
  for (auto& [e, c] : s.coeffs_) c = -c;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (flt_ || o.flt_) return from_complex(to_complex() * o.to_complex());
  if (coeffs_.empty() || o.coeffs_.empty()) return Scalar();
  long n = std::lcm(n_, o.n_);
  std::map<long, Rat> m;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) m[(e1 * (n / n_) + e2 * (n / o.n_)) % n] += c1 * c2;
  return Scalar(n, std::move(m));
}

Scalar Scalar::conj() const {
  if (flt_) return from_complex(std::conj(fval_));
  if (n_ == 1) return *this;
  std::map<long, Rat> m;
  for (const auto& [e, c] : coeffs_) m[(n_ - e) % n_] += c;
  return Scalar(n_, std::move(m));
}

Scalar Scalar::inv() const {
  if (flt_) {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero scalar");
    return from_complex(1.0 / fval_);
  }
  if (coeffs_.empty()) fail(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (is_rational()) return from_rational(Rat(1) / coeffs_.begin()->second);
  // Extended Euclid against Phi_n; Phi_n is irreducible over Q, so the gcd
  // with any nonzero residue is a nonzero constant.
  const IPoly& phi_i = cyclotomic_poly(n_);
  QPoly phi(phi_i.size());
  for (std::size_t i = 0; i < phi_i.size(); ++i) phi[i] = Rat(phi_i[i]);
  QPoly a = to_qpoly(coeffs_, 0);
  QPoly prev_r = phi, cur_r = a;
  QPoly prev_s = {}, cur_s = {Rat(1)};
  while (!cur_r.empty()) {
    auto [q, rem] = qdivmod(prev_r, cur_r);
    QPoly next_s = qsub(prev_s, qmul(q, cur_s));
    prev_r = std::move(cur_r);
    cur_r = std::move(rem);
    prev_s = std::move(cur_s);
    cur_s = std::move(next_s);
  }
  // prev_r is a nonzero constant, prev_s * a = prev_r (mod phi).
  Rat c = prev_r.at(0);
  std::map<long, Rat> m;
  for (std::size_t i = 0; i < prev_s.size(); ++i)
    if (prev_s[i] != 0) m.emplace(static_cast<long>(i), prev_s[i] / c);
  return Scalar(n_, std::move(m));
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Scalar r = one(), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (flt_ || o.flt_) {
    std::complex<double> d = to_complex() - o.to_complex();
    return std::abs(d) <= kTolerance;
  }
  return n_ == o.n_ && coeffs_ == o.coeffs_;
}

std::string Scalar::to_string() const {
  if (flt_) {
    std::ostringstream os;
    os.precision(17);
    if (std::abs(fval_.imag()) <= kTolerance) {
      os << fval_.real();
    } else {
      os << fval_.real() << (fval_.imag() < 0 ? " - " : " + ");
      os << std::abs(fval_.imag()) << "*i";
    }
    return os.str();
  }
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::string root;
    if (e != 0) {
      long g = std::gcd(e, n_);
      long p = e / g, q = n_ / g;
      root = (q == 4 && p == 1) ? "i" : "w(" + std::to_string(p) + "/" + std::to_string(q) + ")";
    }
    Rat ac = c < 0 ? Rat(-c) : c;
    std::string body;
    if (root.empty()) {
      body = rat_to_string(ac);
    } else if (ac == 1) {
      body = root;
    } else {
      body = rat_to_string(ac) + "*" + root;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace ncgeo
