#include "ncgeo/metric.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

// Determinant over the commutative subalgebra A_G by cofactor expansion.
AlgebraElement det_recursive(const PresentationPtr& pres,
                             const std::vector<std::vector<AlgebraElement>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  AlgebraElement sum = AlgebraElement::zero(pres);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<AlgebraElement>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<AlgebraElement> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    AlgebraElement term = m[0][j] * det_recursive(pres, minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

AlgebraElement certified_inverse(const AlgebraElement& x, const std::optional<AlgebraElement>& hint,
                                 const std::string& what) {
  if (hint) {
    AlgebraElement one = AlgebraElement::one(x.presentation());
    if (*hint * x != one || x * *hint != one)
      fail(ErrorKind::NotInvertible, what + ": supplied inverse fails verification");
    return *hint;
  }
  auto inv = x.inverse();
  if (!inv)
    fail(ErrorKind::NotInvertible,
         what + " is not a certified invertible element: " + x.to_string());
  return *inv;
}

Metric Metric::build(PresentationPtr pres, std::vector<std::vector<AlgebraElement>> entries,
                     std::optional<AlgebraElement> det_inverse, std::string descriptor) {
  Metric g;
  g.pres_ = pres;
  g.n_ = pres->rank();
  std::size_t n = static_cast<std::size_t>(g.n_);
  if (entries.size() != n) fail(ErrorKind::InvalidConfig, "metric must be an n x n matrix");
  for (const auto& row : entries)
    if (row.size() != n) fail(ErrorKind::InvalidConfig, "metric must be an n x n matrix");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (entries[i][j] != entries[j][i])
        fail(ErrorKind::NotSymmetric, "g_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                          " != g_" + std::to_string(j + 1) + std::to_string(i + 1) +
                                          ": " + entries[i][j].to_string() + " vs " +
                                          entries[j][i].to_string());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!commute_check(entries[i][j], entries[k][l]))
            fail(ErrorKind::NotStronglySigmaCompatible,
                 "entries g_" + std::to_string(i + 1) + std::to_string(j + 1) + " and g_" +
                     std::to_string(k + 1) + std::to_string(l + 1) + " do not commute: " +
                     entries[i][j].to_string() + ", " + entries[k][l].to_string());

  g.det_ = det_recursive(pres, entries);
  g.det_inv_ = certified_inverse(g.det_, det_inverse, "det(G)");

  // Adjugate by cofactors; entries commute, so the classical formulas hold.
  g.adj_.assign(n * n, AlgebraElement::zero(pres));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<AlgebraElement>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;  // adj_ij = (-1)^{i+j} det(minor of (j,i))
        std::vector<AlgebraElement> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(entries[r][c]);
        minor.push_back(std::move(row));
      }
      AlgebraElement cof =
          minor.empty() ? AlgebraElement::one(pres) : det_recursive(pres, minor);
      g.adj_[i * n + j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }

  g.g_.assign(n * n, AlgebraElement::zero(pres));
  g.ginv_.assign(n * n, AlgebraElement::zero(pres));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.g_[i * n + j] = entries[i][j];
      g.ginv_[i * n + j] = g.adj_[i * n + j] * g.det_inv_;
    }

  // G adj(G) = det(G) entrywise and the inverse identities.
  AlgebraElement one = AlgebraElement::one(pres);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      AlgebraElement s = AlgebraElement::zero(pres);
      AlgebraElement s2 = AlgebraElement::zero(pres);
      for (std::size_t j = 0; j < n; ++j) {
        s += g.ginv_[i * n + j] * g.g_[j * n + k];
        s2 += g.g_[i * n + j] * g.ginv_[j * n + k];
      }
      AlgebraElement expect = (i == k) ? one : AlgebraElement::zero(pres);
      if (s != expect || s2 != expect)
        fail(ErrorKind::NotInvertible, "metric inverse fails G^{-1} G = 1 at (" +
                                           std::to_string(i + 1) + "," + std::to_string(k + 1) + ")");
    }
  for (std::size_t a = 0; a < n * n; ++a)
    for (std::size_t b = 0; b < n * n; ++b)
      if (!commute_check(g.ginv_[a], g.g_[b]))
        fail(ErrorKind::NotStronglySigmaCompatible, "inverse entries do not commute with G");

  if (descriptor.empty()) {
    descriptor = "matrix([";
    for (std::size_t i = 0; i < n; ++i) {
      descriptor += (i ? ",[" : "[");
      for (std::size_t j = 0; j < n; ++j)
        descriptor += (j ? "," : "") + g.g_[i * n + j].to_string();
      descriptor += "]";
    }
    descriptor += "])";
  }
  g.desc_ = std::move(descriptor);
  return g;
}

Metric Metric::euclidean(PresentationPtr pres) {
  std::size_t n = static_cast<std::size_t>(pres->rank());
  std::vector<std::vector<AlgebraElement>> e(n, std::vector<AlgebraElement>(n, AlgebraElement::zero(pres)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = AlgebraElement::one(pres);
  Metric g = build(pres, std::move(e), std::nullopt, "g0");
  g.conformal_ = std::make_pair(AlgebraElement::one(pres), AlgebraElement::one(pres));
  return g;
}

Metric Metric::conformal(PresentationPtr pres, const AlgebraElement& k,
                         std::optional<AlgebraElement> k_inv) {
  AlgebraElement kinv = certified_inverse(k, k_inv, "conformal factor");
  std::size_t n = static_cast<std::size_t>(pres->rank());
  std::vector<std::vector<AlgebraElement>> e(n, std::vector<AlgebraElement>(n, AlgebraElement::zero(pres)));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = k;
  // det = k^n, inverse = kinv^n.
  AlgebraElement det_inv = AlgebraElement::one(pres);
  for (std::size_t i = 0; i < n; ++i) det_inv = det_inv * kinv;
  Metric g = build(pres, std::move(e), det_inv, "conformal(" + k.to_string() + ")");
  g.conformal_ = std::make_pair(k, kinv);
  return g;
}

Metric Metric::diagonal(PresentationPtr pres, std::vector<AlgebraElement> entries,
                        std::vector<std::optional<AlgebraElement>> entry_invs) {
  std::size_t n = static_cast<std::size_t>(pres->rank());
  if (entries.size() != n) fail(ErrorKind::InvalidConfig, "diagonal metric needs n entries");
  std::vector<std::vector<AlgebraElement>> e(n, std::vector<AlgebraElement>(n, AlgebraElement::zero(pres)));
  std::string desc = "diag(";
  AlgebraElement det_inv = AlgebraElement::one(pres);
  for (std::size_t i = 0; i < n; ++i) {
    e[i][i] = entries[i];
    desc += (i ? "," : "") + entries[i].to_string();
    std::optional<AlgebraElement> hint =
        (i < entry_invs.size()) ? entry_invs[i] : std::nullopt;
    det_inv = det_inv * certified_inverse(entries[i], hint, "diagonal entry");
  }
  desc += ")";
  return build(pres, std::move(e), det_inv, desc);
}

const AlgebraElement& Metric::entry(int i, int j) const {
  return g_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(j - 1)];
}

const AlgebraElement& Metric::inverse_entry(int i, int j) const {
  return ginv_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1)];
}

const AlgebraElement& Metric::adjugate_entry(int i, int j) const {
  return adj_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j - 1)];
}

AlgebraElement Metric::apply(const TensorBicovector& t) const {
  if (!t.presentation()->same_as(*pres_))
    fail(ErrorKind::PresentationMismatch, "metric applied across presentations");
  AlgebraElement s = AlgebraElement::zero(pres_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s += entry(i, j) * t.entry(i, j);
  return s;
}

bool Metric::derivation_closed() const {
  for (int a = 1; a <= n_; ++a)
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        AlgebraElement dg = entry(i, j).derive(a);
        AlgebraElement dginv = inverse_entry(i, j).derive(a);
        for (int k = 1; k <= n_; ++k)
          for (int l = 1; l <= n_; ++l) {
            if (!commute_check(dg, entry(k, l)) || !commute_check(dg, inverse_entry(k, l)))
              return false;
            if (!commute_check(dginv, entry(k, l)) || !commute_check(dginv, inverse_entry(k, l)))
              return false;
          }
      }
  return true;
}

}  // namespace ncgeo
