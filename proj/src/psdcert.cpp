#include "fdconvex/psdcert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fdconvex {

const char* to_string(PsdVerdict v)
{
  return v == PsdVerdict::PSD ? "PSD" : "NOT_PSD";
}

std::optional<Rational> PsdCertificate::min_pivot() const
{
  if (pivots.empty()) return std::nullopt;
  return *std::min_element(pivots.begin(), pivots.end());
}

namespace {

// Dense symmetric elimination state. Only the lower triangle of `s` is kept
// current; rows and columns live in permuted coordinates.
class Elimination {
public:
  explicit Elimination(const RationalSymMatrix& m) : n_(m.order()), s_(n_ * n_), l_(n_ * n_), perm_(n_)
  {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) s_[i * n_ + j] = m(i, j);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_; ++i) l_[i * n_ + i] = 1;
  }

  std::size_t order() const { return n_; }
  const Rational& s(std::size_t i, std::size_t j) const { return i >= j ? s_[i * n_ + j] : s_[j * n_ + i]; }

  void swap(std::size_t p, std::size_t q)
  {
    if (p == q) return;
    std::swap(perm_[p], perm_[q]);
    for (std::size_t c = 0; c < step_; ++c) std::swap(l_[p * n_ + c], l_[q * n_ + c]);
    // symmetric swap of the trailing block
    std::vector<Rational> rp(n_), rq(n_);
    for (std::size_t c = step_; c < n_; ++c) {
      rp[c] = s(p, c);
      rq[c] = s(q, c);
    }
    const Rational spp = rp[p], sqq = rq[q], spq = rp[q];
    for (std::size_t c = step_; c < n_; ++c) {
      if (c == p || c == q) continue;
      set(p, c, rq[c]);
      set(q, c, rp[c]);
    }
    set(p, p, sqq);
    set(q, q, spp);
    set(p, q, spq);
  }

  // Eliminates the current step with pivot s(step, step) (nonzero, or zero
  // with a zero column).
  void eliminate()
  {
    const std::size_t k = step_;
    const Rational d = s(k, k);
    pivots_.push_back(d);
    if (d != 0) {
      for (std::size_t i = k + 1; i < n_; ++i) l_[i * n_ + k] = s(i, k) / d;
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (l_[i * n_ + k] == 0) continue;
        for (std::size_t j = k + 1; j <= i; ++j) s_[i * n_ + j] -= l_[i * n_ + k] * s(j, k);
      }
    }
    ++step_;
  }

  std::size_t step() const { return step_; }

  bool column_zero(std::size_t k) const
  {
    for (std::size_t i = k + 1; i < n_; ++i)
      if (s(i, k) != 0) return false;
    return true;
  }

  // Vector v in original coordinates with vᵀ M v = wᵀ S w, where w lives on
  // the trailing block (indices >= step) of the current Schur complement.
  std::vector<Rational> lift(const std::vector<Rational>& w) const
  {
    const std::size_t k = step_;
    std::vector<Rational> v(n_);
    for (std::size_t i = k; i < n_; ++i) v[i] = w[i];
    // v_head = -L11^{-T} L21ᵀ w
    for (std::size_t c = k; c-- > 0;) {
      Rational acc = 0;
      for (std::size_t i = c + 1; i < n_; ++i) {
        if (i < k) {
          acc += l_[i * n_ + c] * v[i];
        } else {
          acc += l_[i * n_ + c] * w[i];
        }
      }
      v[c] = -acc;
    }
    std::vector<Rational> original(n_);
    for (std::size_t i = 0; i < n_; ++i) original[perm_[i]] = v[i];
    return original;
  }

  PsdCertificate finish(PsdVerdict verdict) const
  {
    PsdCertificate cert;
    cert.verdict = verdict;
    cert.pivots = pivots_;
    cert.permutation = perm_;
    cert.lower = l_;
    return cert;
  }

private:
  void set(std::size_t i, std::size_t j, const Rational& v)
  {
    if (i >= j) {
      s_[i * n_ + j] = v;
    } else {
      s_[j * n_ + i] = v;
    }
  }

  std::size_t n_;
  std::vector<Rational> s_;
  std::vector<Rational> l_;
  std::vector<std::size_t> perm_;
  std::vector<Rational> pivots_;
  std::size_t step_ = 0;
};

PsdCertificate refute(const RationalSymMatrix& m, const Elimination& el, const std::vector<Rational>& w)
{
  PsdCertificate cert = el.finish(PsdVerdict::NOT_PSD);
  cert.witness = el.lift(w);
  cert.witness_value = m.quadratic_form(cert.witness);
  if (cert.witness_value >= 0) throw std::logic_error("LDLT witness failed exact re-evaluation");
  return cert;
}

std::vector<Rational> unit(std::size_t n, std::size_t i)
{
  std::vector<Rational> w(n);
  w[i] = 1;
  return w;
}

}  // namespace

PsdCertificate ldlt_pivoted(const RationalSymMatrix& m)
{
  Elimination el(m);
  const std::size_t n = el.order();
  while (el.step() < n) {
    const std::size_t k = el.step();
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (el.s(i, i) > el.s(best, best)) best = i;
    el.swap(k, best);
    const Rational d = el.s(k, k);
    if (d < 0) return refute(m, el, unit(n, k));
    if (d == 0) {
      // Remaining diagonal is <= 0 everywhere; any nonzero entry refutes.
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < i; ++j) {
          const Rational sij = el.s(i, j);
          if (sij == 0) continue;
          std::vector<Rational> w = unit(n, i);
          w[j] = -sij;
          return refute(m, el, w);
        }
      }
    }
    el.eliminate();
  }
  return el.finish(PsdVerdict::PSD);
}

PsdCertificate ldlt_natural(const RationalSymMatrix& m)
{
  Elimination el(m);
  const std::size_t n = el.order();
  while (el.step() < n) {
    const std::size_t k = el.step();
    const Rational d = el.s(k, k);
    if (d < 0) return refute(m, el, unit(n, k));
    if (d == 0 && !el.column_zero(k)) {
      PsdCertificate cert = ldlt_pivoted(m);
      cert.pivoted_fallback = true;
      return cert;
    }
    el.eliminate();
  }
  return el.finish(PsdVerdict::PSD);
}

RationalSymMatrix reconstruct(const PsdCertificate& cert)
{
  const std::size_t n = cert.permutation.size();
  if (cert.pivots.size() != n || cert.lower.size() != n * n) {
    throw std::invalid_argument("reconstruct needs a complete factorization");
  }
  RationalSymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc = 0;
      for (std::size_t c = 0; c <= j; ++c) acc += cert.lower[i * n + c] * cert.pivots[c] * cert.lower[j * n + c];
      out.set(cert.permutation[i], cert.permutation[j], acc);
    }
  }
  return out;
}

EigenReport jacobi_eigen(const RationalSymMatrix& m)
{
  return jacobi_eigen(m.to_double(), m.order());
}

EigenReport jacobi_eigen(std::vector<double> a, std::size_t n)
{
  if (a.size() != n * n) throw std::invalid_argument("jacobi_eigen: size mismatch");
  if (n > 500) throw std::invalid_argument("jacobi_eigen limited to order 500");
  constexpr int kMaxSweeps = 100;
  constexpr double kRelTol = 1e-13;

  double scale = 0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  auto off_norm = [&] {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
  };

  EigenReport report;
  double off = off_norm();
  while (off > kRelTol * scale) {
    if (report.sweeps == kMaxSweeps) {
      report.converged = false;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r * n + p], arq = a[r * n + q];
          a[r * n + p] = c * arp - s * arq;
          a[r * n + q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p * n + r], aqr = a[q * n + r];
          a[p * n + r] = c * apr - s * aqr;
          a[q * n + r] = s * apr + c * aqr;
        }
      }
    }
    ++report.sweeps;
    off = off_norm();
  }
  report.offdiag_residual = off;
  for (std::size_t i = 0; i < n; ++i) report.eigenvalues.push_back(a[i * n + i]);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
  report.min_eigenvalue = report.eigenvalues.empty() ? 0 : report.eigenvalues.front();
  return report;
}

}  // namespace fdconvex
