// Moment oracle built from truncated formal power series. Everything here
// is exact coefficient algebra; no root finding.

#include <cmath>
#include <vector>

#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"

namespace fpcalc {

namespace {

// Coefficients c_0..c_N of a power series truncated at order N.
using Series = std::vector<double>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series add(Series a, const Series& b, double scale = 1.0) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Series reciprocal(const Series& a) {
  if (a[0] == 0.0) throw DomainError("series: reciprocal of a series without constant term");
  Series r(a.size(), 0.0);
  r[0] = 1.0 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * r[n - k];
    r[n] = -acc / a[0];
  }
  return r;
}

// f(g(z)) for g(0) = 0, by Horner.
Series compose(const Series& f, const Series& g) {
  Series out(f.size(), 0.0);
  for (std::size_t k = f.size(); k-- > 0;) {
    out = mul(out, g);
    out[0] += f[k];
  }
  return out;
}

// Compositional inverse of g with g(0) = 0, g'(0) != 0. Each sweep fixes one
// more coefficient.
Series revert(const Series& g) {
  if (g[1] == 0.0) throw DomainError("series: reversion needs a nonzero linear term");
  Series z(g.size(), 0.0);
  z[1] = 1.0;
  Series h = z;
  h[1] = 1.0 / g[1];
  for (std::size_t sweep = 0; sweep < g.size(); ++sweep) {
    const Series gh = compose(g, h);
    h = add(h, add(gh, z, -1.0), -1.0 / g[1]);
  }
  return h;
}

Series moment_series(const std::vector<Atom>& atoms, std::size_t n) {
  Series m(n + 1, 0.0);
  for (const auto& a : atoms) {
    double p = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      m[k] += a.weight * p;
      p *= a.location;
    }
  }
  return m;
}

Series shift_up(const Series& a) {  // z * a(z)
  Series out(a.size(), 0.0);
  for (std::size_t k = 0; k + 1 < a.size(); ++k) out[k + 1] = a[k];
  return out;
}

// psi = M - 1, eta = psi / (1 + psi).
Series eta_from_moments(const Series& m) {
  Series psi = m;
  psi[0] = 0.0;
  return mul(psi, reciprocal(m));
}

Series moments_from_eta(const Series& eta) {
  Series one_minus(eta.size(), 0.0);
  one_minus[0] = 1.0;
  one_minus = add(one_minus, eta, -1.0);
  Series m = mul(eta, reciprocal(one_minus));
  m[0] = 1.0;
  return m;
}

// Free cumulant series C with M(z) = C(z M(z)).
Series cumulant_series(const Series& m) { return compose(m, revert(shift_up(m))); }

Series moments_from_cumulants(const Series& c) {
  Series m(c.size(), 0.0);
  m[0] = 1.0;
  for (std::size_t sweep = 0; sweep < c.size(); ++sweep) m = compose(c, shift_up(m));
  return m;
}

}  // namespace

std::vector<double> series_oracle(const std::vector<Atom>& mu, const std::vector<Atom>& nu,
                                  ConvolutionKind kind, int n) {
  if (n < 1 || n > 12) throw ParameterError("series oracle: need 1 <= N <= 12");
  if (mu.empty() || nu.empty()) throw ParameterError("series oracle: atomic inputs required");
  const auto N = static_cast<std::size_t>(n);
  const Series mm = moment_series(mu, N);
  const Series mn = moment_series(nu, N);
  Series result;
  switch (kind) {
    case ConvolutionKind::AddBoolean:
      result = moments_from_eta(add(eta_from_moments(mm), eta_from_moments(mn)));
      break;
    case ConvolutionKind::AddFree: {
      Series c = add(cumulant_series(mm), cumulant_series(mn));
      c[0] = 1.0;
      result = moments_from_cumulants(c);
      break;
    }
    case ConvolutionKind::AddMonotone: {
      // eta_{mu |> nu} = 1 - (1 - eta_nu)(1 - eta_mu(zeta)), zeta = z / (1 - eta_nu).
      const Series en = eta_from_moments(mn);
      Series one_minus_en(N + 1, 0.0);
      one_minus_en[0] = 1.0;
      one_minus_en = add(one_minus_en, en, -1.0);
      Series z(N + 1, 0.0);
      z[1] = 1.0;
      const Series zeta = mul(z, reciprocal(one_minus_en));
      Series one_minus_em(N + 1, 0.0);
      one_minus_em[0] = 1.0;
      one_minus_em = add(one_minus_em, compose(eta_from_moments(mm), zeta), -1.0);
      Series eta = mul(one_minus_en, one_minus_em);
      for (auto& c : eta) c = -c;
      eta[0] += 1.0;
      result = moments_from_eta(eta);
      break;
    }
    case ConvolutionKind::MulMonotone:
      result = moments_from_eta(compose(eta_from_moments(mm), eta_from_moments(mn)));
      break;
    case ConvolutionKind::MulFree: {
      // Sigma(z) = eta^{<-1>}(z) / z; multiply, then revert z Sigma(z).
      auto sigma = [](const Series& m) {
        const Series inv = revert(eta_from_moments(m));
        Series s(inv.size(), 0.0);
        for (std::size_t k = 0; k + 1 < inv.size(); ++k) s[k] = inv[k + 1];
        return s;
      };
      if (mm[1] == 0.0 || mn[1] == 0.0)
        throw DomainError("series oracle: free multiplicative kind needs nonzero means");
      result = moments_from_eta(revert(shift_up(mul(sigma(mm), sigma(mn)))));
      break;
    }
  }
  return {result.begin() + 1, result.end()};
}

}  // namespace fpcalc
