#include "armafisher/poly.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "armafisher/error.h"

namespace armafisher {

Polynomial Polynomial::FromCoefficients(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::kEmptyCoefficients,
                "polynomial needs at least the constant term");
  }
  if (coeffs[0] != 1.0) {
    throw Error(ErrorCode::kConstantTermNotOne,
                "polynomial constant term must be exactly 1");
  }
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::FromTail(std::span<const double> tail) {
  std::vector<double> coeffs;
  coeffs.reserve(tail.size() + 1);
  coeffs.push_back(1.0);
  coeffs.insert(coeffs.end(), tail.begin(), tail.end());
  return Polynomial(std::move(coeffs));
}

Vector Polynomial::TailVector() const {
  Vector v(degree());
  for (int k = 1; k <= degree(); ++k) v(k - 1) = coeffs_[k];
  return v;
}

Complex Polynomial::Evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Complex Polynomial::EvaluateReciprocal(Complex z) const {
  Complex acc = 0.0;
  for (double c : coeffs_) acc = acc * z + c;
  return acc;
}

Polynomial MakePolynomial(std::vector<double> coeffs) {
  return Polynomial::FromCoefficients(std::move(coeffs));
}

std::vector<double> Reciprocal(const Polynomial& p) {
  auto c = p.coefficients();
  return {c.rbegin(), c.rend()};
}

Polynomial Product(const Polynomial& a, const Polynomial& c) {
  const int p = a.degree();
  const int q = c.degree();
  std::vector<double> g(p + q + 1, 0.0);
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) g[i + j] += a[i] * c[j];
  }
  return Polynomial::FromCoefficients(std::move(g));
}

std::vector<Complex> HornerSequence(const Polynomial& p, Complex lambda) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::kBadDimension,
                "Horner sequence needs degree >= 1");
  }
  std::vector<Complex> h(p.degree());
  h[0] = 1.0;
  for (int k = 1; k < p.degree(); ++k) h[k] = lambda * h[k - 1] + p[k];
  return h;
}

int RootSet::TotalMultiplicity() const {
  int total = 0;
  for (const Root& r : roots) total += r.multiplicity;
  return total;
}

namespace {

// Value and derivative of the monic reciprocal at z.
std::pair<Complex, Complex> EvalReciprocalWithDerivative(const Polynomial& p,
                                                         Complex z) {
  Complex value = 0.0;
  Complex deriv = 0.0;
  for (double c : p.coefficients()) {
    deriv = deriv * z + value;
    value = value * z + c;
  }
  return {value, deriv};
}

std::vector<Root> Cluster(const std::vector<Complex>& zs, double radius) {
  const int n = static_cast<int>(zs.size());
  std::vector<int> label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    // Single linkage: grow the cluster until no new member is found.
    bool grown = true;
    while (grown) {
      grown = false;
      for (int j = 0; j < n; ++j) {
        if (label[j] >= 0) continue;
        for (int k = 0; k < n; ++k) {
          if (label[k] == next && std::abs(zs[j] - zs[k]) < radius) {
            label[j] = next;
            grown = true;
            break;
          }
        }
      }
    }
    ++next;
  }
  std::vector<Root> roots(next, Root{0.0, 0});
  for (int i = 0; i < n; ++i) {
    roots[label[i]].value += zs[i];
    roots[label[i]].multiplicity += 1;
  }
  for (Root& r : roots) r.value /= static_cast<double>(r.multiplicity);
  return roots;
}

// Newton on the (m-1)-th derivative of p̂, where a zero of multiplicity m is
// simple. Pulls a cluster mean back to full accuracy.
Complex RefineMultipleRoot(const Polynomial& p, Complex z, int multiplicity) {
  std::vector<double> d(p.coefficients().begin(), p.coefficients().end());
  for (int k = 1; k < multiplicity; ++k) {
    const int deg = static_cast<int>(d.size()) - 1;
    std::vector<double> next(deg);
    for (int i = 0; i < deg; ++i) next[i] = d[i] * (deg - i);
    d = std::move(next);
  }
  for (int iter = 0; iter < 8; ++iter) {
    Complex value = 0.0;
    Complex deriv = 0.0;
    for (double c : d) {
      deriv = deriv * z + value;
      value = value * z + c;
    }
    if (deriv == 0.0) break;
    const Complex step = value / deriv;
    z -= step;
    if (std::abs(step) <= std::numeric_limits<double>::epsilon() * std::abs(z)) {
      break;
    }
  }
  return z;
}

}  // namespace

RootSet RootsOfReciprocal(const Polynomial& p,
                          const RootFinderOptions& options) {
  const int n = p.degree();
  RootSet result;
  if (n == 0) return result;

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(0.8, angle);
  }

  bool settled = false;
  for (int iter = 0; iter < options.max_iter && !settled; ++iter) {
    settled = true;
    for (int k = 0; k < n; ++k) {
      auto [value, deriv] = EvalReciprocalWithDerivative(p, z[k]);
      if (value == 0.0) continue;
      const Complex ratio = value / deriv;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) > 4.0 * std::numeric_limits<double>::epsilon() *
                               std::max(1.0, std::abs(z[k]))) {
        settled = false;
      }
    }
  }

  for (const Complex& zk : z) {
    result.residual = std::max(result.residual, std::abs(p.EvaluateReciprocal(zk)));
  }
  if (!(result.residual <= options.tol)) {
    throw Error(ErrorCode::kNoConvergence,
                "root finder residual " + std::to_string(result.residual) +
                    " exceeds tolerance after " +
                    std::to_string(options.max_iter) + " iterations");
  }
  result.roots = Cluster(z, options.cluster_radius);
  for (Root& r : result.roots) {
    if (r.multiplicity > 1) {
      const Complex refined = RefineMultipleRoot(p, r.value, r.multiplicity);
      if (std::abs(refined - r.value) < options.cluster_radius) r.value = refined;
    }
    if (std::abs(r.value.imag()) < options.cluster_radius * 1e-3) {
      r.value.imag(0.0);
    }
  }
  return result;
}

std::vector<Root> CommonRoots(const Polynomial& a, const Polynomial& c,
                              double tol, const RootFinderOptions& options) {
  std::vector<Root> common;
  if (a.degree() == 0 || c.degree() == 0) return common;
  const RootSet ra = RootsOfReciprocal(a, options);
  const RootSet rc = RootsOfReciprocal(c, options);
  std::vector<bool> used(rc.roots.size(), false);
  for (const Root& alpha : ra.roots) {
    for (std::size_t j = 0; j < rc.roots.size(); ++j) {
      const Root& gamma = rc.roots[j];
      if (used[j] || std::abs(alpha.value - gamma.value) > tol) continue;
      used[j] = true;
      common.push_back({0.5 * (alpha.value + gamma.value),
                        std::min(alpha.multiplicity, gamma.multiplicity)});
      break;
    }
  }
  return common;
}

CoeffVector ToComplex(const Polynomial& p) {
  auto c = p.coefficients();
  return {c.begin(), c.end()};
}

CoeffVector FromFactorParameters(std::span<const Complex> params) {
  CoeffVector coeffs{1.0};
  for (const Complex& alpha : params) {
    coeffs.push_back(0.0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
      coeffs[k] -= alpha * coeffs[k - 1];
    }
  }
  return coeffs;
}

Deflation DeflateFactor(std::span<const Complex> coeffs, Complex alpha) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) {
    throw Error(ErrorCode::kBadDimension, "cannot deflate a constant");
  }
  Deflation d;
  d.quotient.resize(n);
  d.quotient[0] = coeffs[0];
  for (int k = 1; k < n; ++k) d.quotient[k] = coeffs[k] + alpha * d.quotient[k - 1];
  double scale = 1.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  d.residual = std::abs(coeffs[n] + alpha * d.quotient[n - 1]) / scale;
  return d;
}

}  // namespace armafisher
