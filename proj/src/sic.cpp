#include "sicinfo/sic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sicinfo {

namespace {

using C = std::complex<double>;

PureState ket(std::initializer_list<C> amps) {
  ComplexVector v(static_cast<Index>(amps.size()));
  Index i = 0;
  for (const C& a : amps) v(i++) = a;
  return PureState(v);
}

C phase(double angle) { return std::polar(1.0, angle); }

std::vector<Operator> scaled_projectors(const std::vector<PureState>& kets, double scale) {
  std::vector<Operator> ops;
  ops.reserve(kets.size());
  for (const auto& k : kets) ops.push_back(scale * outer(k));
  return ops;
}

}  // namespace

SicCertificate is_sic(std::span<const Operator> elements) {
  if (elements.empty()) throw InvalidInput("is_sic: empty operator list");
  const Index d = elements.front().dim();
  for (const auto& x : elements) {
    if (x.dim() != d) throw InvalidInput("is_sic: operators have different dimensions");
  }

  SicCertificate cert;
  cert.dim = d;
  cert.count = elements.size();

  double trace_sum = 0;
  for (const auto& x : elements) trace_sum += x.trace();
  cert.lambda = trace_sum / static_cast<double>(elements.size());

  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  cert.rank_one = true;
  for (const auto& x : elements) {
    cert.max_trace_deviation = std::max(cert.max_trace_deviation, std::abs(x.trace() - cert.lambda));
    total += x.matrix();
    const auto s = eigh(x);
    const double second = d > 1 ? std::abs(s.values(1)) : 0.0;
    cert.max_rank_residual = std::max(cert.max_rank_residual, second);
    if (second > kRankTol || s.values(d - 1) < -kRankTol) cert.rank_one = false;
  }

  const double target = cert.lambda * cert.lambda / static_cast<double>(d + 1);
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t y = x + 1; y < elements.size(); ++y) {
      const double dev = std::abs(trace_product(elements[x], elements[y]) - target);
      cert.max_pairwise_deviation = std::max(cert.max_pairwise_deviation, dev);
    }
  }

  cert.average_deviation =
      (total - static_cast<double>(d) * cert.lambda * ComplexMatrix::Identity(d, d)).norm();

  cert.passes = cert.max_trace_deviation <= kSicTol && cert.max_pairwise_deviation <= kSicTol &&
                cert.count == static_cast<std::size_t>(d * d) && cert.rank_one;
  return cert;
}

std::vector<PureState> tetrahedral_vectors() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0 / 3.0);
  const double t = 2.0 * std::numbers::pi / 3.0;
  return {
      ket({1.0, 0.0}),
      ket({a, b}),
      ket({a, phase(t) * b}),
      ket({a, phase(-t) * b}),
  };
}

Povm tetrahedral_povm() { return Povm(scaled_projectors(tetrahedral_vectors(), 0.5)); }

std::vector<PureState> antitetrahedral_vectors() {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = 1.0 / std::sqrt(3.0);
  const double t = std::numbers::pi / 3.0;
  return {
      ket({0.0, 1.0}),
      ket({a, -b}),
      ket({a, phase(t) * b}),
      ket({a, phase(-t) * b}),
  };
}

Ensemble antitetrahedral_ensemble() { return Ensemble(scaled_projectors(antitetrahedral_vectors(), 0.25)); }

std::vector<PureState> qutrit_sic_vectors() {
  const double h = 0.5;
  const double r = std::sqrt(3.0) / 2.0;
  const double s = 1.0 / std::sqrt(2.0);
  const double t = 2.0 * std::numbers::pi / 3.0;
  const C i{0.0, 1.0};
  return {
      ket({1.0, 0.0, 0.0}),
      ket({h, i * r, 0.0}),
      ket({h, -i * r, 0.0}),
      ket({h, h, s}),
      ket({h, h, phase(t) * s}),
      ket({h, h, phase(-t) * s}),
      ket({h, -h, s}),
      ket({h, -h, phase(t) * s}),
      ket({h, -h, phase(-t) * s}),
  };
}

Povm qutrit_sic_povm() { return Povm(scaled_projectors(qutrit_sic_vectors(), 1.0 / 3.0)); }

std::vector<PureState> qutrit_orthonormal_vectors() {
  const double s = 1.0 / std::sqrt(2.0);
  return {
      ket({0.0, 0.0, 1.0}),
      ket({-s, s, 0.0}),
      ket({s, s, 0.0}),
  };
}

Ensemble qutrit_orthonormal_ensemble() {
  return Ensemble(scaled_projectors(qutrit_orthonormal_vectors(), 1.0 / 3.0));
}

ComplexMatrix displacement(Index d, Index j, Index k) {
  if (d < 1) throw InvalidDimension("displacement: d must be positive");
  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (Index m = 0; m < d; ++m) {
    shift((m + 1) % d, m) = 1.0;
    clock(m, m) = phase(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
  }
  ComplexMatrix out = ComplexMatrix::Identity(d, d);
  for (Index n = 0; n < j; ++n) out = shift * out;
  for (Index n = 0; n < k; ++n) out = out * clock;
  return out;
}

Povm wh_covariant_povm(const PureState& fiducial) {
  const Index d = fiducial.dim();
  std::vector<Operator> effects;
  effects.reserve(static_cast<std::size_t>(d * d));
  for (Index j = 0; j < d; ++j) {
    for (Index k = 0; k < d; ++k) {
      const ComplexVector v = displacement(d, j, k) * fiducial.amplitudes();
      effects.push_back(Operator(v * v.adjoint() / static_cast<double>(d)));
    }
  }
  return Povm(std::move(effects));
}

}  // namespace sicinfo
