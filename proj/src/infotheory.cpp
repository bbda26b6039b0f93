#include "sicinfo/infotheory.hpp"

#include <algorithm>
#include <vector>

namespace sicinfo {

JointDistribution::JointDistribution(Eigen::MatrixXd probs) : p_(std::move(probs)) {
  if (p_.size() == 0) throw InvalidDistribution("empty joint distribution");
  if (!p_.allFinite()) throw InvalidDistribution("joint distribution has non-finite entries");
  if (p_.minCoeff() < -kPsdTol) {
    throw InvalidDistribution("joint distribution has negative entry " + std::to_string(p_.minCoeff()));
  }
  p_ = p_.cwiseMax(0.0);
  const double sum = p_.sum();
  if (std::abs(sum - 1.0) > kSumTol) {
    throw InvalidDistribution("joint distribution sums to " + std::to_string(sum));
  }
}

JointDistribution joint_distribution(const Ensemble& e, const Povm& p) {
  if (e.dim() != p.dim()) {
    throw DimMismatch("ensemble has dimension " + std::to_string(e.dim()) + " but POVM has dimension " +
                      std::to_string(p.dim()));
  }
  Eigen::MatrixXd probs(static_cast<Index>(e.size()), static_cast<Index>(p.size()));
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      probs(static_cast<Index>(x), static_cast<Index>(y)) = trace_product(e[x], p[y]);
    }
  }
  return JointDistribution(std::move(probs));
}

EntropyBreakdown entropy_breakdown(const JointDistribution& j) {
  EntropyBreakdown b;
  b.h_x = entropy_bits_unchecked(j.marginal_x());
  b.h_y = entropy_bits_unchecked(j.marginal_y());
  b.h_xy = entropy_bits_unchecked(j.probs().reshaped());
  b.h_y_given_x = b.h_xy - b.h_x;
  b.mutual_information = std::max(0.0, b.h_x + b.h_y - b.h_xy);
  return b;
}

double mutual_information(const JointDistribution& j) { return entropy_breakdown(j).mutual_information; }

Eigen::VectorXd outcome_distribution(const Povm& p, const PureState& psi) {
  if (p.dim() != psi.dim()) throw DimMismatch("outcome_distribution: POVM and state dimensions differ");
  Eigen::VectorXd q(static_cast<Index>(p.size()));
  for (std::size_t y = 0; y < p.size(); ++y) {
    q(static_cast<Index>(y)) = std::max(0.0, expectation(p[y], psi.amplitudes()));
  }
  return q;
}

double conditional_output_entropy(const Povm& p, const PureState& psi) {
  return shannon_entropy(outcome_distribution(p, psi));
}

double index_of_coincidence(const Povm& p, const Operator& rho) {
  if (p.dim() != rho.dim()) throw DimMismatch("index_of_coincidence: POVM and state dimensions differ");
  double c = 0;
  for (const auto& pi : p.effects()) {
    const double q = trace_product(rho, pi);
    c += q * q;
  }
  return c;
}

namespace {

void require_dim(int d) {
  if (d < 2) throw InvalidDimension("bounds need d >= 2, got " + std::to_string(d));
}

}  // namespace

double holevo_bound(int d) {
  require_dim(d);
  return std::log2(static_cast<double>(d));
}

double scrooge_lower_bound(int d) {
  require_dim(d);
  // Sum smallest terms first.
  double harmonic_tail = 0;
  for (int n = d; n >= 2; --n) harmonic_tail += 1.0 / n;
  return std::log2(static_cast<double>(d)) - harmonic_tail / std::numbers::ln2;
}

double sic_upper_bound(int d) {
  require_dim(d);
  return std::log2(2.0 * d / (d + 1.0));
}

double rastegin_bound(int d) {
  require_dim(d);
  return std::log2(d * (d + 1.0) / 2.0);
}

double pg_sic_mutual_information(int d) {
  require_dim(d);
  const auto n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const double dd = d;
  const double diag = 1.0 / (dd * dd * dd);
  const double off = 1.0 / (dd * dd * dd * (dd + 1.0));

  std::vector<double> row(n, 0.0);
  std::vector<double> col(n, 0.0);
  double h_xy = 0;
  const double diag_term = -diag * std::log2(diag);
  const double off_term = -off * std::log2(off);
  for (std::size_t x = 0; x < n; ++x) {
    double row_sum = 0;
    double row_h = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const bool same = x == y;
      const double p = same ? diag : off;
      row_sum += p;
      col[y] += p;
      row_h += same ? diag_term : off_term;
    }
    row[x] = row_sum;
    h_xy += row_h;
  }
  const auto h = [](const std::vector<double>& v) {
    return entropy_bits_unchecked(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Index>(v.size())));
  };
  return std::max(0.0, h(row) + h(col) - h_xy);
}

double pg_sic_coefficient_form(int d) {
  require_dim(d);
  const double dd = d;
  const double denom = dd * dd * (dd + 1.0);
  return (2.0 * dd / denom) * std::log2(dd) - ((dd - 1.0) / denom) * std::log2(dd + 1.0);
}

BoundSet bounds_for_dimension(int d) {
  require_dim(d);
  BoundSet b;
  b.dim = d;
  b.holevo = holevo_bound(d);
  b.scrooge_lower = scrooge_lower_bound(d);
  b.sic_upper = sic_upper_bound(d);
  b.rastegin_cond = rastegin_bound(d);
  b.pg_sic_value = pg_sic_mutual_information(d);
  if (!(b.scrooge_lower <= b.sic_upper && b.sic_upper <= b.holevo)) {
    throw std::logic_error("bound ordering violated at d = " + std::to_string(d));
  }
  return b;
}

}  // namespace sicinfo
