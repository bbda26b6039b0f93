#include "sicinfo/states.hpp"

#include <cmath>
#include <string>

#include "sicinfo/sic.hpp"

namespace sicinfo {

namespace {

Index common_dim(const std::vector<Operator>& ops, const char* what) {
  if (ops.empty()) throw InvalidInput(std::string(what) + " has no elements");
  const Index d = ops.front().dim();
  for (const auto& op : ops) {
    if (op.dim() != d) throw DimMismatch(std::string(what) + " elements have different dimensions");
  }
  return d;
}

}  // namespace

Ensemble::Ensemble(std::vector<Operator> states) : states_(std::move(states)) {
  try {
    dim_ = common_dim(states_, "ensemble");
  } catch (const Error& ex) {
    throw InvalidEnsemble(ex.what());
  }
  double total = 0;
  for (std::size_t x = 0; x < states_.size(); ++x) {
    const auto s = eigh(states_[x]);
    if (s.values.minCoeff() < -kPsdTol) {
      throw InvalidEnsemble("ensemble element " + std::to_string(x) + " is not positive semidefinite");
    }
    total += states_[x].trace();
  }
  if (std::abs(total - 1.0) > kSumTol) {
    throw InvalidEnsemble("ensemble traces sum to " + std::to_string(total) + ", expected 1");
  }
}

Ensemble Ensemble::from_pure(const std::vector<PureState>& states, const std::vector<double>& weights) {
  if (states.size() != weights.size()) throw InvalidInput("from_pure: states and weights differ in length");
  std::vector<Operator> ops;
  ops.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) ops.push_back(weights[i] * outer(states[i]));
  return Ensemble(std::move(ops));
}

std::vector<double> Ensemble::probabilities() const {
  std::vector<double> p;
  p.reserve(states_.size());
  for (const auto& s : states_) p.push_back(std::max(0.0, s.trace()));
  return p;
}

Operator Ensemble::normalized_state(std::size_t x) const {
  const double t = states_.at(x).trace();
  if (t <= kZeroProb) throw InvalidEnsemble("element " + std::to_string(x) + " has zero weight");
  return states_[x] * (1.0 / t);
}

Povm::Povm(std::vector<Operator> effects) : effects_(std::move(effects)) {
  try {
    dim_ = common_dim(effects_, "POVM");
  } catch (const Error& ex) {
    throw InvalidPovm(ex.what());
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (std::size_t y = 0; y < effects_.size(); ++y) {
    const auto s = eigh(effects_[y]);
    if (s.values.minCoeff() < -kPsdTol) {
      throw InvalidPovm("POVM effect " + std::to_string(y) + " is not positive semidefinite");
    }
    sum += effects_[y].matrix();
  }
  const double dev = (sum - ComplexMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (dev > kSumTol) {
    throw InvalidPovm("POVM effects do not sum to the identity (max deviation " + std::to_string(dev) + ")");
  }
}

Povm Povm::basis(Index d) {
  if (d < 1) throw InvalidDimension("basis POVM needs d >= 1");
  std::vector<Operator> effects;
  for (Index k = 0; k < d; ++k) effects.push_back(outer(PureState::basis(d, k)));
  return Povm(std::move(effects));
}

Operator average_state(const Ensemble& e) {
  Operator rho = Operator::zero(e.dim());
  for (const auto& s : e.states()) rho += s;
  return rho;
}

Povm restrict_to_support(const Povm& p, const Operator& rho) {
  if (p.dim() != rho.dim()) throw DimMismatch("restrict_to_support: POVM and state dimensions differ");
  require_psd(eigh(rho));
  const ComplexMatrix v = support_basis(rho);
  if (v.cols() == 0) throw InvalidState("restrict_to_support: state has empty support");
  std::vector<Operator> effects;
  effects.reserve(p.size());
  for (const auto& pi : p.effects()) effects.push_back(congruence(v, pi));
  return Povm(std::move(effects));
}

Ensemble restrict_to_support(const Ensemble& e, const Operator& rho) {
  if (e.dim() != rho.dim()) throw DimMismatch("restrict_to_support: ensemble and state dimensions differ");
  const ComplexMatrix v = support_basis(rho);
  if (v.cols() == 0) throw InvalidState("restrict_to_support: state has empty support");
  std::vector<Operator> states;
  states.reserve(e.size());
  for (const auto& s : e.states()) states.push_back(congruence(v, s));
  return Ensemble(std::move(states));
}

Povm pretty_good_povm(const Ensemble& e) {
  const Operator rho = average_state(e);
  const ComplexMatrix v = support_basis(rho);
  const bool full_rank = v.cols() == e.dim();

  // Work on the support so rho is invertible there.
  const Operator rho_s = full_rank ? rho : congruence(v, rho);
  const Operator inv_sqrt = op_inv_sqrt(rho_s);
  std::vector<Operator> effects;
  effects.reserve(e.size());
  for (const auto& s : e.states()) {
    const Operator s_s = full_rank ? s : congruence(v, s);
    effects.push_back(sandwich(inv_sqrt, s_s));
  }
  return Povm(std::move(effects));
}

Ensemble pretty_good_ensemble(const Povm& p, const Operator& rho) {
  if (p.dim() != rho.dim()) throw DimMismatch("pretty_good_ensemble: POVM and state dimensions differ");
  if (std::abs(rho.trace() - 1.0) > kSumTol) throw InvalidState("pretty_good_ensemble: state must have unit trace");
  const Operator root = op_sqrt(rho);
  std::vector<Operator> states;
  states.reserve(p.size());
  for (const auto& pi : p.effects()) states.push_back(sandwich(root, pi));
  return Ensemble(std::move(states));
}

namespace {

void require_sic(std::span<const Operator> elements, double expected_lambda, const char* what) {
  const SicCertificate cert = is_sic(elements);
  if (!cert.passes) throw NotSic(std::string(what) + " is not a SIC set");
  if (std::abs(cert.lambda - expected_lambda) > kSicTol) {
    throw NotSic(std::string(what) + " has common trace " + std::to_string(cert.lambda) + ", expected " +
                 std::to_string(expected_lambda));
  }
}

}  // namespace

Ensemble sic_ensemble_from_povm(const Povm& p) {
  const double d = static_cast<double>(p.dim());
  require_sic(p.effects(), 1.0 / d, "POVM");
  std::vector<Operator> states;
  states.reserve(p.size());
  for (const auto& pi : p.effects()) states.push_back(pi * (1.0 / d));
  return Ensemble(std::move(states));
}

Povm sic_povm_from_ensemble(const Ensemble& e) {
  const double d = static_cast<double>(e.dim());
  require_sic(e.states(), 1.0 / (d * d), "ensemble");
  std::vector<Operator> effects;
  effects.reserve(e.size());
  for (const auto& s : e.states()) effects.push_back(s * d);
  return Povm(std::move(effects));
}

}  // namespace sicinfo
