#include "hoinfo/measures.hpp"

#include <string>

namespace hoinfo {

namespace {

void require_system(const JointDistribution& dist, const char* what) {
  if (dist.n_vars() < 2) {
    throw Error(ErrorCode::SystemTooSmall, std::string(what) + " needs at least two variables");
  }
}

double sum(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

}  // namespace

EntropyProfile compute_entropy_profile(const JointDistribution& dist, const EstimatorConfig& config) {
  const std::size_t n = dist.n_vars();
  EntropyProfile profile;
  profile.joint = entropy(dist, config);
  profile.single.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    profile.single.push_back(entropy(marginalize(dist, VariableSubset({i}), config), config));
  }
  if (n >= 2) {
    profile.leave_one_out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      profile.leave_one_out.push_back(entropy(leave_one_out(dist, i, config), config));
    }
  }
  return profile;
}

double entropy_of(const JointDistribution& dist, const VariableSubset& subset, const EstimatorConfig& config) {
  return entropy(marginalize(dist, subset, config), config);
}

double mutual_information(const JointDistribution& dist, const VariableSubset& a, const VariableSubset& b,
                          const EstimatorConfig& config) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySubset, "mutual information needs two non-empty sets");
  if (!a.disjoint_from(b)) throw Error(ErrorCode::OverlappingSubsets, "mutual information sets must be disjoint");
  std::vector<std::size_t> joint(a.indices().begin(), a.indices().end());
  joint.insert(joint.end(), b.indices().begin(), b.indices().end());
  return entropy_of(dist, a, config) + entropy_of(dist, b, config) -
         entropy_of(dist, VariableSubset(std::move(joint)), config);
}

double total_correlation(const JointDistribution& dist, const EstimatorConfig& config) {
  double marginal_sum = 0.0;
  for (std::size_t i = 0; i < dist.n_vars(); ++i) marginal_sum += entropy_of(dist, VariableSubset({i}), config);
  return marginal_sum - entropy(dist, config);
}

MeasureReport measures_from_profile(const EntropyProfile& profile) {
  const std::size_t n = profile.single.size();
  if (n < 2 || profile.leave_one_out.size() != n) {
    throw Error(ErrorCode::SystemTooSmall, "measures need at least two variables");
  }
  const double h = profile.joint;

  MeasureReport r;
  r.joint_entropy = h;
  r.total_correlation = sum(profile.single) - h;

  // Each residual entropy H(X_i | X^{-i}) = H(X) - H(X^{-i}).
  double residual = 0.0;
  for (double h_rest : profile.leave_one_out) residual += h - h_rest;
  r.dual_total_correlation = h - residual;

  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += profile.single[i] + profile.leave_one_out[i] - h;
  r.s_information = s;

  r.o_information = r.total_correlation - r.dual_total_correlation;
  return r;
}

MeasureReport compute_measures(const JointDistribution& dist, const EstimatorConfig& config) {
  require_system(dist, "the measure report");
  return measures_from_profile(compute_entropy_profile(dist, config));
}

double dual_total_correlation(const JointDistribution& dist, const EstimatorConfig& config) {
  return compute_measures(dist, config).dual_total_correlation;
}

double s_information(const JointDistribution& dist, const EstimatorConfig& config) {
  return compute_measures(dist, config).s_information;
}

double o_information(const JointDistribution& dist, const EstimatorConfig& config) {
  return compute_measures(dist, config).o_information;
}

double sum_leave_one_out_tc(const JointDistribution& dist, const EstimatorConfig& config) {
  require_system(dist, "leave-one-out total correlation");
  double s = 0.0;
  for (std::size_t i = 0; i < dist.n_vars(); ++i) s += total_correlation(leave_one_out(dist, i, config), config);
  return s;
}

double dual_total_correlation_via_tc(const JointDistribution& dist, const EstimatorConfig& config) {
  return delta_k_via_tc(dist, 1, config);
}

double delta_k(const JointDistribution& dist, int k, const EstimatorConfig& config) {
  const MeasureReport r = compute_measures(dist, config);
  return r.s_information - k * r.total_correlation;
}

double gamma_k(const JointDistribution& dist, int k, const EstimatorConfig& config) {
  const MeasureReport r = compute_measures(dist, config);
  return r.s_information - k * r.dual_total_correlation;
}

double delta_k_via_tc(const JointDistribution& dist, int k, const EstimatorConfig& config) {
  require_system(dist, "delta_k");
  const double n = static_cast<double>(dist.n_vars());
  const double whole = total_correlation(dist, config);
  const double parts = sum_leave_one_out_tc(dist, config);
  return (n - k) * whole - parts;
}

double gamma_k_via_tc(const JointDistribution& dist, int k, const EstimatorConfig& config) {
  require_system(dist, "gamma_k");
  const double n = static_cast<double>(dist.n_vars());
  const double whole = total_correlation(dist, config);
  const double parts = sum_leave_one_out_tc(dist, config);
  const double km1 = static_cast<double>(k) - 1.0;
  return (1.0 - (n - 1.0) * km1) * whole + km1 * parts;
}

GenericDeltaResult generic_delta_k(const MeasureFunctional& f, const JointDistribution& dist, int k,
                                   const EstimatorConfig& config) {
  require_system(dist, "generic_delta_k");
  if (!f.evaluate) throw Error(ErrorCode::InvalidArgument, "functional '" + f.name + "' has no evaluator");

  const double tol = config.zero_tolerance;
  auto checked = [&](const JointDistribution& d, const char* where) {
    const double v = f.evaluate(d);
    if (v < -tol) {
      throw Error(ErrorCode::FunctionalNegative,
                  "functional '" + f.name + "' returned " + std::to_string(v) + " on " + where);
    }
    return v;
  };

  const double whole = checked(dist, "the full system");
  double parts = 0.0;
  for (std::size_t i = 0; i < dist.n_vars(); ++i) {
    const double part = checked(leave_one_out(dist, i, config), "a leave-one-out marginal");
    if (whole < part - tol) {
      throw Error(ErrorCode::FunctionalNonMonotone, "functional '" + f.name + "' increases when variable " +
                                                        std::to_string(i) + " is marginalized out");
    }
    parts += part;
  }
  const double n = static_cast<double>(dist.n_vars());
  return {(n - k) * whole - parts, !f.fragile_on_pure_interactions};
}

MeasureFunctional total_correlation_functional(const EstimatorConfig& config) {
  return {"total_correlation",
          [config](const JointDistribution& d) { return total_correlation(d, config); }, true};
}

MeasureFunctional joint_entropy_functional(const EstimatorConfig& config) {
  return {"joint_entropy", [config](const JointDistribution& d) { return entropy(d, config); }, false};
}

}  // namespace hoinfo
