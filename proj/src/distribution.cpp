#include "hoinfo/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace hoinfo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::StateOutOfRange: return "StateOutOfRange";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::OverlappingSubsets: return "OverlappingSubsets";
    case ErrorCode::SystemTooSmall: return "SystemTooSmall";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::FunctionalNegative: return "FunctionalNegative";
    case ErrorCode::FunctionalNonMonotone: return "FunctionalNonMonotone";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void EstimatorConfig::validate() const {
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw Error(ErrorCode::InvalidArgument, "log_base must be a finite number > 1");
  }
  if (!(normalization_tolerance >= 0.0) || !(zero_tolerance >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be non-negative");
  }
  if (max_dense_states == 0) {
    throw Error(ErrorCode::InvalidArgument, "max_dense_states must be positive");
  }
}

// ---------------------------------------------------------------------------
// VariableSubset

VariableSubset::VariableSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::InvalidSubset, "variable subset contains a repeated index");
  }
}

VariableSubset VariableSubset::all(std::size_t n_vars) {
  std::vector<std::size_t> idx(n_vars);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return VariableSubset(std::move(idx));
}

VariableSubset VariableSubset::all_except(std::size_t n_vars, std::size_t excluded) {
  std::vector<std::size_t> idx;
  idx.reserve(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (i != excluded) idx.push_back(i);
  }
  return VariableSubset(std::move(idx));
}

bool VariableSubset::contains(std::size_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool VariableSubset::disjoint_from(const VariableSubset& other) const noexcept {
  return std::none_of(indices_.begin(), indices_.end(), [&](std::size_t i) { return other.contains(i); });
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> state_space_size(std::span<const Symbol> cardinalities) noexcept {
  std::uint64_t total = 1;
  for (Symbol c : cardinalities) {
    if (c == 0) return 0;
    if (total > UINT64_MAX / c) return std::nullopt;
    total *= c;
  }
  return total;
}

namespace {

bool fits_dense(std::span<const Symbol> cards, const EstimatorConfig& config) {
  const auto count = state_space_size(cards);
  return count && *count <= config.max_dense_states;
}

std::vector<std::uint64_t> strides_for(std::span<const Symbol> cards) {
  std::vector<std::uint64_t> strides(cards.size(), 1);
  for (std::size_t v = cards.size(); v-- > 1;) strides[v - 1] = strides[v] * cards[v];
  return strides;
}

std::uint64_t dense_index(std::span<const Symbol> state, std::span<const std::uint64_t> strides) {
  std::uint64_t idx = 0;
  for (std::size_t v = 0; v < state.size(); ++v) idx += state[v] * strides[v];
  return idx;
}

bool state_less(std::span<const Symbol> a, std::span<const Symbol> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

class DistributionAccess {
 public:
  static JointDistribution make_dense(std::vector<Symbol> cards, std::vector<double> table) {
    JointDistribution d;
    d.cardinalities_ = std::move(cards);
    d.dense_ = true;
    d.masses_ = std::move(table);
    return d;
  }

  // `states` must be sorted and unique; zero masses are dropped here.
  static JointDistribution make_sparse(std::vector<Symbol> cards, std::vector<Symbol> states,
                                       std::vector<double> masses) {
    JointDistribution d;
    const std::size_t n = cards.size();
    d.cardinalities_ = std::move(cards);
    d.dense_ = false;
    d.masses_.reserve(masses.size());
    d.states_.reserve(states.size());
    for (std::size_t e = 0; e < masses.size(); ++e) {
      if (masses[e] > 0.0) {
        d.masses_.push_back(masses[e]);
        d.states_.insert(d.states_.end(), states.begin() + e * n, states.begin() + (e + 1) * n);
      }
    }
    return d;
  }

  static std::vector<double>& masses(JointDistribution& d) { return d.masses_; }
};

// ---------------------------------------------------------------------------
// JointDistribution

double JointDistribution::mass(std::span<const Symbol> state) const {
  if (state.size() != n_vars()) {
    throw Error(ErrorCode::StateOutOfRange, "state arity does not match the number of variables");
  }
  for (std::size_t v = 0; v < state.size(); ++v) {
    if (state[v] >= cardinalities_[v]) throw Error(ErrorCode::StateOutOfRange, "symbol outside alphabet");
  }
  if (dense_) return masses_[dense_index(state, strides_for(cardinalities_))];

  const std::size_t n = n_vars();
  std::size_t lo = 0, hi = masses_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (state_less(std::span<const Symbol>(states_.data() + mid * n, n), state)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < masses_.size() && std::equal(state.begin(), state.end(), states_.begin() + lo * n)) {
    return masses_[lo];
  }
  return 0.0;
}

double JointDistribution::total_mass() const noexcept {
  double total = 0.0;
  for (double p : masses_) total += p;
  return total;
}

JointDistribution JointDistribution::to_dense(const EstimatorConfig& config) const {
  if (dense_) return *this;
  if (!fits_dense(cardinalities_, config)) {
    throw Error(ErrorCode::TableTooLarge, "state space exceeds max_dense_states");
  }
  const auto strides = strides_for(cardinalities_);
  std::vector<double> table(*state_count(), 0.0);
  for_each_entry([&](std::span<const Symbol> s, double p) { table[dense_index(s, strides)] = p; });
  return DistributionAccess::make_dense(cardinalities_, std::move(table));
}

JointDistribution JointDistribution::to_sparse() const {
  if (!dense_) return *this;
  std::vector<Symbol> states;
  std::vector<double> masses;
  for_each_entry([&](std::span<const Symbol> s, double p) {
    states.insert(states.end(), s.begin(), s.end());
    masses.push_back(p);
  });
  return DistributionAccess::make_sparse(cardinalities_, std::move(states), std::move(masses));
}

// ---------------------------------------------------------------------------
// Operations

JointDistribution build_distribution(std::vector<Symbol> cardinalities, std::span<const Entry> entries,
                                     const EstimatorConfig& config, const BuildOptions& options) {
  config.validate();
  if (cardinalities.empty()) throw Error(ErrorCode::InvalidArgument, "at least one variable is required");
  for (Symbol c : cardinalities) {
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "cardinalities must be positive");
  }
  const std::size_t n = cardinalities.size();
  for (const Entry& e : entries) {
    if (e.state.size() != n) {
      throw Error(ErrorCode::StateOutOfRange, "state has " + std::to_string(e.state.size()) +
                                                  " symbols, expected " + std::to_string(n));
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (e.state[v] >= cardinalities[v]) {
        throw Error(ErrorCode::StateOutOfRange, "symbol " + std::to_string(e.state[v]) + " of variable " +
                                                    std::to_string(v) + " is outside alphabet of size " +
                                                    std::to_string(cardinalities[v]));
      }
    }
    if (std::isnan(e.p) || std::isinf(e.p)) throw Error(ErrorCode::InvalidArgument, "mass is not finite");
    if (e.p < 0.0) throw Error(ErrorCode::NegativeMass, "mass " + std::to_string(e.p) + " is negative");
  }

  bool dense = false;
  switch (options.representation) {
    case Representation::dense:
      if (!fits_dense(cardinalities, config)) {
        throw Error(ErrorCode::TableTooLarge, "dense table would exceed max_dense_states");
      }
      dense = true;
      break;
    case Representation::sparse: dense = false; break;
    case Representation::automatic: dense = fits_dense(cardinalities, config); break;
  }

  JointDistribution dist = [&] {
    if (dense) {
      const auto strides = strides_for(cardinalities);
      std::vector<double> table(*state_space_size(cardinalities), 0.0);
      for (const Entry& e : entries) table[dense_index(e.state, strides)] += e.p;
      return DistributionAccess::make_dense(std::move(cardinalities), std::move(table));
    }
    // Stable sort keeps duplicates in input order so they sum exactly as in the dense path.
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return state_less(entries[a].state, entries[b].state);
    });
    std::vector<Symbol> states;
    std::vector<double> masses;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Entry& e = entries[order[k]];
      if (k > 0 && e.state == entries[order[k - 1]].state) {
        masses.back() += e.p;
      } else {
        states.insert(states.end(), e.state.begin(), e.state.end());
        masses.push_back(0.0 + e.p);
      }
    }
    return DistributionAccess::make_sparse(std::move(cardinalities), std::move(states), std::move(masses));
  }();

  const double total = dist.total_mass();
  if (options.renormalize) {
    if (!(total > 0.0)) throw Error(ErrorCode::NotNormalized, "cannot renormalize a distribution with zero mass");
    for (double& p : DistributionAccess::masses(dist)) p /= total;
  } else if (std::abs(total - 1.0) > config.normalization_tolerance) {
    throw Error(ErrorCode::NotNormalized, "masses sum to " + std::to_string(total));
  }
  return dist;
}

JointDistribution marginalize(const JointDistribution& dist, const VariableSubset& keep,
                              const EstimatorConfig& config) {
  if (keep.empty()) throw Error(ErrorCode::EmptySubset, "marginal over an empty variable set");
  const std::size_t n = dist.n_vars();
  for (std::size_t i : keep.indices()) {
    if (i >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "variable " + std::to_string(i) + " does not exist in a " + std::to_string(n) + "-variable system");
    }
  }
  if (keep.size() == n) return dist;

  const auto cards = dist.cardinalities();
  std::vector<Symbol> target_cards;
  for (std::size_t i : keep.indices()) target_cards.push_back(cards[i]);

  if (fits_dense(target_cards, config)) {
    const auto target_strides = strides_for(target_cards);
    std::vector<double> table(*state_space_size(target_cards), 0.0);
    // Per source variable: how much its digit moves the target index.
    std::vector<std::uint64_t> contrib(n, 0);
    for (std::size_t j = 0; j < keep.size(); ++j) contrib[keep.indices()[j]] = target_strides[j];

    dist.for_each_entry([&](std::span<const Symbol> s, double p) {
      std::uint64_t t = 0;
      for (std::size_t v = 0; v < n; ++v) t += s[v] * contrib[v];
      table[t] += p;
    });
    return DistributionAccess::make_dense(std::move(target_cards), std::move(table));
  }

  std::map<State, double> acc;
  State projected(keep.size());
  dist.for_each_entry([&](std::span<const Symbol> s, double p) {
    for (std::size_t j = 0; j < keep.size(); ++j) projected[j] = s[keep.indices()[j]];
    acc[projected] += p;
  });
  std::vector<Symbol> states;
  std::vector<double> masses;
  for (const auto& [s, p] : acc) {
    states.insert(states.end(), s.begin(), s.end());
    masses.push_back(p);
  }
  return DistributionAccess::make_sparse(std::move(target_cards), std::move(states), std::move(masses));
}

JointDistribution leave_one_out(const JointDistribution& dist, std::size_t index, const EstimatorConfig& config) {
  if (index >= dist.n_vars()) {
    throw Error(ErrorCode::IndexOutOfRange, "variable " + std::to_string(index) + " does not exist");
  }
  if (dist.n_vars() < 2) throw Error(ErrorCode::SystemTooSmall, "leave-one-out needs at least two variables");
  return marginalize(dist, VariableSubset::all_except(dist.n_vars(), index), config);
}

JointDistribution product(const JointDistribution& a, const JointDistribution& b, const EstimatorConfig& config) {
  std::vector<Symbol> cards(a.cardinalities().begin(), a.cardinalities().end());
  cards.insert(cards.end(), b.cardinalities().begin(), b.cardinalities().end());

  if (fits_dense(cards, config)) {
    const auto da = a.to_dense(config);
    const auto db = b.to_dense(config);
    const auto strides_a = strides_for(a.cardinalities());
    const auto strides_b = strides_for(b.cardinalities());
    const std::uint64_t size_b = *b.state_count();
    std::vector<double> table(*state_space_size(cards), 0.0);
    da.for_each_entry([&](std::span<const Symbol> sa, double pa) {
      const std::uint64_t base = dense_index(sa, strides_a) * size_b;
      db.for_each_entry([&](std::span<const Symbol> sb, double pb) {
        table[base + dense_index(sb, strides_b)] = pa * pb;
      });
    });
    return DistributionAccess::make_dense(std::move(cards), std::move(table));
  }

  std::size_t nnz_a = 0, nnz_b = 0;
  a.for_each_entry([&](std::span<const Symbol>, double) { ++nnz_a; });
  b.for_each_entry([&](std::span<const Symbol>, double) { ++nnz_b; });
  if (nnz_b != 0 && nnz_a > config.max_dense_states / nnz_b) {
    throw Error(ErrorCode::TableTooLarge, "product support exceeds max_dense_states entries");
  }
  std::vector<Symbol> states;
  std::vector<double> masses;
  a.for_each_entry([&](std::span<const Symbol> sa, double pa) {
    b.for_each_entry([&](std::span<const Symbol> sb, double pb) {
      states.insert(states.end(), sa.begin(), sa.end());
      states.insert(states.end(), sb.begin(), sb.end());
      masses.push_back(pa * pb);
    });
  });
  return DistributionAccess::make_sparse(std::move(cards), std::move(states), std::move(masses));
}

double entropy(const JointDistribution& dist, const EstimatorConfig& config) {
  double h = 0.0;
  dist.for_each_entry([&](std::span<const Symbol>, double p) {
    if (p >= kMassFloor) h -= p * std::log2(p);
  });
  if (config.log_base != 2.0) h /= std::log2(config.log_base);
  return h;
}

}  // namespace hoinfo
