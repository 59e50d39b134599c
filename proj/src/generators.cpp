#include "hoinfo/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hoinfo {

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::giant_bit: return "giant-bit";
    case GeneratorKind::parity: return "parity";
    case GeneratorKind::independent_product: return "product";
    case GeneratorKind::random: return "random";
    case GeneratorKind::point_mass: return "point-mass";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "giant-bit") return GeneratorKind::giant_bit;
  if (key == "parity" || key == "xor") return GeneratorKind::parity;
  if (key == "product" || key == "independent-product") return GeneratorKind::independent_product;
  if (key == "random" || key == "random-dirichlet-like") return GeneratorKind::random;
  if (key == "point-mass") return GeneratorKind::point_mass;
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + std::string(name) + "'");
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream os;
  os << "gen:" << to_string(spec.kind) << '(';
  switch (spec.kind) {
    case GeneratorKind::giant_bit:
    case GeneratorKind::parity: os << "order=" << spec.order << ",alphabet=" << spec.alphabet; break;
    case GeneratorKind::point_mass: os << "n_vars=" << spec.n_vars << ",alphabet=" << spec.alphabet; break;
    case GeneratorKind::random:
      os << "n_vars=" << spec.n_vars << ",alphabet=" << spec.alphabet << ",seed=" << spec.seed
         << ",concentration=" << spec.concentration;
      break;
    case GeneratorKind::independent_product:
      for (std::size_t i = 0; i < spec.parts.size(); ++i) os << (i ? "," : "") << describe(spec.parts[i]);
      break;
  }
  os << ')';
  return os.str();
}

namespace {

void require_order(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidOrder, "interaction order must be >= 2, got " + std::to_string(k));
}

void require_alphabet(int a, int minimum) {
  if (a < minimum) {
    throw Error(ErrorCode::InvalidArgument,
                "alphabet must be >= " + std::to_string(minimum) + ", got " + std::to_string(a));
  }
}

// SplitMix64.
std::uint64_t next_random(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

JointDistribution giant_bit(int k, int alphabet, const EstimatorConfig& config) {
  require_order(k);
  require_alphabet(alphabet, 2);
  const auto a = static_cast<Symbol>(alphabet);
  std::vector<Entry> entries;
  for (Symbol s = 0; s < a; ++s) entries.push_back({State(k, s), 1.0 / alphabet});
  return build_distribution(std::vector<Symbol>(k, a), entries, config);
}

JointDistribution parity(int k, int alphabet, const EstimatorConfig& config) {
  require_order(k);
  require_alphabet(alphabet, 2);
  const auto a = static_cast<Symbol>(alphabet);
  const double p = 1.0 / std::pow(static_cast<double>(alphabet), k - 1);

  std::vector<Entry> entries;
  State inputs(k - 1, 0);
  for (;;) {
    Symbol total = 0;
    for (Symbol s : inputs) total = (total + s) % a;
    State state = inputs;
    state.push_back(total);
    entries.push_back({std::move(state), p});

    std::size_t v = inputs.size();
    while (v > 0 && ++inputs[v - 1] == a) inputs[--v] = 0;
    if (v == 0) break;
  }
  return build_distribution(std::vector<Symbol>(k, a), entries, config);
}

JointDistribution point_mass(int n_vars, int alphabet, const EstimatorConfig& config) {
  if (n_vars < 1) throw Error(ErrorCode::InvalidArgument, "point mass needs at least one variable");
  require_alphabet(alphabet, 1);
  const Entry entry{State(n_vars, 0), 1.0};
  return build_distribution(std::vector<Symbol>(n_vars, static_cast<Symbol>(alphabet)), {&entry, 1}, config);
}

JointDistribution random_distribution(std::span<const Symbol> cardinalities, std::uint64_t seed,
                                      double concentration, const EstimatorConfig& config) {
  if (cardinalities.empty()) throw Error(ErrorCode::InvalidArgument, "random distribution needs a variable");
  if (!(concentration > 0.0) || !std::isfinite(concentration)) {
    throw Error(ErrorCode::InvalidArgument, "concentration must be a positive finite number");
  }
  const auto count = state_space_size(cardinalities);
  if (!count || *count > config.max_dense_states) {
    throw Error(ErrorCode::TableTooLarge, "random table exceeds max_dense_states");
  }

  std::uint64_t stream = seed;
  std::vector<double> weights(*count);
  double total = 0.0;
  for (double& w : weights) {
    const double u = static_cast<double>((next_random(stream) >> 11) + 1) * 0x1.0p-53;
    w = std::max(std::pow(u, 1.0 / concentration), 1e-300);
    total += w;
  }

  std::vector<Entry> entries;
  entries.reserve(weights.size());
  State state(cardinalities.size(), 0);
  for (double w : weights) {
    entries.push_back({state, w / total});
    for (std::size_t v = state.size(); v-- > 0;) {
      if (++state[v] < cardinalities[v]) break;
      state[v] = 0;
    }
  }
  return build_distribution(std::vector<Symbol>(cardinalities.begin(), cardinalities.end()), entries, config,
                            {.renormalize = false, .representation = Representation::dense});
}

JointDistribution random_distribution(int n_vars, int alphabet, std::uint64_t seed, double concentration,
                                      const EstimatorConfig& config) {
  if (n_vars < 1) throw Error(ErrorCode::InvalidArgument, "random distribution needs at least one variable");
  require_alphabet(alphabet, 1);
  const std::vector<Symbol> cards(n_vars, static_cast<Symbol>(alphabet));
  return random_distribution(cards, seed, concentration, config);
}

JointDistribution compose_independent(std::span<const GeneratorSpec> specs, const EstimatorConfig& config) {
  if (specs.empty()) throw Error(ErrorCode::InvalidArgument, "nothing to compose");
  JointDistribution joint = generate(specs.front(), config);
  for (const GeneratorSpec& s : specs.subspan(1)) joint = product(joint, generate(s, config), config);
  return joint;
}

JointDistribution generate(const GeneratorSpec& spec, const EstimatorConfig& config) {
  switch (spec.kind) {
    case GeneratorKind::giant_bit: return giant_bit(spec.order, spec.alphabet, config);
    case GeneratorKind::parity: return parity(spec.order, spec.alphabet, config);
    case GeneratorKind::point_mass: return point_mass(spec.n_vars, spec.alphabet, config);
    case GeneratorKind::random:
      return random_distribution(spec.n_vars, spec.alphabet, spec.seed, spec.concentration, config);
    case GeneratorKind::independent_product: return compose_independent(spec.parts, config);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

}  // namespace hoinfo
