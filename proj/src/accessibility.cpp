#include "pmsat/accessibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pmsat/errors.hpp"
#include "pmsat/instance.hpp"
#include "pmsat/seeding.hpp"

namespace pmsat {

namespace {

void require_dimension(std::size_t n) {
  if (n == 0) throw InvalidParameter("dimension n must be at least 1");
}

void check_prior(std::size_t n, const WitnessPrior& prior) {
  require_dimension(n);
  if (prior.kind == WitnessPrior::Kind::kUniformSizeK && (prior.k == 0 || prior.k > n)) {
    throw InvalidParameter("size-k prior needs 1 <= k <= n");
  }
}

// C(n, k) in floating point; exact while it fits the mantissa.
double binomial(std::size_t n, std::size_t k) {
  if (k > n - k) k = n - k;
  double c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

std::string fmt(double value, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

std::vector<std::uint64_t> eliminative_samples(std::size_t n) {
  if (n >= 63) return {};
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> qs = {0, total / 4, total / 2, 3 * total / 4, total - 1};
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

}  // namespace

std::string WitnessPrior::to_string() const {
  return kind == Kind::kUniformAllSubsets ? std::string("uniform-all-subsets")
                                          : "uniform-size-" + std::to_string(k);
}

double witness_entropy(std::size_t n, const WitnessPrior& prior) {
  check_prior(n, prior);
  if (prior.kind == WitnessPrior::Kind::kUniformAllSubsets) return static_cast<double>(n);
  return std::log2(binomial(n, prior.k));
}

double query_success_prob(std::size_t n, const WitnessPrior& prior) {
  check_prior(n, prior);
  if (prior.kind == WitnessPrior::Kind::kUniformAllSubsets) return std::exp2(-static_cast<double>(n));
  return 1.0 / binomial(n, prior.k);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double per_query_information(std::size_t n, const WitnessPrior& prior) {
  return binary_entropy(query_success_prob(n, prior));
}

double eliminative_information(std::size_t n, std::uint64_t failed_queries) {
  require_dimension(n);
  if (n >= 63) throw InvalidParameter("eliminative information needs n < 63");
  std::uint64_t total = std::uint64_t{1} << n;
  if (failed_queries >= total) {
    throw InvalidParameter("failed query count must be below 2^n = " + std::to_string(total));
  }
  return static_cast<double>(n) - std::log2(static_cast<double>(total - failed_queries));
}

AccessibilityProfile analytic_profile(std::size_t n, const WitnessPrior& prior) {
  AccessibilityProfile profile;
  profile.n = n;
  profile.prior = prior;
  profile.entropy_bits = witness_entropy(n, prior);
  profile.success_prob = query_success_prob(n, prior);
  profile.per_query_bits = per_query_information(n, prior);
  return profile;
}

AccessibilityProfile empirical_query_experiment(std::size_t n, std::size_t k, const WitnessPrior& prior,
                                                std::size_t num_instances, std::size_t queries_per_instance,
                                                std::uint64_t seed) {
  AccessibilityProfile profile = analytic_profile(n, prior);
  if (num_instances == 0 || queries_per_instance == 0) return profile;

  std::vector<std::size_t> indices(n);
  for (std::size_t i = 0; i < num_instances; ++i) {
    std::uint64_t instance_seed = derive_seed(seed, SeedStream::kExperiment, i);
    PMatrixInstance instance = generate_unique_violation(n, k, instance_seed).redacted();
    Rng rng = make_rng(instance_seed, SeedStream::kGuesses);
    for (std::size_t q = 0; q < queries_per_instance; ++q) {
      std::uint64_t bits = 0;
      if (prior.kind == WitnessPrior::Kind::kUniformAllSubsets) {
        bits = n >= 64 ? rng() : (rng() & ((std::uint64_t{1} << n) - 1));
      } else {
        std::iota(indices.begin(), indices.end(), 0);
        for (std::size_t s = 0; s < prior.k; ++s) {
          std::uniform_int_distribution<std::size_t> pick(s, n - 1);
          std::swap(indices[s], indices[pick(rng)]);
          bits |= std::uint64_t{1} << indices[s];
        }
      }
      ++profile.queries_examined;
      if (oracle_query_sign(instance, SubsetMask(n, bits))) ++profile.successes;
    }
  }
  double total = static_cast<double>(profile.queries_examined);
  profile.empirical_frequency = static_cast<double>(profile.successes) / total;
  profile.standard_error = std::sqrt(profile.success_prob * (1.0 - profile.success_prob) / total);
  return profile;
}

std::string to_json(const AccessibilityProfile& profile) {
  nlohmann::ordered_json doc;
  doc["n"] = profile.n;
  doc["prior"] = profile.prior.to_string();
  doc["entropy_bits"] = profile.entropy_bits;
  doc["success_prob"] = profile.success_prob;
  doc["per_query_bits"] = profile.per_query_bits;
  doc["queries_examined"] = profile.queries_examined;
  doc["successes"] = profile.successes;
  doc["empirical_frequency"] =
      profile.empirical_frequency ? nlohmann::ordered_json(*profile.empirical_frequency) : nlohmann::ordered_json();
  doc["standard_error"] =
      profile.standard_error ? nlohmann::ordered_json(*profile.standard_error) : nlohmann::ordered_json();
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (std::uint64_t q : eliminative_samples(profile.n)) {
    curve.push_back({{"failed_queries", q}, {"bits", eliminative_information(profile.n, q)}});
  }
  doc["eliminative"] = std::move(curve);
  return doc.dump(2) + "\n";
}

std::string render_accessibility_csv(const AccessibilityProfile& profile) {
  std::ostringstream out;
  out << "n,prior,H(W),Pr(Y=1),I_per_query,empirical_freq,std_error\n";
  out << profile.n << ',' << profile.prior.to_string() << ',' << fmt(profile.entropy_bits, "%.4f") << ','
      << fmt(profile.success_prob, "%.6g") << ',' << fmt(profile.per_query_bits, "%.5g") << ','
      << (profile.empirical_frequency ? fmt(*profile.empirical_frequency, "%.6g") : std::string()) << ','
      << (profile.standard_error ? fmt(*profile.standard_error, "%.3g") : std::string()) << '\n';
  out << "\nfailed_queries,eliminative_bits\n";
  for (std::uint64_t q : eliminative_samples(profile.n)) {
    out << q << ',' << fmt(eliminative_information(profile.n, q), "%.4f") << '\n';
  }
  return out.str();
}

std::string render_accessibility_markdown(const AccessibilityProfile& profile) {
  std::ostringstream out;
  out << "| n | prior | H(W) bits | Pr(Y=1) | I per query (bits) |\n";
  out << "|---:|---|---:|---:|---:|\n";
  out << "| " << profile.n << " | " << profile.prior.to_string() << " | " << fmt(profile.entropy_bits, "%.4f")
      << " | " << fmt(profile.success_prob, "%.6g") << " | " << fmt(profile.per_query_bits, "%.5g") << " |\n";
  if (profile.empirical_frequency) {
    out << "\nEmpirical success frequency " << fmt(*profile.empirical_frequency, "%.6g") << " over "
        << profile.queries_examined << " queries (standard error " << fmt(*profile.standard_error, "%.3g")
        << ").\n";
  }
  out << "\n| failed queries q | eliminative bits |\n|---:|---:|\n";
  for (std::uint64_t q : eliminative_samples(profile.n)) {
    out << "| " << q << " | " << fmt(eliminative_information(profile.n, q), "%.4f") << " |\n";
  }
  return out.str();
}

}  // namespace pmsat
