#include "pmsat/instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "pmsat/errors.hpp"
#include "pmsat/seeding.hpp"

namespace pmsat {

namespace {

void check_subset(const PMatrixInstance& instance, const SubsetMask& subset) {
  if (subset.width() != instance.n()) {
    throw DimensionMismatch("subset width " + std::to_string(subset.width()) +
                            " does not match instance dimension " + std::to_string(instance.n()));
  }
}

void check_exhaustive(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) throw LimitExceeded(what, n, limit);
  if (n > kMaxMaskWidth) throw LimitExceeded(what, n, kMaxMaskWidth);
}

// Determinant of the principal submatrix of an n x n integer matrix given
// by cell(r, c), restricted to the indices set in bits.
template <typename Cell>
Integer submatrix_determinant(std::size_t n, std::uint64_t bits, Cell cell) {
  std::size_t idx[kMaxMaskWidth];
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1U) idx[k++] = i;
  }
  std::vector<Integer> cells(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) cells[r * k + c] = cell(idx[r], idx[c]);
  }
  return bareiss_determinant(std::move(cells), k);
}

Integer scaled_minor(const PMatrixInstance& instance, std::uint64_t bits) {
  return submatrix_determinant(instance.n(), bits, [&](std::size_t r, std::size_t c) -> const Integer& {
    return instance.scaled(r, c);
  });
}

// Only the sign matters for the oracle, and s > 0, so the integer
// determinant of the scaled submatrix has the same sign as the minor.
bool scaled_minor_nonpositive(const PMatrixInstance& instance, std::uint64_t bits) {
  if (bits == 0) return false;
  return sgn(scaled_minor(instance, bits)) <= 0;
}

}  // namespace

PMatrixInstance::PMatrixInstance(RationalMatrix base, std::vector<Rational> u,
                                 std::vector<Rational> v, std::optional<SubsetMask> witness,
                                 std::size_t k, std::uint64_t seed)
    : base_(std::move(base)),
      u_(std::move(u)),
      v_(std::move(v)),
      witness_(std::move(witness)),
      k_(k),
      seed_(seed) {
  std::size_t n = base_.size();
  if (u_.size() != n || v_.size() != n) {
    throw DimensionMismatch("perturbation vectors must have length " + std::to_string(n));
  }
  if (n > kMaxMaskWidth) throw LimitExceeded("instance dimension", n, kMaxMaskWidth);
  if (witness_ && witness_->width() != n) {
    throw DimensionMismatch("witness width does not match instance dimension");
  }

  scale_ = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational entry = perturbed(r, c);
      mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), entry.get_den_mpz_t());
    }
  }
  scaled_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Rational entry = perturbed(r, c) * scale_;
      scaled_[r * n + c] = entry.get_num();
    }
  }
}

Rational PMatrixInstance::perturbed(std::size_t row, std::size_t col) const {
  return base_.at(row, col) + u_[row] * v_[col];
}

PMatrixInstance PMatrixInstance::redacted() const { return with_witness(std::nullopt); }

PMatrixInstance PMatrixInstance::with_witness(std::optional<SubsetMask> witness) const {
  PMatrixInstance copy = *this;
  if (witness && witness->width() != n()) {
    throw DimensionMismatch("witness width does not match instance dimension");
  }
  copy.witness_ = std::move(witness);
  return copy;
}

Rational principal_minor(const PMatrixInstance& instance, const SubsetMask& subset) {
  check_subset(instance, subset);
  Integer det = scaled_minor(instance, subset.bits());
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), instance.scale().get_mpz_t(), subset.count());
  Rational value(det, denom);
  value.canonicalize();
  return value;
}

bool is_p_matrix(const RationalMatrix& matrix, std::size_t exhaustive_limit) {
  std::size_t n = matrix.size();
  check_exhaustive(n, exhaustive_limit, "P-matrix test");
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), matrix.at(r, c).get_den_mpz_t());
    }
  }
  std::vector<Integer> scaled(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      scaled[r * n + c] = Rational(matrix.at(r, c) * scale).get_num();
    }
  }
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    Integer det = submatrix_determinant(
        n, bits, [&](std::size_t r, std::size_t c) -> const Integer& { return scaled[r * n + c]; });
    if (sgn(det) <= 0) return false;
  }
  return true;
}

PMatrixInstance build_unique_violation(const SubsetMask& witness, std::uint64_t seed) {
  std::size_t n = witness.width();
  std::size_t k = witness.count();
  if (n == 0 || k == 0) throw InvalidParameter("witness must be a nonempty subset");

  Rational inside(-static_cast<long>(2 * k + 1), static_cast<unsigned long>(2 * k * k));
  inside.canonicalize();
  const Rational outside = 2;

  std::vector<Rational> u(n);
  std::vector<Rational> v(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) u[i] = witness.contains(i) ? inside : outside;
  return PMatrixInstance(RationalMatrix::identity(n), std::move(u), std::move(v), witness, k, seed);
}

PMatrixInstance generate_unique_violation(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("dimension n must be at least 1");
  if (k == 0 || k > n) {
    throw InvalidParameter("witness size k must satisfy 1 <= k <= n (got k=" + std::to_string(k) +
                           ", n=" + std::to_string(n) + ")");
  }
  if (n > kMaxMaskWidth) throw LimitExceeded("instance dimension", n, kMaxMaskWidth);

  Rng rng = make_rng(seed, SeedStream::kWitness);
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  // Partial Fisher-Yates: the first k slots are a uniform size-k subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(indices[i], indices[pick(rng)]);
  }
  indices.resize(k);
  return build_unique_violation(SubsetMask::from_indices(n, indices), seed);
}

std::vector<SubsetMask> nonpositive_minors(const PMatrixInstance& instance,
                                           const VerifyOptions& options) {
  std::size_t n = instance.n();
  check_exhaustive(n, options.exhaustive_limit, "exhaustive minor enumeration");
  std::uint64_t total = std::uint64_t{1} << n;
  unsigned jobs = std::max(1U, options.jobs);
  if (total < 4096) jobs = 1;

  std::vector<std::vector<std::uint64_t>> found(jobs);
  auto scan = [&](unsigned worker) {
    std::uint64_t begin = total * worker / jobs;
    std::uint64_t end = total * (worker + 1) / jobs;
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      if (scaled_minor_nonpositive(instance, bits)) found[worker].push_back(bits);
    }
  };
  if (jobs == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(scan, w);
  }

  std::vector<SubsetMask> result;
  for (const auto& chunk : found) {
    for (std::uint64_t bits : chunk) result.emplace_back(n, bits);
  }
  return result;
}

SubsetMask verify_unique_violation(const PMatrixInstance& instance, const VerifyOptions& options) {
  std::vector<SubsetMask> violations = nonpositive_minors(instance, options);
  if (violations.size() == 1) return violations.front();

  std::vector<std::uint64_t> offending;
  for (std::size_t i = 0; i < violations.size() && i < 64; ++i) {
    offending.push_back(violations[i].bits());
  }
  std::string what = violations.empty()
                         ? std::string("no subset has a non-positive principal minor")
                         : std::to_string(violations.size()) +
                               " subsets have non-positive principal minors";
  throw UniquenessViolation(what, std::move(offending));
}

bool oracle_query_sign(const PMatrixInstance& instance, const SubsetMask& guess) {
  check_subset(instance, guess);
  return scaled_minor_nonpositive(instance, guess.bits());
}

bool oracle_query_equality(const PMatrixInstance& instance, const SubsetMask& guess) {
  check_subset(instance, guess);
  if (instance.witness()) return *instance.witness() == guess;
  return oracle_query_sign(instance, guess);
}

DirectSearchResult direct_search(const PMatrixInstance& instance, SearchOrder order,
                                 std::uint64_t seed, std::size_t exhaustive_limit) {
  std::size_t n = instance.n();
  check_exhaustive(n, exhaustive_limit, "direct search");
  std::uint64_t total = std::uint64_t{1} << n;

  DirectSearchResult result;
  if (order == SearchOrder::kLexicographic) {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      ++result.trials;
      if (scaled_minor_nonpositive(instance, bits)) {
        result.witness = SubsetMask(n, bits);
        return result;
      }
    }
  } else {
    std::vector<std::uint64_t> order_masks(total);
    std::iota(order_masks.begin(), order_masks.end(), std::uint64_t{0});
    Rng rng = make_rng(seed, SeedStream::kDirectSearch);
    std::shuffle(order_masks.begin(), order_masks.end(), rng);
    for (std::uint64_t bits : order_masks) {
      ++result.trials;
      if (scaled_minor_nonpositive(instance, bits)) {
        result.witness = SubsetMask(n, bits);
        return result;
      }
    }
  }
  throw InvalidInstance("direct search exhausted all " + std::to_string(total) +
                        " subsets without a non-positive minor");
}

}  // namespace pmsat
