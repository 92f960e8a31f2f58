#ifndef RAMSEY_HARNESS_HPP
#define RAMSEY_HARNESS_HPP

#include "ramsey/compose.hpp"
#include "ramsey/host_graph.hpp"
#include "ramsey/instance.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

/// Instance order used when a caller does not pick one: max(5, 2k - 2).
std::size_t default_instance_order(unsigned k);

/// Seeded refinement instance with witnesses attached.
///   target yes: a k-clique or k-independent set is planted.
///   target no: rejection-sampled from G(n, 1/2) and certified by the
///   brute-force oracle to have max(alpha, omega) = k - 1 exactly; after
///   half the budget a (k-1)-clique and a (k-1)-independent set are planted
///   on disjoint vertices before sampling the rest.
/// Throws std::invalid_argument when no such graph can exist and
/// std::runtime_error when the budget runs out.
Instance gen_refinement_instance(std::size_t n, unsigned k, Answer target,
                                 std::uint64_t seed,
                                 std::size_t budget = 20000);

enum class Stratum { all_no, one_yes, mixed };
std::string_view to_string(Stratum s);

struct TrialRecord {
  std::size_t trial = 0;
  std::size_t t = 0;
  unsigned k = 0;
  HostStrategy strategy = HostStrategy::turan;
  std::uint64_t seed = 0;
  Stratum stratum = Stratum::all_no;
  Answer input_or = Answer::no;
  Answer composed = Answer::no;
  unsigned k_prime = 0;
  unsigned ell = 0;
  std::size_t vertices = 0;
  /// Measured max(alpha, omega) of G'; filled for the all-no stratum.
  std::optional<std::size_t> max_homogeneous;
  bool agree = false;
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::vector<TrialRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0 && !records.empty(); }
  /// Wall times are left out unless asked for, so equal seeds give equal
  /// bytes.
  nlohmann::json to_json(bool with_timing = false) const;
};

struct VerifyConfig {
  std::size_t t = 1;
  unsigned k = 3;
  HostStrategy strategy = HostStrategy::turan;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t instance_order = 0; ///< 0 -> default_instance_order(k)
  std::size_t vertex_cap = 80;    ///< largest |V(G')| the run will decide
};

struct FeasibilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Composes random yes/no mixes and compares the OR of the inputs
/// (brute-force oracle) with the composed answer (exact solver). Trials
/// cycle through the strata all-no, exactly-one-yes, mixed; all-no trials
/// must also have max(alpha, omega) of G' equal to ell (2k - 2).
VerificationReport verify_composition(const VerifyConfig &config);

struct SharpnessConfig {
  std::size_t t = 1;
  unsigned k = 3;
  HostStrategy strategy = HostStrategy::turan;
  std::size_t seeds = 20;
  std::uint64_t seed = 0;
  std::size_t instance_order = 0;
};

struct SharpnessRecord {
  std::size_t seed_index = 0;
  unsigned ell = 0;
  unsigned k_prime = 0;
  std::size_t vertices = 0;
  std::size_t max_all_no = 0;
  std::vector<bool> flip_reaches_k_prime; ///< one entry per input index
  bool pass = false;
};

struct SharpnessReport {
  std::vector<SharpnessRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0 && !records.empty(); }
  nlohmann::json to_json() const;
};

/// For each seed: all-no inputs must give max(alpha, omega) = ell (2k - 2)
/// exactly, and replacing any single input by a yes-instance must give a
/// homogeneous set of size ell (2k - 2) + 1.
SharpnessReport check_sharpness(const SharpnessConfig &config);

struct BlowupRow {
  std::size_t t = 0;
  unsigned k = 0;
  HostStrategy strategy = HostStrategy::turan;
  std::optional<unsigned> ell;
  std::optional<unsigned> k_prime;
  std::optional<std::size_t> vertices;
};

/// Parameter growth per (t, k, strategy). |V(G')| assumes instances of
/// `instance_order` vertices (0 -> default_instance_order(k)). Rows whose
/// strategy cannot build a host are reported with empty values.
std::vector<BlowupRow> blowup_report(std::span<const std::size_t> t_values,
                                     std::span<const unsigned> k_values,
                                     std::span<const HostStrategy> strategies,
                                     std::size_t instance_order = 0,
                                     std::uint64_t seed = 0);

/// Header `t,k,strategy,ell,k_prime,k_prime_over_k,vertices`; missing
/// values are written as NA.
std::string blowup_csv(std::span<const BlowupRow> rows);

} // namespace ramsey

#endif // RAMSEY_HARNESS_HPP
