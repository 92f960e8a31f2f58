#ifndef RAMSEY_RAMSEY_NUMBERS_HPP
#define RAMSEY_RAMSEY_NUMBERS_HPP

#include "ramsey/graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

/// Where an exact table entry comes from. `external` entries are literature
/// values nothing in this library re-derives.
enum class Provenance { paper, computed, external };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct RamseyEntry {
  std::uint64_t value = 0;
  Provenance provenance = Provenance::paper;

  friend bool operator==(const RamseyEntry &, const RamseyEntry &) = default;
};

/// Exact diagonal Ramsey numbers R(k). Entries must be strictly increasing
/// in k and R(1) = 1, R(2) = 2 must be present.
class RamseyTable {
public:
  /// R(1)=1, R(2)=2, R(3)=6 tagged paper; R(4)=18 tagged external.
  static RamseyTable builtin();

  explicit RamseyTable(std::map<unsigned, RamseyEntry> entries);

  std::optional<std::uint64_t> value(unsigned k) const;
  std::uint64_t at(unsigned k) const;
  const std::map<unsigned, RamseyEntry> &entries() const { return entries_; }

  /// Human-readable "{1,2,6,18}".
  std::string summary() const;

  nlohmann::json to_json() const;
  static RamseyTable from_json(const nlohmann::json &j);

private:
  std::map<unsigned, RamseyEntry> entries_;
};

/// True iff alpha(g) < k and omega(g) < k, i.e. g certifies R(k) > |V(g)|.
bool verify_ramsey_witness(const Graph &g, std::size_t k);

struct ScaleGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Largest order whose labelled graphs compute_ramsey_exhaustive will walk
/// (C(7,2) = 21 bits, about two million graphs).
inline constexpr unsigned exhaustive_order_limit = 7;

/// Smallest N <= n_cap such that every labelled graph on N vertices has a
/// k-clique or k-independent set. Enumerates all 2^C(N,2) edge masks per
/// order without isomorphism reduction. Throws ScaleGuardError before
/// touching an order above exhaustive_order_limit, std::runtime_error when
/// n_cap is reached without an answer.
unsigned compute_ramsey_exhaustive(unsigned k, unsigned n_cap);

/// Graph whose edges are the set bits of `mask` over pairs (i, j), i < j,
/// taken in lexicographic order.
Graph graph_from_pair_mask(std::size_t n, std::uint64_t mask);

/// ceil(2^((N-1)/2)); a certified lower bound on R(N). N in 1..127.
std::uint64_t erdos_lower_bound(unsigned N);

/// Dominant term k 2^{k/2} / (e sqrt 2) of the local-lemma lower bound with
/// the o(1) part dropped. Never a certificate.
struct SpencerEstimate {
  double value = 0.0;
  bool certified = false;
};
SpencerEstimate spencer_lower_estimate(unsigned k);

/// ceil(8 log2 t), with log2 t floored at 1.
unsigned log_gap_bound(std::uint64_t t);

struct GapResult {
  unsigned ell = 0;
  std::uint64_t host_order = 0; ///< T = R(ell) + t
};

struct TableInsufficientError : std::runtime_error {
  TableInsufficientError(std::uint64_t t, const std::string &what)
      : std::runtime_error(what), t(t) {}
  std::uint64_t t;
};

/// Smallest ell with R(ell), R(ell+1) both tabulated and
/// R(ell+1) > R(ell) + t. Defined for every t >= 1.
GapResult smallest_gap(std::uint64_t t, const RamseyTable &table);

/// smallest_gap restricted to t > 3, additionally asserting
/// ell <= ceil(8 log2 t).
GapResult lemma5_ell(std::uint64_t t, const RamseyTable &table);

/// Paley graph on Z_q: i ~ j iff i - j is a nonzero square mod q.
/// q must be a prime with q = 1 (mod 4).
Graph paley_graph(unsigned q);

} // namespace ramsey

#endif // RAMSEY_RAMSEY_NUMBERS_HPP
