#include "ramsey/solver.hpp"

#include "ramsey/graph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ramsey {

std::string_view to_string(HomogeneousKind kind) {
  return kind == HomogeneousKind::clique ? "clique" : "independent-set";
}

bool is_clique(const Graph &g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j]))
        return false;
  return true;
}

bool is_independent_set(const Graph &g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        return false;
  return true;
}

bool certifies(const Graph &g, const HomogeneousWitness &w) {
  VertexSet sorted = w.members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (!sorted.empty() && sorted.back() >= g.size())
    return false;
  return w.kind == HomogeneousKind::clique ? is_clique(g, sorted)
                                           : is_independent_set(g, sorted);
}

namespace {

// Branch and bound over bitset candidate sets. Vertices are renumbered by
// non-increasing degree so the colouring in each node visits high-degree
// vertices first; branching walks colour classes from the highest bound down.
class CliqueSearch {
public:
  // target == 0 maximises; otherwise stops at the first clique of `target`
  // vertices. Only cliques larger than `lower` are reported.
  CliqueSearch(const Graph &g, std::size_t target, std::size_t lower)
      : n_(g.size()), words_(words_for(g.size())), target_(target),
        best_size_(target ? target - 1 : lower) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<Vertex> position(n_);
    for (std::size_t i = 0; i < n_; ++i)
      position[order_[i]] = static_cast<Vertex>(i);

    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      bits::for_each(g.row(order_[i]), [&](std::size_t old) {
        bits::set(row(i), position[old]);
      });

    candidates_.assign((n_ + 1) * words_, 0);
    scratch_.assign(2 * words_, 0);
    colour_vertex_.assign((n_ + 1) * n_, 0);
    colour_bound_.assign((n_ + 1) * n_, 0);
  }

  // Empty when nothing beats the initial bound.
  VertexSet run() {
    if (n_ == 0 || (target_ != 0 && target_ > n_))
      return {};
    auto root = level(0);
    for (std::size_t v = 0; v < n_; ++v)
      bits::set(root, v);
    expand(0);
    VertexSet out;
    out.reserve(best_.size());
    for (Vertex v : best_)
      out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  std::span<Word> row(std::size_t v) {
    return {adj_.data() + v * words_, words_};
  }
  std::span<Word> level(std::size_t depth) {
    return {candidates_.data() + depth * words_, words_};
  }

  // Greedy sequential colouring of `p`; fills the vertex/bound arrays for
  // this depth in increasing bound order and returns how many were written.
  std::size_t colour(std::span<const Word> p, std::size_t depth) {
    std::span<Word> uncoloured{scratch_.data(), words_};
    std::span<Word> cls{scratch_.data() + words_, words_};
    std::copy(p.begin(), p.end(), uncoloured.begin());
    Vertex *verts = colour_vertex_.data() + depth * n_;
    std::uint32_t *bounds = colour_bound_.data() + depth * n_;

    std::size_t written = 0;
    std::uint32_t k = 0;
    while (bits::any(uncoloured)) {
      ++k;
      std::copy(uncoloured.begin(), uncoloured.end(), cls.begin());
      for (std::size_t w = 0; w < words_; ++w) {
        while (cls[w]) {
          const std::size_t v =
              w * word_bits + static_cast<std::size_t>(std::countr_zero(cls[w]));
          bits::reset(uncoloured, v);
          bits::reset(cls, v);
          const Word *nv = adj_.data() + v * words_;
          for (std::size_t x = w; x < words_; ++x)
            cls[x] &= ~nv[x];
          verts[written] = static_cast<Vertex>(v);
          bounds[written] = k;
          ++written;
        }
      }
    }
    return written;
  }

  void expand(std::size_t depth) {
    std::span<Word> p = level(depth);
    const std::size_t m = colour(p, depth);
    const Vertex *verts = colour_vertex_.data() + depth * n_;
    const std::uint32_t *bounds = colour_bound_.data() + depth * n_;

    for (std::size_t i = m; i-- > 0;) {
      if (current_.size() + bounds[i] <= best_size_)
        return;
      const Vertex v = verts[i];
      current_.push_back(v);

      if (target_ != 0 && current_.size() >= target_) {
        best_ = current_;
        best_size_ = current_.size();
        done_ = true;
        return;
      }

      std::span<Word> next = level(depth + 1);
      const Word *nv = adj_.data() + v * words_;
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & nv[w];
        nonempty |= next[w] != 0;
      }
      if (nonempty) {
        expand(depth + 1);
        if (done_)
          return;
      } else if (current_.size() > best_size_) {
        best_ = current_;
        best_size_ = current_.size();
      }
      current_.pop_back();
      bits::reset(p, v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::size_t target_;
  std::size_t best_size_;
  bool done_ = false;

  std::vector<Vertex> order_; // search index -> original vertex
  std::vector<Word> adj_;
  std::vector<Word> candidates_;
  std::vector<Word> scratch_;
  std::vector<Vertex> colour_vertex_;
  std::vector<std::uint32_t> colour_bound_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

std::optional<HomogeneousWitness> decide(const Graph &g, std::size_t k,
                                         HomogeneousKind kind) {
  if (k == 0)
    return HomogeneousWitness{kind, {}};
  if (k > g.size())
    return std::nullopt;
  VertexSet found = CliqueSearch(g, k, 0).run();
  if (found.empty())
    return std::nullopt;
  return HomogeneousWitness{kind, std::move(found)};
}

} // namespace

HomogeneousWitness max_clique(const Graph &g) {
  return {HomogeneousKind::clique, CliqueSearch(g, 0, 0).run()};
}

HomogeneousWitness max_independent_set(const Graph &g) {
  return {HomogeneousKind::independent_set,
          CliqueSearch(complement(g), 0, 0).run()};
}

std::optional<HomogeneousWitness> find_clique(const Graph &g, std::size_t k) {
  return decide(g, k, HomogeneousKind::clique);
}

std::optional<HomogeneousWitness> find_independent_set(const Graph &g,
                                                       std::size_t k) {
  return decide(complement(g), k, HomogeneousKind::independent_set);
}

std::optional<HomogeneousWitness> has_homogeneous(const Graph &g,
                                                  std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("has_homogeneous: k must be positive");
  if (auto c = find_clique(g, k))
    return c;
  return find_independent_set(g, k);
}

std::size_t max_homogeneous_size(const Graph &g) {
  const std::size_t omega = CliqueSearch(g, 0, 0).run().size();
  const VertexSet larger = CliqueSearch(complement(g), 0, omega).run();
  return std::max(omega, larger.size());
}

std::optional<HomogeneousWitness>
brute_force_homogeneous(const Graph &g, std::size_t k, bool override_guard) {
  if (k == 0)
    throw std::invalid_argument("brute_force_homogeneous: k must be positive");
  const std::size_t n = g.size();
  if (n > brute_force_vertex_guard && !override_guard)
    throw OracleGuardError("brute_force_homogeneous: " + std::to_string(n) +
                           " vertices exceeds the guard of " +
                           std::to_string(brute_force_vertex_guard));
  if (k > n)
    return std::nullopt;

  VertexSet subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  while (true) {
    if (is_clique(g, subset))
      return HomogeneousWitness{HomogeneousKind::clique, subset};
    if (is_independent_set(g, subset))
      return HomogeneousWitness{HomogeneousKind::independent_set, subset};

    // next k-combination of 0..n-1 in lexicographic order
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return std::nullopt;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j)
      subset[j] = subset[j - 1] + 1;
  }
}

} // namespace ramsey
