#include "ramsey/graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge &e : edges)
    b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  b.connect_ranges(0, n, 0, n);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  if (n != 0 && n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return std::move(b).build();
}

Graph Graph::petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);         // outer cycle
    b.add_edge(i, i + 5);               // spokes
    b.add_edge(i + 5, (i + 2) % 5 + 5); // inner pentagram
  }
  return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const { return bits::count(row(v)); }

std::size_t Graph::edge_count() const { return bits::count(bits_) / 2; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    bits::for_each(row(u), [&](std::size_t v) {
      if (v > u)
        out.push_back({u, static_cast<Vertex>(v)});
    });
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= graph_.n_ || v >= graph_.n_)
    throw std::out_of_range("vertex out of range: edge (" + std::to_string(u) +
                            ", " + std::to_string(v) + ") on " +
                            std::to_string(graph_.n_) + " vertices");
  if (u == v)
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
}

void GraphBuilder::set(Vertex u, Vertex v, bool on) {
  std::span<Word> ru{graph_.bits_.data() + u * graph_.words_, graph_.words_};
  std::span<Word> rv{graph_.bits_.data() + v * graph_.words_, graph_.words_};
  if (on) {
    bits::set(ru, v);
    bits::set(rv, u);
  } else {
    bits::reset(ru, v);
    bits::reset(rv, u);
  }
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  set(u, v, true);
  return *this;
}

GraphBuilder &GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  set(u, v, false);
  return *this;
}

GraphBuilder &GraphBuilder::make_clique(std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      add_edge(members[i], members[j]);
  return *this;
}

GraphBuilder &GraphBuilder::make_independent(std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      remove_edge(members[i], members[j]);
  return *this;
}

GraphBuilder &GraphBuilder::place(const Graph &g, std::size_t offset) {
  if (offset + g.size() > graph_.n_)
    throw std::out_of_range("placed graph does not fit");
  for (const Edge &e : g.edges())
    set(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset),
        true);
  return *this;
}

GraphBuilder &GraphBuilder::connect_ranges(std::size_t a_begin,
                                           std::size_t a_end,
                                           std::size_t b_begin,
                                           std::size_t b_end) {
  if (a_end > graph_.n_ || b_end > graph_.n_)
    throw std::out_of_range("range out of bounds");
  for (std::size_t u = a_begin; u < a_end; ++u)
    for (std::size_t v = b_begin; v < b_end; ++v)
      if (u != v)
        set(static_cast<Vertex>(u), static_cast<Vertex>(v), true);
  return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Graph GraphBuilder::build() const & { return graph_; }

} // namespace ramsey
