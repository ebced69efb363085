#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycount {

// Vertex of the infinite degree-3 tree. The root is the empty word and has
// the three children "0", "1", "2"; every other vertex has its parent plus
// the two children formed by appending 0 or 1. This gives every vertex
// exactly three neighbors and a total lexicographic order on addresses.
//
// Textual form: the root is spelled "e", all other vertices are their
// branch words (first letter 0/1/2, later letters 0/1).
class VertexAddress {
 public:
  VertexAddress() = default;  // root
  static VertexAddress root() { return VertexAddress{}; }
  static VertexAddress parse(std::string_view text);

  const std::string& word() const { return word_; }
  std::string str() const { return word_.empty() ? "e" : word_; }
  bool is_root() const { return word_.empty(); }
  std::size_t depth() const { return word_.size(); }

  VertexAddress parent() const;           // throws std::invalid_argument on root
  VertexAddress child(int branch) const;  // 0..2 at the root, 0..1 elsewhere
  std::array<VertexAddress, 3> neighbors() const;

  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
  friend std::strong_ordering operator<=>(const VertexAddress& a, const VertexAddress& b) {
    return a.word_ <=> b.word_;
  }

 private:
  explicit VertexAddress(std::string word) : word_(std::move(word)) {}
  std::string word_;
};

// Number of edges on the unique path between two vertices.
std::size_t tree_distance(const VertexAddress& a, const VertexAddress& b);

// Finite connected set of tree vertices. A connected subgraph of a tree is
// determined by its vertex set, so edges are derived on demand rather than
// stored; |edges| = |vertices| - 1 always holds.
class Component {
 public:
  // Validates connectivity, dedups, sorts. Throws std::invalid_argument on
  // an empty or disconnected set.
  static Component from_vertices(std::vector<VertexAddress> vertices);
  static Component single(VertexAddress v);

  const std::vector<VertexAddress>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(const VertexAddress& v) const;
  bool contains_all(const Component& other) const;

  std::vector<std::pair<VertexAddress, VertexAddress>> edges() const;

  friend bool operator==(const Component&, const Component&) = default;

 private:
  explicit Component(std::vector<VertexAddress> sorted) : vertices_(std::move(sorted)) {}
  std::vector<VertexAddress> vertices_;  // sorted, unique
};

// Boundary = vertices with exactly one neighbor inside the component,
// interior = vertices with at least two. A component is full when every
// interior vertex keeps all three of its tree neighbors (vacuously full
// when the interior is empty).
struct ComponentProfile {
  std::vector<VertexAddress> boundary;
  std::vector<VertexAddress> interior;
  bool is_full = false;
};

// Profile of a component with >= 2 vertices (smaller ones are rejected:
// the boundary/interior split is undefined for them).
ComponentProfile classify(const Component& k);

// |boundary| - |interior| == 2; equivalent to classify(k).is_full.
bool is_full_by_count(const Component& k);

// The unique smallest full component containing k: k plus every tree
// neighbor of k's interior vertices.
Component minimal_full_component(const Component& k);

// The unique tree path between two distinct vertices.
Component shortest_path(const VertexAddress& x, const VertexAddress& y);

// Smallest connected component containing all the given vertices (>= 2
// distinct ones required): the Steiner tree, i.e. the union of pairwise
// shortest paths.
Component minimal_component(std::span<const VertexAddress> vertices);

// interior plus every tree neighbor of an interior vertex. The result is
// full with interior exactly `interior` and |boundary| = |interior| + 2.
Component full_component_with_interior(const Component& interior);

// Full component with `boundary_count` >= 2 boundary vertices, caterpillar
// shaped: the interior is the descending chain "0", "00", ...; the m = 2
// case is the single edge (root, "0").
Component canonical_full_component(int boundary_count);

// Descending chain root, "0", "00", ... with `vertex_count` >= 2 vertices.
Component canonical_path(int vertex_count);

}  // namespace polycount
