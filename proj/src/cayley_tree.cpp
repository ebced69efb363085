#include "polycount/cayley_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polycount {

namespace {

bool is_branch_char(char c) { return c == '0' || c == '1'; }

std::size_t common_prefix_length(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (i < limit && a[i] == b[i]) {
    ++i;
  }
  return i;
}

}  // namespace

VertexAddress VertexAddress::parse(std::string_view text) {
  if (text == "e") {
    return root();
  }
  if (text.empty() || (text[0] != '0' && text[0] != '1' && text[0] != '2')) {
    throw std::invalid_argument("malformed vertex address: '" + std::string(text) + "'");
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!is_branch_char(text[i])) {
      throw std::invalid_argument("malformed vertex address: '" + std::string(text) + "'");
    }
  }
  return VertexAddress(std::string(text));
}

VertexAddress VertexAddress::parent() const {
  if (is_root()) {
    throw std::invalid_argument("the root has no parent");
  }
  return VertexAddress(word_.substr(0, word_.size() - 1));
}

VertexAddress VertexAddress::child(int branch) const {
  const int limit = is_root() ? 2 : 1;
  if (branch < 0 || branch > limit) {
    throw std::invalid_argument("branch " + std::to_string(branch) + " out of range");
  }
  return VertexAddress(word_ + static_cast<char>('0' + branch));
}

std::array<VertexAddress, 3> VertexAddress::neighbors() const {
  if (is_root()) {
    return {child(0), child(1), child(2)};
  }
  return {parent(), child(0), child(1)};
}

std::size_t tree_distance(const VertexAddress& a, const VertexAddress& b) {
  const std::size_t shared = common_prefix_length(a.word(), b.word());
  return (a.depth() - shared) + (b.depth() - shared);
}

Component Component::from_vertices(std::vector<VertexAddress> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) {
    throw std::invalid_argument("a component needs at least one vertex");
  }
  Component component(std::move(vertices));

  // Connectivity sweep from the first vertex.
  std::vector<char> seen(component.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  const auto& verts = component.vertices_;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const VertexAddress& w : verts[i].neighbors()) {
      const auto it = std::lower_bound(verts.begin(), verts.end(), w);
      if (it != verts.end() && *it == w) {
        const auto j = static_cast<std::size_t>(it - verts.begin());
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
      }
    }
  }
  if (reached != component.size()) {
    throw std::invalid_argument("vertex set is not connected");
  }
  return component;
}

Component Component::single(VertexAddress v) {
  return Component(std::vector<VertexAddress>{std::move(v)});
}

bool Component::contains(const VertexAddress& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Component::contains_all(const Component& other) const {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

std::vector<std::pair<VertexAddress, VertexAddress>> Component::edges() const {
  // Every tree edge is a parent-child pair, so listing (parent(v), v) for
  // each non-root vertex whose parent is present covers them all.
  std::vector<std::pair<VertexAddress, VertexAddress>> out;
  out.reserve(vertices_.size() > 0 ? vertices_.size() - 1 : 0);
  for (const VertexAddress& v : vertices_) {
    if (v.is_root()) {
      continue;
    }
    VertexAddress p = v.parent();
    if (contains(p)) {
      out.emplace_back(std::move(p), v);
    }
  }
  return out;
}

ComponentProfile classify(const Component& k) {
  if (k.size() < 2) {
    throw std::invalid_argument("boundary/interior split needs >= 2 vertices");
  }
  ComponentProfile profile;
  profile.is_full = true;
  for (const VertexAddress& v : k.vertices()) {
    int inside = 0;
    for (const VertexAddress& w : v.neighbors()) {
      if (k.contains(w)) {
        ++inside;
      }
    }
    if (inside == 1) {
      profile.boundary.push_back(v);
    } else {
      profile.interior.push_back(v);
      if (inside != 3) {
        profile.is_full = false;
      }
    }
  }
  return profile;
}

bool is_full_by_count(const Component& k) {
  const ComponentProfile profile = classify(k);
  return profile.boundary.size() == profile.interior.size() + 2;
}

Component minimal_full_component(const Component& k) {
  const ComponentProfile profile = classify(k);
  std::vector<VertexAddress> vertices = k.vertices();
  for (const VertexAddress& v : profile.interior) {
    for (const VertexAddress& w : v.neighbors()) {
      vertices.push_back(w);
    }
  }
  return Component::from_vertices(std::move(vertices));
}

Component shortest_path(const VertexAddress& x, const VertexAddress& y) {
  if (x == y) {
    throw std::invalid_argument("shortest_path needs two distinct vertices");
  }
  const std::size_t shared = common_prefix_length(x.word(), y.word());
  std::vector<VertexAddress> vertices;
  VertexAddress up = x;
  while (up.depth() > shared) {
    vertices.push_back(up);
    up = up.parent();
  }
  vertices.push_back(up);  // the meeting point
  VertexAddress down = y;
  while (down.depth() > shared) {
    vertices.push_back(down);
    down = down.parent();
  }
  return Component::from_vertices(std::move(vertices));
}

Component minimal_component(std::span<const VertexAddress> vertices) {
  std::vector<VertexAddress> distinct(vertices.begin(), vertices.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) {
    throw std::invalid_argument("minimal_component needs >= 2 distinct vertices");
  }
  // Union of pairwise paths; in a tree this is the Steiner tree.
  std::vector<VertexAddress> all;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const Component path = shortest_path(distinct[i], distinct[j]);
      all.insert(all.end(), path.vertices().begin(), path.vertices().end());
    }
  }
  return Component::from_vertices(std::move(all));
}

Component full_component_with_interior(const Component& interior) {
  std::vector<VertexAddress> vertices = interior.vertices();
  for (const VertexAddress& v : interior.vertices()) {
    for (const VertexAddress& w : v.neighbors()) {
      vertices.push_back(w);
    }
  }
  return Component::from_vertices(std::move(vertices));
}

Component canonical_full_component(int boundary_count) {
  if (boundary_count < 2) {
    throw std::invalid_argument("a full component has at least 2 boundary vertices");
  }
  if (boundary_count == 2) {
    return Component::from_vertices({VertexAddress::root(), VertexAddress::parse("0")});
  }
  std::vector<VertexAddress> chain;
  std::string word;
  for (int i = 0; i < boundary_count - 2; ++i) {
    word.push_back('0');
    chain.push_back(VertexAddress::parse(word));
  }
  return full_component_with_interior(Component::from_vertices(std::move(chain)));
}

Component canonical_path(int vertex_count) {
  if (vertex_count < 2) {
    throw std::invalid_argument("a path has at least 2 vertices");
  }
  std::vector<VertexAddress> vertices{VertexAddress::root()};
  std::string word;
  for (int i = 1; i < vertex_count; ++i) {
    word.push_back('0');
    vertices.push_back(VertexAddress::parse(word));
  }
  return Component::from_vertices(std::move(vertices));
}

}  // namespace polycount
