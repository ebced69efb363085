#include "polycount/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "polycount/full_count.hpp"
#include "polycount/path_count.hpp"

namespace polycount {

namespace {

bool in_host(const std::string& word, HostTree host) {
  return host == HostTree::kCayley || word.empty() || word[0] != '2';
}

// The reachable host vertices within `radius` of the fixed component,
// sorted lexicographically so vertex ids double as the canonical edge
// order. adj holds neighbor ids, -1 where the neighbor is outside.
struct BallGraph {
  std::vector<std::string> words;
  std::vector<std::array<int, 3>> adj;
  std::vector<int> fixed_ids;
};

BallGraph build_ball(const Component& fixed, int radius, HostTree host) {
  std::map<std::string, int> distance;
  std::vector<std::string> queue;
  for (const VertexAddress& v : fixed.vertices()) {
    if (!in_host(v.word(), host)) {
      throw std::invalid_argument("fixed vertex " + v.str() + " is outside the host tree");
    }
    distance.emplace(v.word(), 0);
    queue.push_back(v.word());
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::string word = queue[head];
    const int d = distance.at(word);
    if (d == radius) {
      continue;
    }
    for (const VertexAddress& w : VertexAddress::parse(word.empty() ? "e" : word).neighbors()) {
      if (!in_host(w.word(), host)) {
        continue;
      }
      if (distance.emplace(w.word(), d + 1).second) {
        queue.push_back(w.word());
      }
    }
  }

  BallGraph ball;
  ball.words.reserve(distance.size());
  for (const auto& [word, unused] : distance) {
    ball.words.push_back(word);
  }
  // std::map iteration is already sorted; ids follow lexicographic order.
  ball.adj.assign(ball.words.size(), {-1, -1, -1});
  for (std::size_t id = 0; id < ball.words.size(); ++id) {
    const std::string& word = ball.words[id];
    const auto neighbors = VertexAddress::parse(word.empty() ? "e" : word).neighbors();
    std::array<std::string, 3> sorted_words;
    for (std::size_t k = 0; k < 3; ++k) {
      sorted_words[k] = neighbors[k].word();
    }
    std::sort(sorted_words.begin(), sorted_words.end());
    for (std::size_t k = 0; k < 3; ++k) {
      const auto it = distance.find(sorted_words[k]);
      if (it != distance.end() && in_host(sorted_words[k], host)) {
        const auto pos = std::lower_bound(ball.words.begin(), ball.words.end(), sorted_words[k]);
        ball.adj[id][k] = static_cast<int>(pos - ball.words.begin());
      }
    }
  }
  for (const VertexAddress& v : fixed.vertices()) {
    const auto pos = std::lower_bound(ball.words.begin(), ball.words.end(), v.word());
    ball.fixed_ids.push_back(static_cast<int>(pos - ball.words.begin()));
  }
  std::sort(ball.fixed_ids.begin(), ball.fixed_ids.end());
  return ball;
}

// Depth-first walk over the edge decision tree. State is plain data so a
// branch can be copied off for a parallel run.
struct Enumerator {
  const BallGraph* ball = nullptr;
  int target = 0;
  int size = 0;
  std::vector<char> in_set;
  std::vector<int> frontier;
  const std::function<void(const std::vector<VertexAddress>&)>* hook = nullptr;

  void emit() const {
    std::vector<VertexAddress> vertices;
    vertices.reserve(static_cast<std::size_t>(size));
    for (std::size_t id = 0; id < in_set.size(); ++id) {
      if (in_set[id]) {
        const std::string& word = ball->words[id];
        vertices.push_back(VertexAddress::parse(word.empty() ? "e" : word));
      }
    }
    (*hook)(vertices);
  }

  std::uint64_t count_from(std::size_t idx) {
    if (size == target) {
      if (hook && *hook) {
        emit();
      }
      return 1;
    }
    if (idx >= frontier.size()) {
      return 0;
    }
    const int far = frontier[idx];
    // Exclude the edge for good.
    std::uint64_t total = count_from(idx + 1);
    // Or include the far endpoint and its outward edges.
    const std::size_t mark = frontier.size();
    in_set[static_cast<std::size_t>(far)] = 1;
    ++size;
    for (int w : ball->adj[static_cast<std::size_t>(far)]) {
      if (w >= 0 && !in_set[static_cast<std::size_t>(w)]) {
        frontier.push_back(w);
      }
    }
    total += count_from(idx + 1);
    frontier.resize(mark);
    --size;
    in_set[static_cast<std::size_t>(far)] = 0;
    return total;
  }
};

}  // namespace

BigInt count_components_oracle(const Component& fixed, int n, const OracleOptions& opts) {
  if (opts.cap > kOracleHardCap) {
    throw std::length_error("oracle cap above the 64-bit safe ceiling " +
                            std::to_string(kOracleHardCap));
  }
  if (n > opts.cap) {
    throw std::length_error("oracle request n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(opts.cap));
  }
  if (n < static_cast<int>(fixed.size())) {
    return 0;
  }
  const int radius = opts.radius.value_or(n - static_cast<int>(fixed.size()));
  const BallGraph ball = build_ball(fixed, std::max(radius, 0), opts.host);

  Enumerator root;
  root.ball = &ball;
  root.target = n;
  root.size = static_cast<int>(fixed.size());
  root.in_set.assign(ball.words.size(), 0);
  for (int id : ball.fixed_ids) {
    root.in_set[static_cast<std::size_t>(id)] = 1;
  }
  for (int id : ball.fixed_ids) {
    for (int w : ball.adj[static_cast<std::size_t>(id)]) {
      if (w >= 0 && !root.in_set[static_cast<std::size_t>(w)]) {
        root.frontier.push_back(w);
      }
    }
  }
  std::sort(root.frontier.begin(), root.frontier.end());
  if (opts.on_component) {
    root.hook = &opts.on_component;
  }

  if (opts.parallel && !opts.on_component && root.size < n && !root.frontier.empty()) {
    // Split the first decision; each branch owns a state copy.
    Enumerator excluded = root;
    Enumerator included = std::move(root);
    const int far = included.frontier[0];
    included.in_set[static_cast<std::size_t>(far)] = 1;
    ++included.size;
    for (int w : ball.adj[static_cast<std::size_t>(far)]) {
      if (w >= 0 && !included.in_set[static_cast<std::size_t>(w)]) {
        included.frontier.push_back(w);
      }
    }
    auto task = std::async(std::launch::async,
                           [&excluded]() { return excluded.count_from(1); });
    const std::uint64_t include_total = included.count_from(1);
    return BigInt(task.get()) + include_total;
  }
  return BigInt(root.count_from(0));
}

BigInt count_components_oracle(std::span<const VertexAddress> fixed, int n,
                               const OracleOptions& opts) {
  if (fixed.empty()) {
    throw std::invalid_argument("oracle needs at least one fixed vertex");
  }
  std::vector<VertexAddress> distinct(fixed.begin(), fixed.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const Component center = distinct.size() == 1 ? Component::single(distinct.front())
                                                : minimal_component(distinct);
  return count_components_oracle(center, n, opts);
}

VerifyReport verify_family(Family family, int max_n, int max_m, const OracleOptions& opts) {
  if (max_m < 2) {
    throw std::invalid_argument("verify_family requires max_m >= 2");
  }
  if (max_n > opts.cap) {
    throw std::length_error("verify_family requires max_n <= oracle cap (" +
                            std::to_string(opts.cap) + ")");
  }
  VerifyReport report;
  report.family = family;
  report.max_n = max_n;
  report.max_m = max_m;
  const CatalanTable cat = catalan_table(static_cast<std::size_t>(std::max(max_n, 1)));
  for (int m = 2; m <= max_m; ++m) {
    const Component fixed =
        family == Family::kFull ? canonical_full_component(m) : canonical_path(m);
    if (static_cast<int>(fixed.size()) > max_n) {
      continue;
    }
    const std::vector<BigInt> row = family == Family::kFull
                                        ? full_count_convolution_row(m, max_n, cat)
                                        : path_count_convolution_row(m, max_n, cat);
    for (int n = static_cast<int>(fixed.size()); n <= max_n; ++n) {
      VerifyPoint point;
      point.m = m;
      point.n = n;
      point.oracle_count = count_components_oracle(fixed, n, opts);
      point.formula_count = row[static_cast<std::size_t>(n)];
      point.match = point.oracle_count == point.formula_count;
      report.all_match = report.all_match && point.match;
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

bool shape_independence_check(int m, int n, const OracleOptions& opts) {
  if (m < 6) {
    throw std::invalid_argument(
        "shape_independence_check needs m >= 6, the first m with two shapes");
  }
  const Component chain_shaped = canonical_full_component(m);

  // Ball-shaped interior: the first m-2 vertices of a breadth-first sweep
  // from "0", each level in lexicographic order. The sweep keeps "0"'s
  // three neighbors, so the interior tree has a degree-3 vertex and is
  // never a chain for m >= 6.
  std::vector<VertexAddress> interior{VertexAddress::parse("0")};
  std::size_t head = 0;
  while (interior.size() < static_cast<std::size_t>(m - 2)) {
    std::vector<VertexAddress> level;
    const std::size_t tail = interior.size();
    while (head < tail) {
      for (const VertexAddress& w : interior[head].neighbors()) {
        if (std::find(interior.begin(), interior.end(), w) == interior.end() &&
            std::find(level.begin(), level.end(), w) == level.end()) {
          level.push_back(w);
        }
      }
      ++head;
    }
    std::sort(level.begin(), level.end());
    for (VertexAddress& w : level) {
      if (interior.size() < static_cast<std::size_t>(m - 2)) {
        interior.push_back(std::move(w));
      }
    }
  }
  const Component ball_shaped =
      full_component_with_interior(Component::from_vertices(std::move(interior)));

  return count_components_oracle(chain_shaped, n, opts) ==
         count_components_oracle(ball_shaped, n, opts);
}

}  // namespace polycount
