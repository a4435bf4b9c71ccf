#include "qhall/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "qhall/error.hpp"

namespace qhall {

namespace {

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i + 1));
  return ids;
}

void check_generalized_cartan(const IntMatrix& a) {
  if (!a.square()) fail(Errc::InvalidInput, "Cartan matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 2) fail(Errc::InvalidInput, "Cartan diagonal entry must be 2");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) fail(Errc::InvalidInput, "off-diagonal Cartan entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0)) fail(Errc::InvalidInput, "a_ij = 0 iff a_ji = 0 violated");
    }
  }
}

// Connected components of the support graph {i,j : a_ij != 0}.
std::vector<std::vector<std::size_t>> components(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    std::queue<std::size_t> todo;
    todo.push(s);
    seen[s] = 1;
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && j != i && (a(i, j) != 0 || a(j, i) != 0)) {
          seen[j] = 1;
          todo.push(j);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<long> symmetrizer(const IntMatrix& a) {
  if (!a.square()) fail(Errc::InvalidInput, "symmetrizer needs a square matrix");
  const std::size_t n = a.rows();
  // Spanning-tree propagation with fractions num/den, then per-component
  // normalization to coprime positive integers.
  std::vector<long> num(n, 0), den(n, 1);
  for (const auto& comp : components(a)) {
    const std::size_t root = comp.front();
    num[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    std::vector<int> placed(n, 0);
    placed[root] = 1;
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j : comp) {
        if (placed[j] || a(i, j) == 0) continue;
        if (a(j, i) == 0) fail(Errc::NotSymmetrizable, "one-sided zero entry");
        // d_j = d_i * a_ij / a_ji
        long nj = num[i] * a(i, j);
        long dj = den[i] * a(j, i);
        if (dj < 0) {
          nj = -nj;
          dj = -dj;
        }
        if (nj <= 0) fail(Errc::NotSymmetrizable, "symmetrizer entry would be non-positive");
        const long g = std::gcd(nj, dj);
        num[j] = nj / g;
        den[j] = dj / g;
        placed[j] = 1;
        todo.push(j);
      }
    }
    long l = 1;
    for (std::size_t i : comp) l = std::lcm(l, den[i]);
    long g = 0;
    for (std::size_t i : comp) {
      num[i] = num[i] * (l / den[i]);
      den[i] = 1;
      g = std::gcd(g, num[i]);
    }
    for (std::size_t i : comp) num[i] /= g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (num[i] * a(i, j) != num[j] * a(j, i)) {
        fail(Errc::NotSymmetrizable, "no positive d with d_i a_ij = d_j a_ji");
      }
    }
  }
  return num;
}

CartanMatrix::CartanMatrix(std::vector<std::string> ids, IntMatrix entries)
    : ids_(std::move(ids)), entries_(std::move(entries)) {
  check_generalized_cartan(entries_);
  if (ids_.size() != entries_.rows()) fail(Errc::InvalidInput, "id count does not match matrix size");
  symmetrizer_ = qhall::symmetrizer(entries_);
}

CartanMatrix::CartanMatrix(IntMatrix entries) : CartanMatrix(default_ids(entries.rows()), std::move(entries)) {}

std::size_t ValuedGraph::index_of(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) fail(Errc::InvalidInput, "unknown vertex id '" + id + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

void ValuedGraph::validate() const {
  const std::size_t n = ids.size();
  if (d_vertex.size() != n || d_edge.rows() != n || d_edge.cols() != n) {
    fail(Errc::InvalidInput, "valued graph dimensions disagree");
  }
  {
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(Errc::InvalidInput, "duplicate vertex id");
    }
  }
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d_vertex[i] < 1) fail(Errc::InvalidInput, "vertex symmetrizer must be positive");
    g = std::gcd(g, d_vertex[i]);
    if (d_edge(i, i) != 0) fail(Errc::InvalidInput, "d_ii must be 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (d_edge(i, j) < 0) fail(Errc::InvalidInput, "edge valuations must be nonnegative");
      if ((d_edge(i, j) == 0) != (d_edge(j, i) == 0)) fail(Errc::InvalidInput, "d_ij = 0 iff d_ji = 0 violated");
      if (d_edge(i, j) * d_vertex[i] != d_edge(j, i) * d_vertex[j]) {
        fail(Errc::NotSymmetrizable, "d_ij d_i = d_ji d_j violated at (" + ids[i] + "," + ids[j] + ")");
      }
    }
  }
  if (n > 0 && g != 1) fail(Errc::InvalidInput, "vertex symmetrizer is not minimal (gcd != 1)");
}

ValuedQuiver::ValuedQuiver(ValuedGraph graph, std::vector<Arrow> arrows, bool allow_cycles)
    : graph_(std::move(graph)), arrows_(std::move(arrows)) {
  graph_.validate();
  const std::size_t n = graph_.size();
  if (n == 0) fail(Errc::InvalidInput, "quiver needs at least one vertex");
  IntMatrix used(n, n);
  for (const Arrow& a : arrows_) {
    if (a.src >= n || a.tgt >= n) fail(Errc::InvalidInput, "arrow endpoint out of range");
    if (a.src == a.tgt) fail(Errc::InvalidInput, "loops are not valued edges");
    if (graph_.d_edge(a.src, a.tgt) == 0) fail(Errc::InvalidInput, "arrow on a pair with zero valuation");
    if (used(a.src, a.tgt) || used(a.tgt, a.src)) fail(Errc::InvalidInput, "pair oriented twice");
    used(a.src, a.tgt) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph_.d_edge(i, j) != 0 && !used(i, j) && !used(j, i)) {
        fail(Errc::InvalidInput, "valued edge (" + graph_.ids[i] + "," + graph_.ids[j] + ") has no arrow");
      }
    }
  }
  if (components(graph_.d_edge).size() != 1) fail(Errc::InvalidInput, "valued quiver must be connected");
  if (!allow_cycles && !acyclic()) fail(Errc::InvalidInput, "valued quiver has an oriented cycle");
}

bool ValuedQuiver::acyclic() const {
  // Depth-first search with colors; a gray successor is a back edge.
  const std::size_t n = size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const Arrow& a : arrows_) out[a.src].push_back(a.tgt);
  std::vector<int> color(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    stack.emplace_back(s, 0);
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const std::size_t w = out[v][next++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

CartanMatrix cartan_from_graph(const ValuedGraph& g) {
  g.validate();
  const std::size_t n = g.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? 2 : -g.d_edge(i, j);
  }
  return CartanMatrix(g.ids, std::move(a));
}

ValuedGraph graph_from_cartan(const CartanMatrix& c) {
  const std::size_t n = c.size();
  ValuedGraph g{c.ids(), c.symmetrizer(), IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.d_edge(i, j) = (i == j) ? 0 : -c(i, j);
  }
  g.validate();
  return g;
}

std::string product_id(const std::string& a, const std::string& b) { return a + "×" + b; }

CartanMatrix c_2n(const CartanMatrix& c, int n) {
  if (n < 1) fail(Errc::InvalidInput, "c_2n needs n >= 1");
  const std::size_t k = c.size();
  IntMatrix a(2 * k, 2 * k);
  std::vector<std::string> ids;
  for (const char* sign : {"+", "-"}) {
    for (const auto& id : c.ids()) ids.push_back(product_id(sign, id));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a(i, j) = c(i, j);
      a(k + i, k + j) = c(i, j);
    }
    a(i, k + i) = -2L * n;
    a(k + i, i) = -2L * n;
  }
  return CartanMatrix(std::move(ids), std::move(a));
}

ValuedQuiver product_quiver(const ValuedQuiver& a, const ValuedQuiver& b) {
  const ValuedGraph& ga = a.graph();
  const ValuedGraph& gb = b.graph();
  const std::size_t na = ga.size(), nb = gb.size();
  auto at = [nb](std::size_t i, std::size_t ip) { return i * nb + ip; };

  ValuedGraph g;
  g.d_edge = IntMatrix(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t ip = 0; ip < nb; ++ip) {
      g.ids.push_back(product_id(ga.ids[i], gb.ids[ip]));
      g.d_vertex.push_back(ga.d_vertex[i] * gb.d_vertex[ip]);
    }
  }
  std::vector<Arrow> arrows;
  for (const Arrow& h : a.arrows()) {
    for (std::size_t ip = 0; ip < nb; ++ip) {
      const std::size_t s = at(h.src, ip), t = at(h.tgt, ip);
      g.d_edge(s, t) = ga.d_edge(h.src, h.tgt);
      g.d_edge(t, s) = ga.d_edge(h.tgt, h.src);
      arrows.push_back({s, t});
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (const Arrow& h : b.arrows()) {
      const std::size_t s = at(i, h.src), t = at(i, h.tgt);
      g.d_edge(s, t) = gb.d_edge(h.src, h.tgt);
      g.d_edge(t, s) = gb.d_edge(h.tgt, h.src);
      arrows.push_back({s, t});
    }
  }
  try {
    return ValuedQuiver(std::move(g), std::move(arrows), !(a.acyclic() && b.acyclic()));
  } catch (const Error& e) {
    fail(Errc::ProductNotValued, e.what());
  }
}

ValuedQuiver bridge_quiver(int n) {
  if (n < 1) fail(Errc::InvalidInput, "bridge valuation needs n >= 1");
  ValuedGraph g{{"+", "-"}, {1, 1}, IntMatrix(2, 2)};
  g.d_edge(0, 1) = 2L * n;
  g.d_edge(1, 0) = 2L * n;
  return ValuedQuiver(std::move(g), {{0, 1}});
}

ValuedQuiver doubled_quiver(const ValuedQuiver& q, int n) { return product_quiver(bridge_quiver(n), q); }

BorcherdsCartanMatrix borcherds_from_form(const std::vector<BorcherdsIndex>& index_data, const IntMatrix& pairings) {
  const std::size_t n = index_data.size();
  if (pairings.rows() != n || pairings.cols() != n) fail(Errc::InvalidInput, "pairing matrix size mismatch");
  if (!pairings.symmetric()) fail(Errc::InvalidInput, "pairings must be symmetric");
  BorcherdsCartanMatrix out{{}, IntMatrix(n, n), {}};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& idx = index_data[i];
    if (pairings(i, i) != idx.self_pairing) fail(Errc::InvalidInput, "self pairing disagrees with matrix diagonal");
    if ((idx.self_pairing > 0) != idx.is_simple) {
      fail(Errc::InvalidInput, "self pairing must be positive exactly for simple indices");
    }
    out.ids.push_back(idx.id);
    out.real.push_back(idx.is_simple);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && pairings(i, j) > 0) fail(Errc::InvalidInput, "off-diagonal pairings must be <= 0");
      if (idx.is_simple) {
        const long num = 2 * pairings(i, j);
        if (num % idx.self_pairing != 0) {
          fail(Errc::DivisibilityViolation, "2(i,j)/(i,i) is not an integer for i=" + idx.id);
        }
        out.entries(i, j) = num / idx.self_pairing;
      } else {
        out.entries(i, j) = pairings(i, j);
      }
    }
  }
  symmetrizer(out.entries);  // throws NotSymmetrizable
  return out;
}

}  // namespace qhall
