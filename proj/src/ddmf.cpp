#include "ddmf/ddmf.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ddmf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t pack32(std::uint32_t hi, std::uint32_t lo) {
  return (std::uint64_t(hi) << 32) | lo;
}

std::string escape_label(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::size_t DdmfManager::Key4Hash::operator()(const Key4& k) const {
  std::uint64_t h = splitmix64(pack32(k.v[0], k.v[1]));
  h ^= splitmix64(pack32(k.v[2], k.v[3]) + 0x517cc1b727220a95ULL);
  return static_cast<std::size_t>(h);
}

std::size_t DdmfManager::NodeRefHash::operator()(NodeId id) const {
  const Node& nd = m->nodes_[id];
  std::uint64_t h = splitmix64(pack32(nd.var, nd.one_weight));
  h ^= splitmix64(pack32(nd.one_child, nd.zero_child) + 0x2545f4914f6cdd1dULL);
  return static_cast<std::size_t>(h);
}

bool DdmfManager::NodeRefEq::operator()(NodeId a, NodeId b) const {
  const Node& na = m->nodes_[a];
  const Node& nb = m->nodes_[b];
  return na.var == nb.var && na.one_weight == nb.one_weight &&
         na.one_child == nb.one_child && na.zero_child == nb.zero_child;
}

DdmfManager::DdmfManager(unsigned ring_order, int num_vars,
                         std::size_t node_limit)
    : ring_order_(ring_order), num_vars_(num_vars), node_limit_(node_limit),
      matrix_table_(64, MatrixRefHash{this}, MatrixRefEq{this}),
      unique_table_(64, NodeRefHash{this}, NodeRefEq{this}) {
  if (!valid_ring_order(ring_order))
    throw RingError("invalid ring order " + std::to_string(ring_order));
  if (num_vars < 0)
    throw std::invalid_argument("negative variable count");
  identity_id_ = intern(Unitary2::identity(ring_order_));
  x_id_ = intern(Unitary2::pauli_x(ring_order_));
  nodes_.push_back(Node{kTerminalVar, identity_id_, kTerminal, kTerminal, 1});
  visit_epoch_.push_back(0);
}

MatrixId DdmfManager::intern(const Unitary2& m) {
  if (m.order() != ring_order_)
    throw RingError("matrix ring order " + std::to_string(m.order()) +
                    " does not match manager order " +
                    std::to_string(ring_order_));
  MatrixId candidate = static_cast<MatrixId>(matrices_.size());
  matrices_.push_back(m);
  matrix_hashes_.push_back(m.hash());
  auto [it, inserted] = matrix_table_.insert(candidate);
  if (!inserted) {
    matrices_.pop_back();
    matrix_hashes_.pop_back();
    return *it;
  }
  matrix_classical_.push_back(m.is_classical() ? 1 : 0);
  return candidate;
}

MatrixId DdmfManager::matrix_mul(MatrixId a, MatrixId b) {
  if (a == identity_id_) return b;
  if (b == identity_id_) return a;
  std::uint64_t key = pack32(a, b);
  if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;
  MatrixId r = intern(matrices_[a] * matrices_[b]);
  mul_cache_.emplace(key, r);
  return r;
}

MatrixId DdmfManager::matrix_adjoint(MatrixId a) {
  if (auto it = adjoint_cache_.find(a); it != adjoint_cache_.end())
    return it->second;
  MatrixId r = intern(matrices_[a].adjoint());
  adjoint_cache_.emplace(a, r);
  adjoint_cache_.emplace(r, a);
  return r;
}

bool DdmfManager::matrix_is_classical(MatrixId id) const {
  return matrix_classical_[id] != 0;
}

void DdmfManager::check_handle(Ddmf d) const {
  if (d.manager != this) throw ManagerMismatchError();
  assert(d.node < nodes_.size());
  assert(d.weight < matrices_.size());
}

NodeId DdmfManager::intern_node(std::uint32_t var, MatrixId one_weight,
                                NodeId one_child, NodeId zero_child) {
  assert(var < nodes_[one_child].var && var < nodes_[zero_child].var);
  NodeId candidate = static_cast<NodeId>(nodes_.size());
  std::uint8_t boolean = matrix_classical_[one_weight] &&
                         nodes_[one_child].boolean_subtree &&
                         nodes_[zero_child].boolean_subtree;
  nodes_.push_back(Node{var, one_weight, one_child, zero_child, boolean});
  auto [it, inserted] = unique_table_.insert(candidate);
  if (!inserted) {
    nodes_.pop_back();
    return *it;
  }
  if (node_limit_ != 0 && nodes_.size() - 1 > node_limit_) {
    unique_table_.erase(it);
    nodes_.pop_back();
    throw NodeLimitError(node_limit_);
  }
  visit_epoch_.push_back(0);
  return candidate;
}

DdmfManager::EdgeRep DdmfManager::make_edge(std::uint32_t var, EdgeRep one,
                                            EdgeRep zero) {
  MatrixId w1 = matrix_mul(matrix_adjoint(zero.w), one.w);
  if (one.n == zero.n && w1 == identity_id_) return zero;
  NodeId node = intern_node(var, w1, one.n, zero.n);
  return EdgeRep{zero.w, node};
}

void DdmfManager::split(EdgeRep e, std::uint32_t v, EdgeRep& e0, EdgeRep& e1) {
  const Node& nd = nodes_[e.n];
  if (nd.var == v) {
    e0 = EdgeRep{e.w, nd.zero_child};
    e1 = EdgeRep{matrix_mul(e.w, nd.one_weight), nd.one_child};
  } else {
    assert(nd.var > v);
    e0 = e;
    e1 = e;
  }
}

DdmfManager::EdgeRep DdmfManager::compose_rec(EdgeRep a, EdgeRep b) {
  if (a.n == kTerminal) {
    if (a.w == identity_id_) return b;
    return EdgeRep{matrix_mul(a.w, b.w), b.n};
  }
  if (b.n == kTerminal && b.w == identity_id_) return a;
  Key4 key{a.w, a.n, b.w, b.n};
  if (auto it = compose_cache_.find(key); it != compose_cache_.end())
    return it->second;
  std::uint32_t v = std::min(nodes_[a.n].var, nodes_[b.n].var);
  EdgeRep a0, a1, b0, b1;
  split(a, v, a0, a1);
  split(b, v, b0, b1);
  EdgeRep r0 = compose_rec(a0, b0);
  EdgeRep r1 = compose_rec(a1, b1);
  EdgeRep res = make_edge(v, r1, r0);
  compose_cache_.emplace(key, res);
  return res;
}

DdmfManager::EdgeRep DdmfManager::select_rec(EdgeRep f, EdgeRep g) {
  if (f.n == kTerminal) return f.w == x_id_ ? g : terminal_edge();
  if (g.n == kTerminal && g.w == identity_id_) return terminal_edge();
  Key4 key{f.w, f.n, g.w, g.n};
  if (auto it = select_cache_.find(key); it != select_cache_.end())
    return it->second;
  std::uint32_t v = std::min(nodes_[f.n].var, nodes_[g.n].var);
  EdgeRep f0, f1, g0, g1;
  split(f, v, f0, f1);
  split(g, v, g0, g1);
  EdgeRep r0 = select_rec(f0, g0);
  EdgeRep r1 = select_rec(f1, g1);
  EdgeRep res = make_edge(v, r1, r0);
  select_cache_.emplace(key, res);
  return res;
}

Ddmf DdmfManager::terminal() const { return Ddmf{this, identity_id_, kTerminal}; }

Ddmf DdmfManager::constant(const Unitary2& m) {
  return Ddmf{this, intern(m), kTerminal};
}

Ddmf DdmfManager::variable(int i) {
  if (i < 1 || i > num_vars_)
    throw std::invalid_argument("variable index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(num_vars_));
  EdgeRep one{x_id_, kTerminal};
  EdgeRep zero{identity_id_, kTerminal};
  return wrap(make_edge(static_cast<std::uint32_t>(i), one, zero));
}

Ddmf DdmfManager::compose(Ddmf a, Ddmf b) {
  check_handle(a);
  check_handle(b);
  return wrap(compose_rec(unwrap(a), unwrap(b)));
}

Ddmf DdmfManager::select(Ddmf f, Ddmf g) {
  check_handle(f);
  check_handle(g);
  if (!is_boolean(f))
    throw BooleanRequiredError("select guard is not a Boolean DDMF");
  return wrap(select_rec(unwrap(f), unwrap(g)));
}

Ddmf DdmfManager::bool_not(Ddmf f) {
  check_handle(f);
  if (!is_boolean(f))
    throw BooleanRequiredError("bool_not operand is not a Boolean DDMF");
  return wrap(compose_rec(EdgeRep{x_id_, kTerminal}, unwrap(f)));
}

Ddmf DdmfManager::bool_and(Ddmf f, Ddmf g) {
  check_handle(f);
  check_handle(g);
  if (!is_boolean(f) || !is_boolean(g))
    throw BooleanRequiredError("bool_and operand is not a Boolean DDMF");
  return wrap(select_rec(unwrap(f), unwrap(g)));
}

Unitary2 DdmfManager::evaluate(Ddmf d, const Assignment& bits) {
  return matrices_[evaluate_id(d, bits)];
}

MatrixId DdmfManager::evaluate_id(Ddmf d, const Assignment& bits) {
  check_handle(d);
  if (bits.size() != static_cast<std::size_t>(num_vars_))
    throw std::invalid_argument("assignment has " +
                                std::to_string(bits.size()) + " bits, expected " +
                                std::to_string(num_vars_));
  MatrixId m = d.weight;
  NodeId n = d.node;
  while (n != kTerminal) {
    const Node& nd = nodes_[n];
    if (bits[nd.var - 1]) {
      m = matrix_mul(m, nd.one_weight);
      n = nd.one_child;
    } else {
      n = nd.zero_child;
    }
  }
  return m;
}

DdmfManager::EdgeRep DdmfManager::cofactor_rec(NodeId n, std::uint32_t var,
                                               int bit) {
  const Node& nd = nodes_[n];
  if (nd.var > var) return EdgeRep{identity_id_, n};
  if (nd.var == var) {
    return bit ? EdgeRep{nd.one_weight, nd.one_child}
               : EdgeRep{identity_id_, nd.zero_child};
  }
  std::uint64_t key = (std::uint64_t(n) << 32) | (std::uint64_t(var) << 1) |
                      std::uint64_t(bit);
  if (auto it = cofactor_cache_.find(key); it != cofactor_cache_.end())
    return it->second;
  EdgeRep z = cofactor_rec(nd.zero_child, var, bit);
  EdgeRep o = cofactor_rec(nd.one_child, var, bit);
  o.w = matrix_mul(nd.one_weight, o.w);
  EdgeRep res = make_edge(nd.var, o, z);
  cofactor_cache_.emplace(key, res);
  return res;
}

Ddmf DdmfManager::cofactor(Ddmf d, int var, int bit) {
  check_handle(d);
  if (var < 1 || var > num_vars_)
    throw std::invalid_argument("cofactor variable " + std::to_string(var) +
                                " out of range 1.." + std::to_string(num_vars_));
  if (bit != 0 && bit != 1)
    throw std::invalid_argument("cofactor bit must be 0 or 1");
  EdgeRep e = cofactor_rec(d.node, static_cast<std::uint32_t>(var), bit);
  return Ddmf{this, matrix_mul(d.weight, e.w), e.n};
}

bool DdmfManager::is_boolean(Ddmf d) const {
  check_handle(d);
  return matrix_classical_[d.weight] && nodes_[d.node].boolean_subtree;
}

bool DdmfManager::equal(Ddmf a, Ddmf b) const {
  check_handle(a);
  check_handle(b);
  return a.weight == b.weight && a.node == b.node;
}

void DdmfManager::mark_reachable(NodeId n, std::vector<NodeId>& stack,
                                 std::size_t& count) const {
  stack.clear();
  stack.push_back(n);
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    if (cur == kTerminal || visit_epoch_[cur] == epoch_) continue;
    visit_epoch_[cur] = epoch_;
    ++count;
    stack.push_back(nodes_[cur].one_child);
    stack.push_back(nodes_[cur].zero_child);
  }
}

std::size_t DdmfManager::node_count(Ddmf d) const {
  check_handle(d);
  ++epoch_;
  std::size_t count = 0;
  std::vector<NodeId> stack;
  mark_reachable(d.node, stack, count);
  return count;
}

std::size_t DdmfManager::live_nodes(std::span<const Ddmf> roots) const {
  ++epoch_;
  std::size_t count = 0;
  std::vector<NodeId> stack;
  for (const Ddmf& d : roots) {
    check_handle(d);
    mark_reachable(d.node, stack, count);
  }
  return count;
}

std::string DdmfManager::dot_export(
    Ddmf d, const std::function<std::string(const Unitary2&)>& label) const {
  check_handle(d);
  auto render = [&](MatrixId id) {
    return escape_label(label ? label(matrices_[id]) : matrices_[id].to_string());
  };
  std::ostringstream out;
  out << "digraph ddmf {\n  rankdir=TB;\n";
  out << "  root [shape=point];\n";
  out << "  t [shape=box, label=\"I\"];\n";
  std::vector<NodeId> order;
  {
    ++epoch_;
    std::vector<NodeId> stack{d.node};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      if (cur == kTerminal || visit_epoch_[cur] == epoch_) continue;
      visit_epoch_[cur] = epoch_;
      order.push_back(cur);
      stack.push_back(nodes_[cur].one_child);
      stack.push_back(nodes_[cur].zero_child);
    }
  }
  for (NodeId id : order)
    out << "  n" << id << " [label=\"x" << nodes_[id].var << "\"];\n";
  auto target = [](NodeId id) {
    return id == kTerminal ? std::string("t") : "n" + std::to_string(id);
  };
  out << "  root -> " << target(d.node);
  if (d.weight != identity_id_) out << " [label=\"" << render(d.weight) << "\"]";
  out << ";\n";
  for (NodeId id : order) {
    const Node& nd = nodes_[id];
    out << "  n" << id << " -> " << target(nd.one_child) << " [style=solid";
    if (nd.one_weight != identity_id_)
      out << ", label=\"" << render(nd.one_weight) << "\"";
    out << "];\n";
    out << "  n" << id << " -> " << target(nd.zero_child) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace ddmf
