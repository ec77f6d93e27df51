#pragma once

#include "ddmf/unitary.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ddmf {

using NodeId = std::uint32_t;
using MatrixId = std::uint32_t;

class DdmfManager;

/// Handle to a canonical, hash-consed DDMF: a root weight plus a root node.
/// Within one manager, handle equality decides function equality in O(1).
struct Ddmf {
  const DdmfManager* manager = nullptr;
  MatrixId weight = 0;
  NodeId node = 0;

  bool operator==(const Ddmf&) const = default;
};

/// Raised when handles from different managers are mixed in one operation.
class ManagerMismatchError : public std::logic_error {
public:
  ManagerMismatchError() : std::logic_error("handles belong to different DDMF managers") {}
};

/// Raised when an operation requires a Boolean DDMF (values I/NOT only).
class BooleanRequiredError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when the manager would exceed its configured node cap.
class NodeLimitError : public std::runtime_error {
public:
  explicit NodeLimitError(std::size_t limit)
      : std::runtime_error("DDMF node limit of " + std::to_string(limit) +
                           " nodes exceeded"),
        limit(limit) {}
  std::size_t limit;
};

/// Manager for canonical DDMFs over a fixed cyclotomic ring and a fixed
/// variable order x_1 < x_2 < ... < x_n (top to bottom).
///
/// Nodes and edge-weight matrices are both hash-consed, so structural keys
/// are small integer tuples and matrix equality is id comparison. Canonical
/// form: 0-edge weights are structurally I (not stored), no redundant nodes,
/// identical subgraphs shared. Edge weights multiply the child's value on
/// the left: value(edge, a) = weight * value(child, a).
///
/// A manager and its handles are confined to one thread at a time; distinct
/// managers are independent. Nodes are never reclaimed (retain-all).
class DdmfManager {
public:
  DdmfManager(unsigned ring_order, int num_vars, std::size_t node_limit = 0);

  DdmfManager(const DdmfManager&) = delete;
  DdmfManager& operator=(const DdmfManager&) = delete;

  unsigned ring_order() const { return ring_order_; }
  int num_vars() const { return num_vars_; }

  /// The constant matrix function CM(I).
  Ddmf terminal() const;
  /// The constant matrix function CM(M). constant(I) is terminal().
  Ddmf constant(const Unitary2& m);
  /// Boolean DDMF for x_i: NOT when x_i = 1, I otherwise. 1 <= i <= n.
  Ddmf variable(int i);

  /// Pointwise matrix product: value(result, a) = value(a, .) * value(b, .).
  /// Operand order is significant. XOR on the Boolean subalgebra.
  Ddmf compose(Ddmf a, Ddmf b);
  /// Guarded function: value(g, a) where value(f, a) = NOT, else I.
  /// f must be Boolean. AND on the Boolean subalgebra.
  Ddmf select(Ddmf f, Ddmf g);

  Ddmf bool_not(Ddmf f);
  Ddmf bool_and(Ddmf f, Ddmf g);

  /// Value at a full assignment (bits[i] is x_{i+1}); product of the root
  /// weight and the selected 1-edge weights in root-to-terminal order.
  Unitary2 evaluate(Ddmf d, const Assignment& bits);
  /// Same as evaluate but returns the interned matrix id.
  MatrixId evaluate_id(Ddmf d, const Assignment& bits);

  /// Restriction x_i := bit; the result no longer depends on x_i.
  Ddmf cofactor(Ddmf d, int var, int bit);

  /// Structural Boolean test: root weight and all reachable 1-edge weights
  /// in {I, NOT}. Equivalent to the pointwise definition in canonical form;
  /// O(1) via flags computed when nodes are interned.
  bool is_boolean(Ddmf d) const;

  /// O(1) identity check: same root weight id and same node id.
  bool equal(Ddmf a, Ddmf b) const;

  /// Number of reachable nonterminal nodes.
  std::size_t node_count(Ddmf d) const;
  /// Nonterminal nodes reachable from any of the given roots.
  std::size_t live_nodes(std::span<const Ddmf> roots) const;
  /// Total nonterminal nodes ever interned by this manager.
  std::size_t allocated_nodes() const { return nodes_.size() - 1; }
  std::size_t distinct_matrices() const { return matrices_.size(); }

  /// Graphviz text: solid 1-edges, dashed 0-edges, labels on non-identity
  /// weights, one terminal labeled I. An optional labeler overrides the
  /// default entry-wise matrix rendering.
  std::string
  dot_export(Ddmf d,
             const std::function<std::string(const Unitary2&)>& label = {}) const;

  // Interned-matrix layer, shared by the verifier and renderers.
  MatrixId intern(const Unitary2& m);
  const Unitary2& matrix(MatrixId id) const { return matrices_[id]; }
  MatrixId matrix_mul(MatrixId a, MatrixId b);
  MatrixId matrix_adjoint(MatrixId a);
  bool matrix_is_classical(MatrixId id) const;
  MatrixId identity_id() const { return identity_id_; }
  MatrixId pauli_x_id() const { return x_id_; }

private:
  static constexpr NodeId kTerminal = 0;
  static constexpr std::uint32_t kTerminalVar =
      std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint32_t var;
    MatrixId one_weight;
    NodeId one_child;
    NodeId zero_child;
    std::uint8_t boolean_subtree;
  };

  struct EdgeRep {
    MatrixId w;
    NodeId n;
    bool operator==(const EdgeRep&) const = default;
  };

  struct Key4 {
    std::array<std::uint32_t, 4> v;
    bool operator==(const Key4&) const = default;
  };
  struct Key4Hash {
    std::size_t operator()(const Key4& k) const;
  };

  struct MatrixRefHash {
    const DdmfManager* m;
    std::size_t operator()(MatrixId id) const { return m->matrix_hashes_[id]; }
  };
  struct MatrixRefEq {
    const DdmfManager* m;
    bool operator()(MatrixId a, MatrixId b) const {
      return m->matrices_[a] == m->matrices_[b];
    }
  };
  struct NodeRefHash {
    const DdmfManager* m;
    std::size_t operator()(NodeId id) const;
  };
  struct NodeRefEq {
    const DdmfManager* m;
    bool operator()(NodeId a, NodeId b) const;
  };

  void check_handle(Ddmf d) const;
  Ddmf wrap(EdgeRep e) const { return Ddmf{this, e.w, e.n}; }
  EdgeRep unwrap(Ddmf d) const { return EdgeRep{d.weight, d.node}; }
  EdgeRep terminal_edge() const { return EdgeRep{identity_id_, kTerminal}; }

  NodeId intern_node(std::uint32_t var, MatrixId one_weight, NodeId one_child,
                     NodeId zero_child);
  /// Canonicalizing node constructor: pushes the 0-edge weight into the
  /// returned edge, rewrites the 1-edge weight, removes redundant nodes.
  EdgeRep make_edge(std::uint32_t var, EdgeRep one, EdgeRep zero);
  void split(EdgeRep e, std::uint32_t v, EdgeRep& e0, EdgeRep& e1);
  EdgeRep compose_rec(EdgeRep a, EdgeRep b);
  EdgeRep select_rec(EdgeRep f, EdgeRep g);
  EdgeRep cofactor_rec(NodeId n, std::uint32_t var, int bit);
  void mark_reachable(NodeId n, std::vector<NodeId>& stack,
                      std::size_t& count) const;

  unsigned ring_order_;
  int num_vars_;
  std::size_t node_limit_;

  std::vector<Unitary2> matrices_;
  std::vector<std::size_t> matrix_hashes_;
  std::vector<std::uint8_t> matrix_classical_;
  std::unordered_set<MatrixId, MatrixRefHash, MatrixRefEq> matrix_table_;
  std::unordered_map<std::uint64_t, MatrixId> mul_cache_;
  std::unordered_map<MatrixId, MatrixId> adjoint_cache_;
  MatrixId identity_id_;
  MatrixId x_id_;

  std::vector<Node> nodes_;
  std::unordered_set<NodeId, NodeRefHash, NodeRefEq> unique_table_;
  std::unordered_map<Key4, EdgeRep, Key4Hash> compose_cache_;
  std::unordered_map<Key4, EdgeRep, Key4Hash> select_cache_;
  std::unordered_map<std::uint64_t, EdgeRep> cofactor_cache_;

  mutable std::vector<std::uint32_t> visit_epoch_;
  mutable std::uint32_t epoch_ = 0;
};

} // namespace ddmf
