#pragma once

// Depth-limited MiniMax over games where a move may keep the turn.
//
// A node is MAX when the side to move there is the root's side, so the kind
// of a child is not a function of depth parity. The restricted alpha-beta
// variant keeps the usual (alpha, beta) window on every edge but only tests
// for a cutoff at nodes whose kind differs from their parent's; nodes reached
// through a turn-keeping move explore all their children.

#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace kalah::search {

enum class NodeKind : std::uint8_t { Max, Min };

constexpr NodeKind other(NodeKind k) noexcept {
  return k == NodeKind::Max ? NodeKind::Min : NodeKind::Max;
}

enum class Algorithm : std::uint8_t {
  Plain,
  RestrictedAlphaBeta,
  // Cutoffs at every node regardless of alternation. Experimental; not
  // exposed through the CLI or the service.
  ClassicAlphaBeta,
};

const char* algorithm_name(Algorithm a) noexcept;

struct SearchStats {
  std::uint64_t nodes_generated = 0;
  std::uint64_t cutoffs = 0;
  std::uint64_t same_kind_edges = 0;
  // Cutoffs taken at a node of the same kind as its parent.
  std::uint64_t same_kind_cutoffs = 0;

  SearchStats& operator+=(const SearchStats& o) noexcept {
    nodes_generated += o.nodes_generated;
    cutoffs += o.cutoffs;
    same_kind_edges += o.same_kind_edges;
    same_kind_cutoffs += o.same_kind_cutoffs;
    return *this;
  }
};

struct EdgeEvent {
  int ply = 0;  // depth of the child below the root
  int move = 0;
  NodeKind parent = NodeKind::Max;
  NodeKind child = NodeKind::Max;
  bool keeps_turn = false;  // as reported by the game, not derived from kinds
};

struct CutoffEvent {
  int ply = 0;
  NodeKind kind = NodeKind::Max;
  NodeKind parent = NodeKind::Max;
};

struct SearchObserver {
  std::function<void(const EdgeEvent&)> on_edge;
  std::function<void(const CutoffEvent&)> on_cutoff;
};

// for_each_child visits children in move order and stops once the visitor
// returns false. keeps_turn tells whether the move granted another turn.
template <class G>
concept TurnGame = requires(const G& g, const typename G::State& s, int side) {
  { g.side_to_move(s) } -> std::convertible_to<int>;
  { g.is_terminal(s) } -> std::convertible_to<bool>;
  { g.evaluate(s, side) } -> std::convertible_to<int>;
  g.for_each_child(s, [](int, const typename G::State&, bool) { return true; });
};

struct TreeResult {
  std::optional<int> best_move;
  int value = 0;
  SearchStats stats;
};

template <TurnGame Game>
class TreeSearch {
 public:
  using State = typename Game::State;

  TreeSearch(const Game& game, Algorithm algorithm, const SearchObserver* observer = nullptr)
      : game_(game), algorithm_(algorithm), observer_(observer) {}

  /// root_side selects whose score is maximised; it need not be the side to
  /// move at the root. Ties between root moves go to the first in move order.
  TreeResult run(const State& root, int depth, int root_side) {
    stats_ = {};
    root_side_ = root_side;
    ++stats_.nodes_generated;

    TreeResult result;
    const NodeKind kind = kind_of(root);
    if (depth <= 0 || game_.is_terminal(root)) {
      result.value = game_.evaluate(root, root_side_);
      result.stats = stats_;
      return result;
    }

    // The root never cuts; its window only narrows for later children.
    int best = kind == NodeKind::Max ? kMinusInf : kPlusInf;
    int alpha = kMinusInf;
    int beta = kPlusInf;
    game_.for_each_child(root, [&](int move, const State& child, bool keeps_turn) {
      ++stats_.nodes_generated;
      const NodeKind child_kind = note_edge(1, move, kind, child, keeps_turn);
      const int v = visit(child, depth - 1, 1, alpha, beta, child_kind, kind);
      if (kind == NodeKind::Max ? v > best : v < best) {
        best = v;
        result.best_move = move;
        if (algorithm_ != Algorithm::Plain) (kind == NodeKind::Max ? alpha : beta) = best;
      }
      return true;
    });
    result.value = best;
    result.stats = stats_;
    return result;
  }

  const SearchStats& stats() const noexcept { return stats_; }

 private:
  static constexpr int kPlusInf = std::numeric_limits<int>::max();
  static constexpr int kMinusInf = std::numeric_limits<int>::min() + 1;

  NodeKind kind_of(const State& s) const {
    return game_.side_to_move(s) == root_side_ ? NodeKind::Max : NodeKind::Min;
  }

  NodeKind note_edge(int ply, int move, NodeKind parent, const State& child, bool keeps_turn) {
    const NodeKind child_kind = kind_of(child);
    if (child_kind == parent) ++stats_.same_kind_edges;
    if (observer_ && observer_->on_edge) {
      observer_->on_edge(EdgeEvent{ply, move, parent, child_kind, keeps_turn});
    }
    return child_kind;
  }

  bool may_cut(NodeKind kind, NodeKind parent) const noexcept {
    switch (algorithm_) {
      case Algorithm::Plain: return false;
      case Algorithm::RestrictedAlphaBeta: return kind != parent;
      case Algorithm::ClassicAlphaBeta: return true;
    }
    return false;
  }

  int visit(const State& node, int depth, int ply, int alpha, int beta, NodeKind kind,
            NodeKind parent) {
    if (depth == 0 || game_.is_terminal(node)) return game_.evaluate(node, root_side_);

    const bool cut_allowed = may_cut(kind, parent);
    int best = kind == NodeKind::Max ? kMinusInf : kPlusInf;
    game_.for_each_child(node, [&](int move, const State& child, bool keeps_turn) {
      ++stats_.nodes_generated;
      const NodeKind child_kind = note_edge(ply + 1, move, kind, child, keeps_turn);
      const int v = visit(child, depth - 1, ply + 1, alpha, beta, child_kind, kind);
      if (kind == NodeKind::Max) {
        if (v > best) best = v;
        if (algorithm_ == Algorithm::Plain) return true;
        if (cut_allowed && best >= beta) {
          record_cutoff(ply, kind, parent);
          return false;
        }
        if (best > alpha) alpha = best;
      } else {
        if (v < best) best = v;
        if (algorithm_ == Algorithm::Plain) return true;
        if (cut_allowed && best <= alpha) {
          record_cutoff(ply, kind, parent);
          return false;
        }
        if (best < beta) beta = best;
      }
      return true;
    });
    return best;
  }

  void record_cutoff(int ply, NodeKind kind, NodeKind parent) {
    ++stats_.cutoffs;
    if (kind == parent) ++stats_.same_kind_cutoffs;
    if (observer_ && observer_->on_cutoff) observer_->on_cutoff(CutoffEvent{ply, kind, parent});
  }

  const Game& game_;
  Algorithm algorithm_;
  const SearchObserver* observer_;
  SearchStats stats_;
  int root_side_ = 0;
};

}  // namespace kalah::search
