#include "a5zp/hamsearch.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace a5zp {

CayleyGraph::CayleyGraph(int order, std::vector<Move> moves,
                         std::vector<int> next)
    : order_(order), moves_(std::move(moves)), next_(std::move(next)) {
  if (static_cast<std::size_t>(order_) * moves_.size() != next_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "move table has the wrong size");
  }
  neighbours_.resize(order_);
  for (int v = 0; v < order_; ++v) {
    for (std::size_t m = 0; m < moves_.size(); ++m) {
      const int w = this->next(static_cast<int>(m), v);
      auto& nb = neighbours_[v];
      if (std::find(nb.begin(), nb.end(), w) == nb.end()) nb.push_back(w);
    }
  }
}

bool CayleyGraph::adjacent(int u, int v) const {
  const auto& nb = neighbours_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

CayleyGraph make_cayley_graph(const GenSet& S, const PrimeModulus& p,
                              const std::set<GElem>& universe) {
  std::vector<GElem> elements;
  elements.reserve(universe.size());
  const GElem e = identity_gelem();
  if (!universe.count(e)) {
    throw Error(ErrorCode::kInvalidArgument, "universe lacks the identity");
  }
  elements.push_back(e);
  for (const GElem& x : universe) {
    if (!(x == e)) elements.push_back(x);
  }
  std::map<GElem, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<int>(i));
  }
  std::vector<CayleyGraph::Move> moves;
  std::vector<GElem> steps;
  for (const Letter& l : S.letters()) {
    moves.push_back({l.name, 1});
    steps.push_back(l.element);
    moves.push_back({l.name, -1});
    steps.push_back(ginverse(l.element, p));
  }
  const int n = static_cast<int>(elements.size());
  std::vector<int> next(moves.size() * n);
  for (std::size_t m = 0; m < moves.size(); ++m) {
    for (int v = 0; v < n; ++v) {
      auto it = index.find(gmul(elements[v], steps[m], p));
      if (it == index.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "universe is not closed under the generators");
      }
      next[m * n + v] = it->second;
    }
  }
  return CayleyGraph(n, std::move(moves), std::move(next));
}

CayleyGraph make_quotient_graph(const GenSet& S) {
  std::vector<char> names;
  for (const Letter& l : S.letters()) names.push_back(l.name);
  const std::vector<Perm> bar = S.bar();
  return CayleyGraph::FromGenerators<Perm>(
      names, bar, Perm(), [](const Perm& x, const Perm& y) { return x * y; },
      [](const Perm& x) { return inverse(x); });
}

namespace {

constexpr int kUnconstrained = -1;

// Everything about the search that is fixed up front and shared read-only
// between workers.
struct Plan {
  const CayleyGraph* graph = nullptr;
  std::vector<char> letters;              // distinct letters in move order
  std::vector<int> move_letter;           // move -> letter index
  std::vector<char> skip_move;            // equivalent to an earlier move
  std::vector<long long> target;          // per letter
  std::vector<char> constrained;          // per letter
  bool all_constrained = false;
  bool any_constrained = false;
  int required = kUnconstrained;          // letter index
  bool prune_degree = false;
};

struct State {
  std::vector<char> visited;
  std::vector<int> path;    // moves taken
  std::vector<long long> weight;
  int head = 0;
  int unvisited = 0;
  int required_uses = 0;
};

class Searcher {
 public:
  Searcher(const Plan& plan, std::atomic<std::uint64_t>* nodes,
           std::uint64_t node_limit, std::function<bool()> stop)
      : plan_(plan),
        g_(*plan.graph),
        n_(g_.order()),
        nodes_(nodes),
        node_limit_(node_limit),
        stop_(std::move(stop)) {}

  // Runs the DFS from `state`; on success `state.path` holds the cycle.
  bool Run(State& state) { return Dfs(state); }

  // Legal non-closing move? Applies it if so.
  bool TryApply(State& s, int m) const {
    const int w = g_.next(m, s.head);
    if (s.visited[w]) return false;
    const int li = plan_.move_letter[m];
    const int sign = g_.moves()[m].sign;
    s.weight[li] += sign;
    if (!WithinBounds(s, static_cast<int>(s.path.size()) + 1)) {
      s.weight[li] -= sign;
      return false;
    }
    const int v = s.head;
    s.visited[w] = 1;
    s.head = w;
    --s.unvisited;
    s.path.push_back(m);
    if (li == plan_.required) ++s.required_uses;
    if (plan_.prune_degree && DegreeDeadEnd(s, v)) {
      Undo(s, v);
      return false;
    }
    return true;
  }

  void Undo(State& s, int previous_head) const {
    const int m = s.path.back();
    s.path.pop_back();
    const int li = plan_.move_letter[m];
    s.weight[li] -= g_.moves()[m].sign;
    if (li == plan_.required) --s.required_uses;
    s.visited[s.head] = 0;
    ++s.unvisited;
    s.head = previous_head;
  }

  // Closing step from the head back to the identity, if one satisfies every
  // constraint; appends it to the path.
  bool TryClose(State& s) const {
    for (int m = 0; m < static_cast<int>(g_.moves().size()); ++m) {
      if (plan_.skip_move[m] || g_.next(m, s.head) != 0) continue;
      const int li = plan_.move_letter[m];
      const int sign = g_.moves()[m].sign;
      s.weight[li] += sign;
      const int uses = s.required_uses + (li == plan_.required ? 1 : 0);
      bool ok = plan_.required == kUnconstrained || uses > 0;
      for (std::size_t l = 0; ok && l < plan_.letters.size(); ++l) {
        if (plan_.constrained[l] && s.weight[l] != plan_.target[l]) ok = false;
      }
      s.weight[li] -= sign;
      if (ok) {
        s.path.push_back(m);
        return true;
      }
    }
    return false;
  }

 private:
  bool Dfs(State& s) {
    if (nodes_) {
      const std::uint64_t count = nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
      if (node_limit_ && count > node_limit_) {
        throw Error(ErrorCode::kTooLarge, "search node limit reached");
      }
      if ((count & 0x3ff) == 0 && stop_ && stop_()) return false;
    }
    if (s.unvisited == 0) return TryClose(s);
    const int v = s.head;
    for (int m = 0; m < static_cast<int>(g_.moves().size()); ++m) {
      if (plan_.skip_move[m]) continue;
      if (!TryApply(s, m)) continue;
      if (Dfs(s)) return true;
      Undo(s, v);
    }
    return false;
  }

  // Remaining steps (including the closing one) can still reach the targets.
  bool WithinBounds(const State& s, int depth_after) const {
    if (!plan_.any_constrained) return true;
    const long long remaining = n_ - depth_after;
    long long need = 0;
    for (std::size_t l = 0; l < plan_.letters.size(); ++l) {
      if (plan_.constrained[l]) need += std::llabs(plan_.target[l] - s.weight[l]);
    }
    if (need > remaining) return false;
    if (plan_.all_constrained && (remaining - need) % 2 != 0) return false;
    return true;
  }

  // After leaving `left` (now interior), every unvisited neighbour of it
  // still needs two usable neighbours, and the identity needs an unvisited
  // neighbour to close through.
  bool DegreeDeadEnd(const State& s, int left) const {
    if (s.unvisited == 0) return false;
    bool start_ok = false;
    for (int x : g_.neighbours(0)) {
      if (!s.visited[x]) {
        start_ok = true;
        break;
      }
    }
    if (!start_ok) return true;
    if (left == 0) return false;
    for (int u : g_.neighbours(left)) {
      if (s.visited[u]) continue;
      int usable = 0;
      for (int x : g_.neighbours(u)) {
        if (!s.visited[x] || x == s.head || x == 0) ++usable;
      }
      if (usable < 2) return true;
    }
    return false;
  }

  const Plan& plan_;
  const CayleyGraph& g_;
  const int n_;
  std::atomic<std::uint64_t>* nodes_;
  std::uint64_t node_limit_;
  std::function<bool()> stop_;
};

Plan MakePlan(const CayleyGraph& g, const SearchOptions& opts) {
  Plan plan;
  plan.graph = &g;
  plan.prune_degree = opts.prune_degree;
  for (const auto& mv : g.moves()) {
    auto it = std::find(plan.letters.begin(), plan.letters.end(), mv.letter);
    if (it == plan.letters.end()) {
      plan.letters.push_back(mv.letter);
      plan.move_letter.push_back(static_cast<int>(plan.letters.size()) - 1);
    } else {
      plan.move_letter.push_back(static_cast<int>(it - plan.letters.begin()));
    }
  }
  const std::size_t L = plan.letters.size();
  plan.target.assign(L, 0);
  plan.constrained.assign(L, 0);
  auto letter_index = [&](char c) {
    auto it = std::find(plan.letters.begin(), plan.letters.end(), c);
    if (it == plan.letters.end()) {
      throw Error(ErrorCode::kUnknownLetter,
                  std::string("unknown letter '") + c + "'");
    }
    return static_cast<int>(it - plan.letters.begin());
  };
  if (opts.target_weights) {
    for (const auto& [c, w] : *opts.target_weights) {
      const int li = letter_index(c);
      plan.constrained[li] = 1;
      plan.target[li] = w;
    }
  }
  plan.any_constrained =
      std::any_of(plan.constrained.begin(), plan.constrained.end(),
                  [](char c) { return c != 0; });
  plan.all_constrained =
      L > 0 && std::all_of(plan.constrained.begin(), plan.constrained.end(),
                           [](char c) { return c != 0; });
  if (opts.require_letter) plan.required = letter_index(*opts.require_letter);

  // Two moves that are the same group element explore identical subtrees;
  // keep the first unless either label matters to a constraint.
  const int M = static_cast<int>(g.moves().size());
  plan.skip_move.assign(M, 0);
  auto labelled = [&](int m) {
    const int li = plan.move_letter[m];
    return plan.constrained[li] || li == plan.required;
  };
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < m; ++k) {
      if (g.order() > 0 && g.next(k, 0) == g.next(m, 0) && !labelled(k) &&
          !labelled(m)) {
        plan.skip_move[m] = 1;
        break;
      }
    }
  }
  return plan;
}

Word ToWord(const CayleyGraph& g, const std::vector<int>& path) {
  Word w;
  w.reserve(path.size());
  for (int m : path) w.push_back(Step{g.moves()[m].letter, g.moves()[m].sign});
  return w;
}

}  // namespace

std::optional<Word> find_cycle(const CayleyGraph& g, const SearchOptions& opts,
                               SearchStats* stats) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  const Plan plan = MakePlan(g, opts);

  State root;
  root.visited.assign(n, 0);
  root.visited[0] = 1;
  root.weight.assign(plan.letters.size(), 0);
  root.unvisited = n - 1;

  std::atomic<std::uint64_t> nodes{0};
  Searcher prefix_runner(plan, nullptr, 0, nullptr);
  for (std::size_t i = 0; i < opts.prefix.size(); ++i) {
    const Step& st = opts.prefix[i];
    int move = -1;
    for (int m = 0; m < static_cast<int>(g.moves().size()); ++m) {
      if (g.moves()[m].letter == st.letter && g.moves()[m].sign == st.sign) {
        move = m;
        break;
      }
    }
    if (move < 0) {
      throw Error(ErrorCode::kUnknownLetter,
                  std::string("prefix uses unknown letter '") + st.letter + "'");
    }
    const int w = g.next(move, root.head);
    if (w == 0 && root.unvisited == 0 && i + 1 == opts.prefix.size()) {
      // The prefix is already a closed walk through every vertex.
      root.path.push_back(move);
      const int li = plan.move_letter[move];
      root.weight[li] += st.sign;
      for (std::size_t l = 0; l < plan.letters.size(); ++l) {
        if (plan.constrained[l] && root.weight[l] != plan.target[l]) return std::nullopt;
      }
      if (plan.required != kUnconstrained &&
          std::none_of(root.path.begin(), root.path.end(), [&](int m) {
            return plan.move_letter[m] == plan.required;
          })) {
        return std::nullopt;
      }
      return ToWord(g, root.path);
    }
    if (root.visited[w]) {
      throw Error(ErrorCode::kInvalidPrefix,
                  "prefix revisits a vertex at step " + std::to_string(i + 1));
    }
    root.visited[w] = 1;
    root.head = w;
    --root.unvisited;
    root.path.push_back(move);
    root.weight[plan.move_letter[move]] += st.sign;
    if (plan.move_letter[move] == plan.required) ++root.required_uses;
  }

  std::optional<Word> result;
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || root.unvisited < 4) {
    Searcher s(plan, &nodes, opts.node_limit, nullptr);
    if (s.Run(root)) result = ToWord(g, root.path);
  } else {
    // Split the next two levels into independent subtrees, in DFS order.
    std::vector<State> subtrees;
    Searcher expander(plan, nullptr, 0, nullptr);
    const int M = static_cast<int>(g.moves().size());
    for (int m1 = 0; m1 < M; ++m1) {
      if (plan.skip_move[m1]) continue;
      State s1 = root;
      if (!expander.TryApply(s1, m1)) continue;
      for (int m2 = 0; m2 < M; ++m2) {
        if (plan.skip_move[m2]) continue;
        State s2 = s1;
        if (!expander.TryApply(s2, m2)) continue;
        subtrees.push_back(std::move(s2));
      }
    }
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    std::atomic<std::size_t> cursor{0};
    std::mutex mu;
    std::vector<std::optional<std::vector<int>>> found(subtrees.size());
    std::exception_ptr failure;
    auto worker = [&] {
      try {
        while (true) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= subtrees.size() || i > best.load()) return;
          auto stop = [&, i] {
            const std::size_t b = best.load();
            return opts.deterministic ? b < i : b != none;
          };
          Searcher s(plan, &nodes, opts.node_limit, stop);
          State st = subtrees[i];
          if (s.Run(st) && !stop()) {
            std::lock_guard<std::mutex> lock(mu);
            found[i] = st.path;
            std::size_t b = best.load();
            while (i < b && !best.compare_exchange_weak(b, i)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        best.store(0);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    const std::size_t b = best.load();
    if (b != none && found[b]) result = ToWord(g, *found[b]);
  }
  if (stats) stats->nodes = nodes.load();
  return result;
}

std::optional<Word> find_cycle(const GenSet& S, const PrimeModulus& p,
                               const std::set<GElem>& universe,
                               const SearchOptions& opts) {
  const CayleyGraph g = make_cayley_graph(S, p, universe);
  std::optional<Word> w = find_cycle(g, opts);
  if (w) {
    const HamiltonReport r = is_hamiltonian_cycle(*w, S, p, universe);
    if (!r.ok) {
      throw Error(ErrorCode::kVerification,
                  "search produced an invalid cycle: " + r.message);
    }
  }
  return w;
}

std::optional<Word> find_quotient_cycle(const GenSet& S,
                                        const SearchOptions& opts) {
  const CayleyGraph g = make_quotient_graph(S);
  std::optional<Word> w = find_cycle(g, opts);
  if (w) {
    const HamiltonReport r = is_quotient_hamiltonian_cycle(*w, S);
    if (!r.ok) {
      throw Error(ErrorCode::kVerification,
                  "search produced an invalid cycle: " + r.message);
    }
  }
  return w;
}

std::uint64_t count_cycles_bruteforce(const CayleyGraph& g) {
  const int n = g.order();
  if (n > 12) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force count limited to 12 vertices, got " + std::to_string(n));
  }
  if (n < 3) return 0;
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = g.adjacent(0, order.front()) && g.adjacent(order.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(order[i], order[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

std::uint64_t count_cycles_bruteforce(const GenSet& S, const PrimeModulus& p,
                                      const std::set<GElem>& universe) {
  return count_cycles_bruteforce(make_cayley_graph(S, p, universe));
}

}  // namespace a5zp
