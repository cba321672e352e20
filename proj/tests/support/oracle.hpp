#pragma once

// Brute-force reference implementations over bitmasks, written directly from
// the flow definitions and independent of the library's set and matrix code.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mbqc/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

enum Lab { XY = 0, XZ, YZ, X, Y, Z, NONE };

struct Small {
  int n = 0;
  std::vector<Mask> adj;
  Mask in = 0;
  Mask out = 0;
  std::vector<int> lab;  // NONE for outputs
  std::vector<mbqc::VertexId> ids;

  Mask all() const { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
  Mask non_out() const { return all() & ~out; }
  Mask non_in() const { return all() & ~in; }
};

inline bool has(Mask m, int i) { return (m >> i) & 1U; }
inline int popcount(Mask m) { return __builtin_popcount(m); }

inline Small from_graph(const mbqc::LabelledOpenGraph& g) {
  Small s;
  s.ids = g.vertices().items();
  s.n = static_cast<int>(s.ids.size());
  s.adj.assign(s.n, 0);
  s.lab.assign(s.n, NONE);
  auto idx = [&](mbqc::VertexId v) {
    for (int i = 0; i < s.n; ++i) {
      if (s.ids[i] == v) return i;
    }
    return -1;
  };
  for (int i = 0; i < s.n; ++i) {
    for (mbqc::VertexId w : g.neighbours(s.ids[i])) s.adj[i] |= Mask{1} << idx(w);
    if (g.is_input(s.ids[i])) s.in |= Mask{1} << i;
    if (g.is_output(s.ids[i])) s.out |= Mask{1} << i;
    if (auto l = g.label(s.ids[i])) s.lab[i] = static_cast<int>(*l);
  }
  return s;
}

inline Mask to_mask(const Small& s, const mbqc::VertexSet& set) {
  Mask m = 0;
  for (int i = 0; i < s.n; ++i) {
    if (set.contains(s.ids[i])) m |= Mask{1} << i;
  }
  return m;
}

inline mbqc::VertexSet to_set(const Small& s, Mask m) {
  std::vector<mbqc::VertexId> out;
  for (int i = 0; i < s.n; ++i) {
    if (has(m, i)) out.push_back(s.ids[i]);
  }
  return mbqc::VertexSet::from_sorted(out);
}

inline Mask odd(const Small& s, Mask A) {
  Mask r = 0;
  for (int i = 0; i < s.n; ++i) {
    if (has(A, i)) r ^= s.adj[i];
  }
  return r;
}

/** F1–F3 over S. */
inline bool focused(const Small& s, Mask A, Mask S) {
  Mask o = odd(s, A);
  for (int w = 0; w < s.n; ++w) {
    if (!has(S, w)) continue;
    int l = s.lab[w];
    if (has(A, w) && !(l == XY || l == X || l == Y)) return false;
    if (has(o, w) && !(l == XZ || l == YZ || l == Y || l == Z)) return false;
    if (l == Y && (has(o, w) != has(A, w))) return false;
  }
  return true;
}

/** P4–P9 for the single vertex u with correction set cu. */
inline bool local_ok(const Small& s, int u, Mask cu) {
  bool c = has(cu, u);
  bool o = has(odd(s, cu), u);
  switch (s.lab[u]) {
    case XY: return !c && o;
    case XZ: return c && o;
    case YZ: return c && !o;
    case X: return o;
    case Z: return c;
    case Y: return c != o;
  }
  return false;
}

/** Successors of u forced by P1–P3, restricted to non-outputs. */
inline Mask forced_after(const Small& s, int u, Mask cu) {
  Mask o = odd(s, cu);
  Mask r = 0;
  for (int v = 0; v < s.n; ++v) {
    if (v == u || s.lab[v] == NONE) continue;
    int l = s.lab[v];
    bool p1 = has(cu, v) && l != X && l != Y;
    bool p2 = has(o, v) && l != Y && l != Z;
    bool p3 = (has(cu, v) != has(o, v)) && l == Y;
    if (p1 || p2 || p3) r |= Mask{1} << v;
  }
  return r;
}

inline bool acyclic(int n, const std::vector<Mask>& succ) {
  Mask done = 0;
  for (int round = 0; round <= n; ++round) {
    bool progress = false;
    for (int v = 0; v < n; ++v) {
      if (has(done, v)) continue;
      if ((succ[v] & ~done) == 0) {
        done |= Mask{1} << v;
        progress = true;
      }
    }
    if (!progress) break;
  }
  Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  return done == full;
}

/** Is c (indexed by vertex, ignored for outputs) a focused Pauli flow with some order? */
inline bool focused_flow(const Small& s, const std::vector<Mask>& c) {
  std::vector<Mask> succ(s.n, 0);
  for (int u = 0; u < s.n; ++u) {
    if (s.lab[u] == NONE) continue;
    if (c[u] & s.in) return false;
    if (!local_ok(s, u, c[u])) return false;
    if (!focused(s, c[u], s.non_out() & ~(Mask{1} << u))) return false;
    succ[u] = forced_after(s, u, c[u]);
  }
  return acyclic(s.n, succ);
}

/** Candidate columns for each non-output, filtered by `keep`. */
inline std::vector<std::vector<Mask>> columns(
    const Small& s, const std::function<bool(int, Mask)>& keep) {
  std::vector<std::vector<Mask>> cols(s.n);
  Mask ni = s.non_in();
  for (int u = 0; u < s.n; ++u) {
    if (s.lab[u] == NONE) continue;
    for (Mask a = ni;; a = (a - 1) & ni) {
      if (keep(u, a)) cols[u].push_back(a);
      if (a == 0) break;
    }
  }
  return cols;
}

/** Backtracking over column choices, pruning on cycles; visit returns true to stop. */
inline void search(
    const Small& s, const std::vector<std::vector<Mask>>& cols,
    const std::function<bool(const std::vector<Mask>&)>& visit) {
  std::vector<int> order;
  for (int u = 0; u < s.n; ++u) {
    if (s.lab[u] != NONE) order.push_back(u);
  }
  std::vector<Mask> c(s.n, 0), succ(s.n, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      stop = visit(c);
      return;
    }
    int u = order[k];
    for (Mask a : cols[u]) {
      c[u] = a;
      succ[u] = forced_after(s, u, a);
      if (acyclic(s.n, succ)) rec(k + 1);
      if (stop) return;
    }
    succ[u] = 0;
    c[u] = 0;
  };
  rec(0);
}

inline std::vector<std::vector<Mask>> focused_columns(const Small& s) {
  return columns(s, [&](int u, Mask a) {
    return local_ok(s, u, a) && focused(s, a, s.non_out() & ~(Mask{1} << u));
  });
}

inline std::optional<std::vector<Mask>> find_focused(const Small& s) {
  std::optional<std::vector<Mask>> found;
  search(s, focused_columns(s), [&](const std::vector<Mask>& c) {
    found = c;
    return true;
  });
  return found;
}

inline bool has_focused_flow(const Small& s) { return find_focused(s).has_value(); }

inline std::uint64_t count_focused(const Small& s) {
  std::uint64_t count = 0;
  search(s, focused_columns(s), [&](const std::vector<Mask>&) {
    ++count;
    return false;
  });
  return count;
}

/** Any Pauli flow, focused or not. */
inline bool has_any_flow(const Small& s) {
  bool found = false;
  auto cols = columns(s, [&](int u, Mask a) { return local_ok(s, u, a); });
  search(s, cols, [&](const std::vector<Mask>&) {
    found = true;
    return true;
  });
  return found;
}

/** Every extended causal flow successor map whose least order is strict. */
inline std::vector<std::vector<int>> causal_flows(const Small& s) {
  std::vector<int> order;
  for (int u = 0; u < s.n; ++u) {
    if (s.lab[u] != NONE) order.push_back(u);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> c(s.n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      std::vector<Mask> succ(s.n, 0);
      for (int u : order) {
        int cu = c[u];
        if (cu != u) succ[u] |= Mask{1} << cu;
        succ[u] |= s.adj[cu] & ~(Mask{1} << u);
      }
      if (acyclic(s.n, succ)) out.push_back(c);
      return;
    }
    int u = order[k];
    if (s.lab[u] == YZ) {
      if (has(s.in, u)) return;
      c[u] = u;
      rec(k + 1);
      return;
    }
    for (int v = 0; v < s.n; ++v) {
      if (has(s.adj[u], v) && !has(s.in, v)) {
        c[u] = v;
        rec(k + 1);
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
