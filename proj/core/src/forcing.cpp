#include "dim/forcing.hpp"

#include <algorithm>

#include "dim/pattern.hpp"

namespace dim {

namespace {

using Roles = std::vector<std::pair<std::string, VertexId>>;

bool useful(const PartialColoring& c, const std::vector<Demand>& ds) {
  for (const auto& d : ds)
    if (c[d.vertex] != d.color) return true;
  return false;
}

std::optional<Firing> fire_if_useful(const PartialColoring& c, std::vector<Demand> ds, Roles roles) {
  if (!useful(c, ds)) return std::nullopt;
  return Firing{std::move(ds), std::move(roles)};
}

Roles roles_of(const Embedding& e) {
  Roles r;
  for (int i = 0; i < e.pattern->size(); ++i) r.emplace_back(e.pattern->role_name(i), e.images[i]);
  return r;
}

template <class Conclude>
std::optional<Firing> by_pattern(const RuleContext& ctx, const Pattern& p, Conclude conclude) {
  std::optional<Firing> out;
  MatchOptions opt;
  opt.colors = ctx.c.raw();
  for_each_embedding(
      ctx.g, p,
      [&](const Embedding& e) {
        std::vector<Demand> ds = conclude(e);
        if (!useful(ctx.c, ds)) return true;
        out = Firing{std::move(ds), roles_of(e)};
        return false;
      },
      opt);
  return out;
}

std::vector<Demand> others_white(const Graph& g, VertexId x, std::initializer_list<VertexId> keep,
                                 std::vector<Demand> ds = {}) {
  for (VertexId w : g.neighbors(x))
    if (std::find(keep.begin(), keep.end(), w) == keep.end()) ds.push_back({w, Color::White});
  return ds;
}

// ---- basic propagation ----

std::optional<Firing> white_neighbours(const RuleContext& ctx) {
  for (VertexId v : ctx.g.vertices()) {
    if (!ctx.c.is_white(v)) continue;
    std::vector<Demand> ds;
    for (VertexId w : ctx.g.neighbors(v)) ds.push_back({w, Color::Black});
    if (auto f = fire_if_useful(ctx.c, std::move(ds), {{"v", v}})) return f;
  }
  return std::nullopt;
}

std::optional<Firing> black_pair(const RuleContext& ctx) {
  for (VertexId u : ctx.g.vertices()) {
    if (!ctx.c.is_black(u)) continue;
    for (VertexId w : ctx.g.neighbors(u)) {
      if (w < u || !ctx.c.is_black(w)) continue;
      auto ds = others_white(ctx.g, u, {w});
      ds = others_white(ctx.g, w, {u}, std::move(ds));
      if (auto f = fire_if_useful(ctx.c, std::move(ds), {{"u", u}, {"v", w}})) return f;
    }
  }
  return std::nullopt;
}

std::optional<Firing> last_candidate(const RuleContext& ctx) {
  for (VertexId u : ctx.g.vertices()) {
    if (!ctx.c.is_black(u) || black_neighbors(ctx.g, ctx.c, u) > 0) continue;
    VertexId cand = -1;
    int open = 0;
    for (VertexId w : ctx.g.neighbors(u))
      if (!ctx.c.is_white(w)) {
        ++open;
        cand = w;
      }
    if (open == 1 && ctx.c.is_uncolored(cand))
      return Firing{{{cand, Color::Black}}, {{"u", u}, {"v", cand}}};
  }
  return std::nullopt;
}

// ---- parity on squares and triangles ----

std::optional<Firing> square_parity(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (VertexId v1 : g.vertices()) {
    Color a = ctx.c[v1];
    if (a == Color::Uncolored) continue;
    const auto& n1 = g.neighbors(v1);
    for (std::size_t i = 0; i < n1.size(); ++i)
      for (std::size_t j = i + 1; j < n1.size(); ++j) {
        VertexId v2 = n1[i], v4 = n1[j];
        for (VertexId v3 : g.neighbors(v2)) {
          if (v3 == v1 || v3 == v4 || !g.adjacent(v3, v4)) continue;
          std::vector<Demand> ds{{v3, a}, {v2, opposite(a)}, {v4, opposite(a)}};
          if (auto f = fire_if_useful(ctx.c, std::move(ds),
                                      {{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}}))
            return f;
        }
      }
  }
  return std::nullopt;
}

std::optional<Firing> triangle_pendant(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (const auto& t : triangles(g))
    for (int k = 0; k < 3; ++k) {
      VertexId x = t[k], y = t[(k + 1) % 3], z = t[(k + 2) % 3];
      for (VertexId u : g.neighbors(x)) {
        if (u == y || u == z || g.adjacent(u, y) || g.adjacent(u, z)) continue;
        Roles roles{{"x", x}, {"y", y}, {"z", z}, {"u", u}};
        if (!ctx.c.is_uncolored(x) && ctx.c[u] != opposite(ctx.c[x]))
          return Firing{{{u, opposite(ctx.c[x])}}, roles};
        if (!ctx.c.is_uncolored(u) && ctx.c[x] != opposite(ctx.c[u]))
          return Firing{{{x, opposite(ctx.c[u])}}, roles};
      }
    }
  return std::nullopt;
}

// ---- local rules ----

std::optional<Firing> leaf(const RuleContext& ctx) {
  for (VertexId v : ctx.g.vertices()) {
    if (ctx.g.degree(v) == 0) {
      if (auto f = fire_if_useful(ctx.c, {{v, Color::White}}, {{"v", v}})) return f;
    } else if (ctx.g.degree(v) == 1) {
      VertexId u = ctx.g.neighbors(v)[0];
      if (auto f = fire_if_useful(ctx.c, {{u, Color::Black}}, {{"leaf", v}, {"u", u}})) return f;
    }
  }
  return std::nullopt;
}

std::optional<Firing> common_neighbour(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (VertexId u : g.vertices()) {
    if (!ctx.c.is_black(u)) continue;
    for (VertexId x : g.neighbors(u))
      for (VertexId w : g.neighbors(x)) {
        if (w <= u || !ctx.c.is_black(w) || g.adjacent(u, w)) continue;
        if (auto f = fire_if_useful(ctx.c, {{x, Color::White}}, {{"u", u}, {"w", w}, {"x", x}}))
          return f;
      }
  }
  return std::nullopt;
}

std::optional<Firing> butterfly(const RuleContext& ctx) {
  auto ts = triangles(ctx.g);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      VertexId shared = -1;
      int common = 0;
      for (VertexId a : ts[i])
        for (VertexId b : ts[j])
          if (a == b) {
            ++common;
            shared = a;
          }
      if (common != 1) continue;
      if (auto f = fire_if_useful(ctx.c, {{shared, Color::White}}, {{"v", shared}})) return f;
    }
  return std::nullopt;
}

std::optional<Firing> diamond(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (auto [a, b] : g.edges()) {
    int common = 0;
    for (VertexId w : g.neighbors(a))
      if (g.adjacent(w, b)) ++common;
    if (common < 2) continue;
    if (auto f = fire_if_useful(ctx.c, {{a, Color::Black}, {b, Color::Black}}, {{"a", a}, {"b", b}}))
      return f;
  }
  return std::nullopt;
}

std::optional<Firing> surplus_leaves(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (VertexId u : g.vertices()) {
    std::vector<VertexId> leaves;
    for (VertexId w : g.neighbors(u))
      if (g.degree(w) == 1) leaves.push_back(w);
    if (leaves.size() < 2) continue;
    VertexId keep = leaves[0];
    for (VertexId w : leaves)
      if (ctx.c.is_black(w)) {
        keep = w;
        break;
      }
    std::vector<Demand> ds;
    for (VertexId w : leaves)
      if (w != keep) ds.push_back({w, Color::White});
    if (auto f = fire_if_useful(ctx.c, std::move(ds), {{"u", u}, {"kept", keep}})) return f;
  }
  return std::nullopt;
}

const Pattern& relay_pattern() {
  static const Pattern p = [] {
    Pattern q("relay", false);
    q.edge("v1", "v2").edge("v2", "v3").edge("v3", "v4").degree("v3", 2).color("v1", ColorReq::Black);
    return q;
  }();
  return p;
}

std::optional<Firing> relay(const RuleContext& ctx) {
  return by_pattern(ctx, relay_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["v4"], Color::Black}};
  });
}

const Pattern& spur_pattern() {
  static const Pattern p = [] {
    Pattern q("spur", false);
    q.edge("y", "x").edge("y", "z").edge("z", "a").edge("z", "b").edge("a", "b");
    q.forbid("y", "a").forbid("y", "b").degree("y", 2);
    return q;
  }();
  return p;
}

std::optional<Firing> spur(const RuleContext& ctx) {
  return by_pattern(ctx, spur_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["x"], Color::Black}};
  });
}

const Pattern& kite_pattern() {
  static const Pattern p = [] {
    Pattern q("kite", false);
    q.edge("x", "y").edge("x", "z").edge("y", "z").edge("z", "c").edge("c", "d").edge("d", "y");
    q.forbid("y", "c").forbid("z", "d");
    return q;
  }();
  return p;
}

std::optional<Firing> kite(const RuleContext& ctx) {
  return by_pattern(ctx, kite_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["x"], Color::Black}};
  });
}

Pattern pentagon_base(std::string name) {
  Pattern q(std::move(name));
  q.edge("x", "w1").edge("w1", "u1").edge("u1", "u2").edge("u2", "w2").edge("w2", "x");
  q.edge("y", "u1").edge("y", "u2");
  return q;
}

const Pattern& pentagon_apex_pattern() {
  static const Pattern p = [] {
    Pattern q = pentagon_base("pentagon-apex");
    q.maybe("x", "y").maybe("w1", "w2");
    return q;
  }();
  return p;
}

std::optional<Firing> pentagon_apex(const RuleContext& ctx) {
  return by_pattern(ctx, pentagon_apex_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["x"], Color::Black}};
  });
}

const Pattern& pentagon_tip_pattern() {
  static const Pattern p = [] {
    Pattern q = pentagon_base("pentagon-tip");
    q.degree("x", 2);
    return q;
  }();
  return p;
}

std::optional<Firing> pentagon_tip(const RuleContext& ctx) {
  return by_pattern(ctx, pentagon_tip_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["y"], Color::Black}};
  });
}

const Pattern& pentagon_guard_pattern() {
  static const Pattern p = [] {
    Pattern q = pentagon_base("pentagon-guard");
    q.color("y", ColorReq::Black);
    return q;
  }();
  return p;
}

std::optional<Firing> pentagon_guard(const RuleContext& ctx) {
  return by_pattern(ctx, pentagon_guard_pattern(), [&](const Embedding& e) {
    return others_white(ctx.g, e["x"], {e["w1"], e["w2"]});
  });
}

const Pattern& pentagon_swap_pattern() {
  static const Pattern p = [] {
    Pattern q = pentagon_base("pentagon-swap");
    q.degree("u1", 3).degree("u2", 3).degree("w1", 2).degree("w2", 2);
    for (const char* r : {"u1", "u2", "w1", "w2"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

std::optional<Firing> pentagon_swap(const RuleContext& ctx) {
  return by_pattern(ctx, pentagon_swap_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["w1"], Color::White}};
  });
}

const Pattern& twin_spur_pattern() {
  static const Pattern p = [] {
    Pattern q("twin-spur", false);
    q.edge("x", "y").edge("x", "z").edge("y", "u").edge("z", "v").edge("u", "v");
    q.edge("u", "a").edge("u", "b").edge("a", "b");
    q.forbid("v", "a").forbid("v", "b").degree("y", 2).degree("z", 2);
    return q;
  }();
  return p;
}

std::optional<Firing> twin_spur(const RuleContext& ctx) {
  return by_pattern(ctx, twin_spur_pattern(), [&](const Embedding& e) {
    return others_white(ctx.g, e["x"], {e["y"], e["z"]}, {{e["x"], Color::Black}});
  });
}

const Pattern& tripod_pattern() {
  static const Pattern p = [] {
    Pattern q("tripod", false);
    q.edge("x1", "x2").edge("x2", "x3").edge("x1", "x3");
    q.edge("x1", "y1").edge("x2", "y2").edge("x3", "y3");
    q.edge("y1", "v").edge("y2", "v").edge("y3", "v").edge("v", "u");
    q.degree("y1", 2).degree("y2", 2).degree("y3", 2);
    return q;
  }();
  return p;
}

std::optional<Firing> tripod(const RuleContext& ctx) {
  return by_pattern(ctx, tripod_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["u"], Color::White}};
  });
}

const Pattern& square_degree_two_pattern() {
  static const Pattern p = [] {
    Pattern q("square-degree-two", false);
    q.edge("v", "a").edge("a", "c").edge("c", "b").edge("b", "v").degree("v", 2);
    return q;
  }();
  return p;
}

std::optional<Firing> square_degree_two(const RuleContext& ctx) {
  return by_pattern(ctx, square_degree_two_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["v"], Color::White}};
  });
}

const Pattern& long_hook_pattern() {
  static const Pattern p = [] {
    Pattern q("long-hook", false);
    q.edge("x", "u1").edge("x", "u2").edge("u1", "u2").edge("x", "y").edge("y", "z");
    q.edge("z", "v").edge("v", "w1").edge("v", "w2").edge("w1", "u1").edge("w2", "u2");
    q.forbid("y", "u1").forbid("y", "u2").color("v", ColorReq::Black);
    return q;
  }();
  return p;
}

std::optional<Firing> long_hook(const RuleContext& ctx) {
  return by_pattern(ctx, long_hook_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["x"], Color::White}};
  });
}

const Pattern& double_ladder_pattern() {
  static const Pattern p = [] {
    Pattern q("double-ladder");
    q.edge("x", "y").edge("x", "z").edge("y", "z");
    q.edge("y", "v1").edge("y", "v2").edge("z", "w1").edge("z", "w2");
    q.edge("u1", "v1").edge("u1", "w1").edge("u2", "v2").edge("u2", "w2");
    q.maybe("x", "u1").maybe("x", "u2").maybe("u1", "u2");
    q.degree("y", 4).degree("z", 4);
    for (const char* r : {"v1", "v2", "w1", "w2"}) q.degree(r, 2);
    for (const char* r : {"y", "z", "v1", "v2", "w1", "w2"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

std::optional<Firing> double_ladder(const RuleContext& ctx) {
  return by_pattern(ctx, double_ladder_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["w1"], Color::White}, {e["w2"], Color::White}};
  });
}

std::optional<Firing> isolated_triple(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < 3) continue;
    const auto& nv = g.neighbors(v);
    int isolated = 0;
    for (VertexId w : nv) {
      bool alone = true;
      for (VertexId t : nv)
        if (t != w && g.adjacent(w, t)) {
          alone = false;
          break;
        }
      if (alone) ++isolated;
    }
    if (isolated < 3) continue;
    if (auto f = fire_if_useful(ctx.c, {{v, Color::Black}}, {{"v", v}})) return f;
  }
  return std::nullopt;
}

const Pattern& hexagon_pattern() {
  static const Pattern p = [] {
    Pattern q("hexagon");
    q.edge("x1", "w1").edge("w1", "w2").edge("w2", "x2").edge("x2", "v2").edge("v2", "v1");
    q.edge("v1", "x1").edge("x1", "y1").edge("x2", "y2").maybe("y1", "y2");
    q.degree("x1", 3).degree("x2", 3);
    for (const char* r : {"w1", "w2", "v1", "v2"}) q.degree(r, 2);
    return q;
  }();
  return p;
}

std::optional<Firing> hexagon(const RuleContext& ctx) {
  return by_pattern(ctx, hexagon_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["y1"], Color::White}, {e["y2"], Color::White}};
  });
}

bool has_shared_vertex_triangles(const Graph& g) {
  auto ts = triangles(g);
  std::vector<std::vector<int>> at(g.capacity());
  for (int i = 0; i < static_cast<int>(ts.size()); ++i)
    for (VertexId v : ts[i]) {
      for (int j : at[v]) {
        int common = 0;
        for (VertexId a : ts[i])
          for (VertexId b : ts[j]) common += a == b;
        if (common == 1) return true;
      }
      at[v].push_back(i);
    }
  return false;
}

std::optional<Firing> four_fan(const RuleContext& ctx) {
  const Graph& g = ctx.g;
  if (has_shared_vertex_triangles(g)) return std::nullopt;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) < 4 || ctx.c.is_black(v)) continue;
    const auto& nv = g.neighbors(v);
    for (VertexId w1 : nv)
      for (VertexId w2 : nv) {
        if (w2 <= w1 || !g.adjacent(w1, w2)) continue;
        for (VertexId w3 : nv)
          for (VertexId w4 : nv) {
            if (w4 <= w3 || w3 == w1 || w3 == w2 || w4 == w1 || w4 == w2) continue;
            if (g.adjacent(w3, w4) || g.adjacent(w3, w1) || g.adjacent(w3, w2) ||
                g.adjacent(w4, w1) || g.adjacent(w4, w2))
              continue;
            const VertexId core[] = {v, w1, w2, w3, w4};
            auto hits_only = [&](VertexId u, VertexId target, VertexId other) {
              for (VertexId t : core)
                if ((t == target) != g.adjacent(u, t)) return false;
              return !g.adjacent(u, other);
            };
            bool escape = false;
            for (VertexId u1 : g.neighbors(w3)) {
              if (u1 == v) continue;
              for (VertexId u2 : g.neighbors(w4)) {
                if (u2 == v || u2 == u1) continue;
                if (hits_only(u1, w3, u2) && hits_only(u2, w4, u1)) {
                  escape = true;
                  break;
                }
              }
              if (escape) break;
            }
            if (escape) continue;
            return Firing{{{v, Color::Black}}, {{"v", v}, {"w1", w1}, {"w2", w2}, {"w3", w3}, {"w4", w4}}};
          }
      }
  }
  return std::nullopt;
}

const Pattern& heptagon_pattern() {
  static const Pattern p = [] {
    Pattern q("heptagon", false);
    q.edge("z", "u1").edge("u1", "x").edge("x", "w1").edge("w1", "w2").edge("w2", "y");
    q.edge("y", "u2").edge("u2", "z");
    q.color("x", ColorReq::Black).color("y", ColorReq::Black);
    return q;
  }();
  return p;
}

std::optional<Firing> heptagon(const RuleContext& ctx) {
  return by_pattern(ctx, heptagon_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["z"], Color::Black}};
  });
}

const Pattern& prism_pattern() {
  static const Pattern p = [] {
    Pattern q("prism", false);
    q.edge("x", "y").edge("x", "u1").edge("x", "u2").edge("u1", "v1").edge("u2", "v2");
    q.edge("v1", "v2").edge("v1", "w1").edge("v2", "w2").edge("w1", "w2");
    q.color("x", ColorReq::Black);
    return q;
  }();
  return p;
}

std::optional<Firing> prism(const RuleContext& ctx) {
  return by_pattern(ctx, prism_pattern(), [](const Embedding& e) {
    return std::vector<Demand>{{e["y"], Color::White}};
  });
}

std::optional<Witness> stranded_black(const Graph& g, const PartialColoring& c) {
  for (VertexId v : g.vertices()) {
    if (!c.is_black(v) || black_neighbors(g, c, v) > 0) continue;
    bool open = false;
    for (VertexId w : g.neighbors(v))
      if (c.is_uncolored(w)) {
        open = true;
        break;
      }
    if (!open) return Witness{"stranded-black", {{"v", v}}, v, "black vertex cannot be matched"};
  }
  return std::nullopt;
}

}  // namespace

const std::vector<ForcingRule>& forcing_rules() {
  using S = RuleStrength;
  static const std::vector<ForcingRule> rules = {
      {"white-neighbours", S::Forced, false, white_neighbours},
      {"black-pair", S::Forced, false, black_pair},
      {"last-candidate", S::Forced, false, last_candidate},
      {"square-parity", S::Forced, false, square_parity},
      {"triangle-pendant", S::Forced, false, triangle_pendant},
      {"leaf", S::Forced, false, leaf},
      {"common-neighbour", S::Forced, false, common_neighbour},
      {"butterfly", S::Forced, false, butterfly},
      {"diamond", S::Forced, false, diamond},
      {"surplus-leaves", S::MayAssume, false, surplus_leaves},
      {"relay", S::Forced, false, relay, &relay_pattern()},
      {"spur", S::Forced, false, spur, &spur_pattern()},
      {"kite", S::Forced, false, kite, &kite_pattern()},
      {"pentagon-apex", S::Forced, false, pentagon_apex, &pentagon_apex_pattern()},
      {"pentagon-tip", S::Forced, false, pentagon_tip, &pentagon_tip_pattern()},
      {"pentagon-guard", S::Forced, false, pentagon_guard, &pentagon_guard_pattern()},
      {"pentagon-swap", S::MayAssume, false, pentagon_swap, &pentagon_swap_pattern()},
      {"twin-spur", S::Forced, false, twin_spur, &twin_spur_pattern()},
      {"tripod", S::Forced, false, tripod, &tripod_pattern()},
      {"square-degree-two", S::Forced, false, square_degree_two, &square_degree_two_pattern()},
      {"long-hook", S::Forced, false, long_hook, &long_hook_pattern()},
      {"double-ladder", S::MayAssume, false, double_ladder, &double_ladder_pattern()},
      {"isolated-triple", S::Forced, true, isolated_triple},
      {"hexagon", S::Forced, true, hexagon, &hexagon_pattern()},
      {"four-fan", S::Forced, false, four_fan},
      {"heptagon", S::Forced, false, heptagon, &heptagon_pattern()},
      {"prism", S::Forced, false, prism, &prism_pattern()},
  };
  return rules;
}

const ForcingRule* find_forcing_rule(const std::string& id) {
  for (const auto& r : forcing_rules())
    if (r.id == id) return &r;
  return nullptr;
}

Verdict propagate(const Graph& g, const PartialColoring& c0, const PropagateOptions& opt) {
  if (contains_k4(g)) return Refuted{Witness{"k4", {}, -1, "graph contains K4"}};
  if (!is_feasible_partial(g, c0))
    return Refuted{Witness{"infeasible-input", {}, -1, "coloring is not feasible"}};
  PartialColoring c = c0.restricted_to(g);
  for (;;) {
    if (auto w = stranded_black(g, c)) return Refuted{*w};
    RuleContext ctx{g, c, opt.s222_free};
    bool changed = false;
    for (const auto& rule : forcing_rules()) {
      if (rule.needs_s222_free && !opt.s222_free) continue;
      if (rule.strength == RuleStrength::MayAssume && !opt.may_assume) continue;
      auto f = rule.fire(ctx);
      if (!f) continue;
      if (opt.on_fire) opt.on_fire(ForcingEvent{rule, g, c, *f});
      PartialColoring next = c;
      for (const auto& d : f->demands) {
        Verdict v = assign(g, next, d.vertex, d.color);
        if (auto* r = std::get_if<Refuted>(&v))
          return Refuted{Witness{rule.id, f->embedding, d.vertex, r->witness.reason}};
        next = std::get<Progress>(std::move(v)).coloring;
      }
      c = std::move(next);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  if (c.complete_on(g)) return Completed{std::move(c)};
  return Progress{std::move(c)};
}

bool is_clean_pair(const Graph& g, const PartialColoring& c, const PropagateOptions& opt) {
  if (!c.with_color(g, Color::White).empty()) return false;
  auto blacks = c.with_color(g, Color::Black);
  for (VertexId b : blacks) {
    auto d = distances_from(g, b);
    for (VertexId o : blacks)
      if (o != b && d[o] >= 0 && d[o] < 3) return false;
  }
  PropagateOptions quiet = opt;
  quiet.on_fire = nullptr;
  Verdict v = propagate(g, c, quiet);
  if (refuted(v)) return false;
  return coloring_of(v) == c.restricted_to(g);
}

}  // namespace dim
