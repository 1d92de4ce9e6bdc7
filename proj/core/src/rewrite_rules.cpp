#include <algorithm>

#include "dim/rewrite.hpp"

namespace dim {

namespace {

constexpr Color B = Color::Black;
constexpr Color W = Color::White;

using Added = std::vector<std::pair<std::string, VertexId>>;

Color known(const PartialColoring& c, const TraceEntry& e, const std::string& role) {
  Color x = c[e.role(role)];
  if (x == Color::Uncolored)
    throw InternalError(e.rule + ": boundary vertex " + role + " uncolored during lift");
  return x;
}

void put(PartialColoring& c, const TraceEntry& e, const std::string& role, Color x) {
  c.set(e.role(role), x);
}

void put_all(PartialColoring& c, const TraceEntry& e, std::initializer_list<const char*> roles, Color x) {
  for (const char* r : roles) put(c, e, r, x);
}

[[noreturn]] void fallthrough(const TraceEntry& e, const std::string& why) {
  throw InternalError(e.rule + ": no lift case applies (" + why + ")");
}

bool always(const Graph&, const PartialColoring&, const Embedding&) { return true; }

void remove_roles(GraphEditor& ed, const Embedding& e, std::initializer_list<const char*> roles) {
  for (const char* r : roles) ed.remove_vertex(e[r]);
}

// ---- reductions ----

const Pattern& r1_pattern() {
  static const Pattern p = [] {
    Pattern q("R1");
    q.edge("w", "x").edge("x", "y").edge("y", "z");
    q.closed("x").closed("y").closed("z");
    q.color("x", ColorReq::Uncolored).color("z", ColorReq::Uncolored);
    return q;
  }();
  return p;
}

void r1_lift(const TraceEntry& e, PartialColoring& c) {
  if (known(c, e, "w") == B) {
    put_all(c, e, {"y", "z"}, B);
    put(c, e, "x", W);
  } else {
    put_all(c, e, {"x", "y"}, B);
    put(c, e, "z", W);
  }
}

const Pattern& r2_pattern() {
  static const Pattern p = [] {
    Pattern q("R2");
    q.edge("x", "u").edge("x", "v").edge("x", "w");
    q.edge("u", "a1").edge("v", "a2").edge("w", "a3");
    q.edge("a1", "a2").edge("a2", "a3").edge("a1", "a3");
    for (const char* r : {"x", "u", "v", "w"}) q.closed(r);
    for (const char* r : {"u", "v", "w"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

void r2_lift(const TraceEntry& e, PartialColoring& c) {
  const char* spokes[] = {"u", "v", "w"};
  const char* rim[] = {"a1", "a2", "a3"};
  int whites = 0;
  for (int i = 0; i < 3; ++i) {
    bool white = known(c, e, rim[i]) == W;
    whites += white;
    put(c, e, spokes[i], white ? B : W);
  }
  if (whites != 1) fallthrough(e, "triangle must have exactly one white vertex");
  put(c, e, "x", B);
}

Pattern fan_pattern(std::string name, bool with_leaf, bool linked) {
  Pattern q(std::move(name));
  for (const char* w : {"w1", "w2", "w3", "w4"}) q.edge("v", w);
  q.edge("w1", "u1").edge("w2", "u2").edge("w3", "u3").edge("w4", "u4");
  q.edge("x", "u1").edge("x", "u2").edge("u1", "u2");
  q.edge("y", "u3").edge("y", "u4").edge("u3", "u4");
  if (linked) q.edge("x", "y");
  if (with_leaf) {
    q.edge("v", "w5");
    q.closed("w5").color("w5", ColorReq::Uncolored);
  }
  q.closed("v");
  for (const char* w : {"w1", "w2", "w3", "w4"}) q.closed(w).color(w, ColorReq::Uncolored);
  return q;
}

// The spoke in front of the unique white rim vertex is the partner of v.
void fan_lift(const TraceEntry& e, PartialColoring& c, bool with_leaf, bool allow_none) {
  const char* ws[] = {"w1", "w2", "w3", "w4"};
  const char* us[] = {"u1", "u2", "u3", "u4"};
  int white = -1;
  for (int i = 0; i < 4; ++i)
    if (known(c, e, us[i]) == W) {
      if (white >= 0) fallthrough(e, "two white rim vertices");
      white = i;
    }
  if (white < 0 && !allow_none) fallthrough(e, "no white rim vertex");
  put(c, e, "v", B);
  for (int i = 0; i < 4; ++i) put(c, e, ws[i], i == white ? B : W);
  if (with_leaf) put(c, e, "w5", white < 0 ? B : W);
}

const Pattern& r3_pattern() {
  static const Pattern p = fan_pattern("R3", true, true);
  return p;
}
const Pattern& r4_pattern() {
  static const Pattern p = fan_pattern("R4", false, true);
  return p;
}

const Pattern& r5_pattern() {
  static const Pattern p = [] {
    Pattern q("R5");
    q.edge("a", "b").edge("b", "x").edge("x", "w1").edge("w1", "a");
    q.edge("w2", "a").edge("w2", "x").edge("w2", "p").edge("w2", "q").edge("p", "q");
    q.maybe("p", "b").maybe("p", "w1");
    q.closed("w2").closed("p").closed("q");
    q.color("w2", ColorReq::Uncolored);
    return q;
  }();
  return p;
}

bool r5_guard(const Graph& g, const PartialColoring& c, const Embedding& e) {
  bool p_linked = g.adjacent(e["p"], e["b"]) || g.adjacent(e["p"], e["w1"]);
  return !(p_linked && c.is_black(e["p"]));
}

void triangle_tail_lift(const TraceEntry& e, PartialColoring& c, const char* first, const char* second,
                        Color other_color) {
  // `second` has no edges leaving the rule; it is black unless `first` was black already.
  const char* black = second;
  const char* other = first;
  for (const auto& d : e.removed_colors)
    if (d.color == B && d.vertex == e.role(first)) {
      black = first;
      other = second;
    }
  put(c, e, black, B);
  put(c, e, other, other_color);
}

void r5_lift(const TraceEntry& e, PartialColoring& c) {
  put(c, e, "w2", known(c, e, "w1"));
  triangle_tail_lift(e, c, "p", "q", known(c, e, "x"));
}

const Pattern& r6_pattern() {
  static const Pattern p = [] {
    Pattern q("R6");
    q.edge("a", "b").edge("b", "c").edge("a", "c").edge("b", "x").edge("a", "w1");
    q.edge("x", "w1").edge("x", "s").edge("w1", "s").edge("b", "y").edge("a", "w2");
    q.edge("y", "u2").edge("w2", "u2");
    for (const char* r : {"a", "b", "c", "y", "w2", "u2"}) q.closed(r);
    for (const char* r : {"a", "b", "y", "w2"}) q.color(r, ColorReq::Uncolored);
    q.color("s", ColorReq::Black);
    return q;
  }();
  return p;
}

void r6_lift(const TraceEntry& e, PartialColoring& c) {
  Color cx = known(c, e, "x"), cw = known(c, e, "w1");
  if (cx == cw) fallthrough(e, "x and w1 share a color");
  put_all(c, e, {"a", "y"}, cx);
  put_all(c, e, {"b", "w2"}, cw);
  put_all(c, e, {"c", "u2"}, B);
}

const Pattern& r7_pattern() {
  static const Pattern p = [] {
    Pattern q("R7");
    q.edge("a", "b").edge("b", "c").edge("a", "c").edge("b", "x");
    q.edge("x", "y").edge("y", "z").edge("x", "z");
    q.edge("a", "w1").edge("x", "w1").edge("w1", "u1").edge("w1", "t").edge("u1", "t");
    q.edge("a", "w2");
    q.maybe("t", "b").maybe("t", "w2").maybe("t", "y");
    q.closed("w1").closed("u1").closed("t");
    q.color("c", ColorReq::Black).color("w1", ColorReq::Uncolored);
    return q;
  }();
  return p;
}

bool r7_guard(const Graph& g, const PartialColoring& c, const Embedding& e) {
  VertexId t = e["t"];
  bool linked = g.adjacent(t, e["b"]) || g.adjacent(t, e["w2"]) || g.adjacent(t, e["y"]);
  if (linked && c.is_black(t)) return false;
  if (g.adjacent(t, e["y"]) && !c.is_black(e["z"])) return false;
  return true;
}

void r7_lift(const TraceEntry& e, PartialColoring& c) {
  Color cb = known(c, e, "b"), ca = known(c, e, "a");
  if (ca == cb) fallthrough(e, "a and b share a color");
  put(c, e, "w1", cb);
  triangle_tail_lift(e, c, "t", "u1", ca);
}

const Pattern& r8_pattern() {
  static const Pattern p = [] {
    Pattern q("R8");
    q.edge("x", "y").edge("y", "z").edge("x", "z").edge("z", "u").edge("z", "w2");
    q.edge("y", "w1").edge("w1", "v").edge("v", "w2");
    for (const char* r : {"x", "y", "z", "w1", "w2", "v"}) q.closed(r);
    for (const char* r : {"y", "z", "w1", "w2"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

void r8_lift(const TraceEntry& e, PartialColoring& c) {
  if (known(c, e, "u") == B) {
    put_all(c, e, {"z", "w1"}, W);
    put_all(c, e, {"x", "y", "w2", "v"}, B);
  } else {
    put_all(c, e, {"y", "w2"}, W);
    put_all(c, e, {"x", "z", "w1", "v"}, B);
  }
}

// ---- transformations ----

const Pattern& t1_pattern() {
  static const Pattern p = fan_pattern("T1", true, false);
  return p;
}
const Pattern& t2_pattern() {
  static const Pattern p = fan_pattern("T2", false, false);
  return p;
}

Added t1_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"v", "w1", "w2", "w3", "w4", "w5"});
  VertexId a = ed.add_vertex(), b = ed.add_vertex(), c = ed.add_vertex();
  ed.add_edge(a, b), ed.add_edge(b, c), ed.add_edge(a, c);
  ed.add_edge(b, e["x"]), ed.add_edge(c, e["y"]);
  return {{"a", a}, {"b", b}, {"c", c}};
}

Added t2_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"v", "w1", "w2", "w3", "w4"});
  ed.add_edge(e["x"], e["y"]);
  return {};
}

const Pattern& t3_pattern() {
  static const Pattern p = [] {
    Pattern q("T3");
    for (const char* w : {"w1", "w2", "w3", "w4"}) q.edge("v", w);
    q.edge("w1", "u1").edge("w2", "u2").edge("w3", "u3");
    q.edge("u1", "u2").edge("x", "u1").edge("x", "u2");
    q.closed("v");
    for (const char* w : {"w1", "w2", "w3", "w4"}) q.closed(w).color(w, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

Added t3_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"v", "w1", "w2", "w3", "w4"});
  Added a;
  for (int i = 1; i <= 7; ++i) a.emplace_back("a" + std::to_string(i), ed.add_vertex());
  auto id = [&](int i) { return a[i - 1].second; };
  ed.add_edge(id(1), id(2)), ed.add_edge(id(2), id(3)), ed.add_edge(id(1), id(3));
  ed.add_edge(id(1), id(4)), ed.add_edge(id(4), id(5)), ed.add_edge(id(5), id(6));
  ed.add_edge(id(5), id(7));
  ed.add_edge(e["x"], id(1)), ed.add_edge(id(7), e["u3"]);
  return a;
}

void t3_lift(const TraceEntry& e, PartialColoring& c) {
  const char* ws[] = {"w1", "w2", "w3"};
  const char* us[] = {"u1", "u2", "u3"};
  int white = -1;
  for (int i = 0; i < 3; ++i)
    if (known(c, e, us[i]) == W) {
      if (white >= 0) fallthrough(e, "two white rim vertices");
      white = i;
    }
  put(c, e, "v", B);
  for (int i = 0; i < 3; ++i) put(c, e, ws[i], i == white ? B : W);
  put(c, e, "w4", white < 0 ? B : W);
}

const Pattern& t4_pattern() {
  static const Pattern p = [] {
    Pattern q("T4");
    q.edge("x", "y").edge("y", "z").edge("x", "z");
    q.edge("x", "w2").edge("x", "w3").edge("y", "w1").edge("z", "w4");
    q.edge("u1", "w1").edge("u1", "w2").edge("u1", "d");
    q.edge("u2", "w3").edge("u2", "w4").edge("u2", "e");
    for (const char* r : {"u1", "u2", "w1", "w2", "w3", "w4", "x", "y", "z"}) q.closed(r);
    for (const char* r : {"w1", "w2", "w3", "w4", "x", "y", "z"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

Added t4_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"u1", "u2", "w1", "w2", "w3", "w4", "x", "y", "z"});
  VertexId v1 = ed.add_vertex(), v2 = ed.add_vertex();
  ed.add_edge(v1, e["d"]), ed.add_edge(v1, e["e"]), ed.add_edge(v1, v2);
  return {{"v1", v1}, {"v2", v2}};
}

void t4_lift(const TraceEntry& e, PartialColoring& c) {
  Color cd = known(c, e, "d"), ce = known(c, e, "e");
  if (cd == W && ce == W) {
    put_all(c, e, {"u1", "u2", "w2", "w3", "y", "z"}, B);
    put_all(c, e, {"w1", "x", "w4"}, W);
  } else if (cd == B && ce == W) {
    put_all(c, e, {"u1", "u2", "x", "y", "w4"}, B);
    put_all(c, e, {"w1", "w2", "w3", "z"}, W);
  } else if (cd == W && ce == B) {
    put_all(c, e, {"u1", "u2", "x", "z", "w1"}, B);
    put_all(c, e, {"w4", "w3", "w2", "y"}, W);
  } else {
    fallthrough(e, "d and e both black");
  }
}

const Pattern& t5_pattern() {
  static const Pattern p = [] {
    Pattern q("T5");
    q.edge("x", "y").edge("x", "z").edge("y", "z").edge("y", "w1").edge("z", "w2").edge("z", "u");
    q.edge("w1", "v").edge("w2", "v").edge("v", "f");
    q.degree("f", 1, 2);
    for (const char* r : {"x", "y", "z", "w1", "w2", "v"}) q.closed(r);
    for (const char* r : {"x", "y", "z", "w1", "w2"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

Added t5_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"x", "y", "z", "w1", "w2", "v"});
  Added a;
  for (int i = 7; i <= 12; ++i) a.emplace_back("a" + std::to_string(i), ed.add_vertex());
  auto id = [&](int i) { return a[i - 7].second; };
  ed.add_edge(e["f"], id(7)), ed.add_edge(id(7), id(8)), ed.add_edge(id(7), id(9));
  ed.add_edge(id(9), id(10)), ed.add_edge(id(10), id(11)), ed.add_edge(id(10), id(12));
  ed.add_edge(id(11), id(12)), ed.add_edge(e["u"], id(10));
  return a;
}

void t5_lift(const TraceEntry& e, PartialColoring& c) {
  Color cf = known(c, e, "f"), cu = known(c, e, "u");
  if (cf == B && cu == W) {
    put_all(c, e, {"v", "y", "z"}, B);
    put_all(c, e, {"w1", "w2", "x"}, W);
  } else if (cf == W && cu == B) {
    put_all(c, e, {"v", "w2", "y", "x"}, B);
    put_all(c, e, {"w1", "z"}, W);
  } else if (cf == W && cu == W) {
    put_all(c, e, {"v", "w1", "z", "x"}, B);
    put_all(c, e, {"w2", "y"}, W);
  } else {
    fallthrough(e, "f and u both black");
  }
}

const Pattern& t6_pattern() {
  static const Pattern p = [] {
    Pattern q("T6");
    q.edge("a", "b").edge("b", "c").edge("a", "c");
    q.edge("a", "w1").edge("a", "w2").edge("b", "x").edge("b", "y");
    q.edge("x", "w1").edge("y", "w2");
    q.edge("x", "s").edge("w1", "s").edge("y", "p").edge("w2", "p");
    q.maybe("s", "p").maybe("s", "y").maybe("s", "w2").maybe("p", "x").maybe("p", "w1");
    q.closed("a").closed("b").closed("c");
    q.color("a", ColorReq::Uncolored).color("b", ColorReq::Uncolored).color("c", ColorReq::NotWhite);
    return q;
  }();
  return p;
}

Added t6_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"a", "b", "c"});
  ed.add_edge(e["y"], e["w1"]);
  ed.add_edge(e["x"], e["w2"]);
  return {};
}

void t6_lift(const TraceEntry& e, PartialColoring& c) {
  Color cx = known(c, e, "x"), cw = known(c, e, "w1");
  if (cx == cw) fallthrough(e, "x and w1 share a color");
  put(c, e, "a", cx);
  put(c, e, "b", cw);
  put(c, e, "c", B);
}

const Pattern& t7_pattern() {
  static const Pattern p = [] {
    Pattern q("T7");
    q.edge("a", "b").edge("b", "c").edge("a", "c").edge("b", "x").edge("a", "w1");
    q.edge("x", "w1").edge("x", "s").edge("w1", "s");
    q.degree("b", 3);
    q.color("c", ColorReq::Black).color("s", ColorReq::Black);
    return q;
  }();
  return p;
}

Added t7_apply(GraphEditor& ed, const Embedding& e) {
  ed.remove_edge(e["b"], e["x"]);
  return {};
}

void identity_lift(const TraceEntry&, PartialColoring&) {}

const Pattern& t8_pattern() {
  static const Pattern p = [] {
    Pattern q("T8", false);
    q.edge("y1", "z1").edge("y1", "x1").edge("y1", "a").edge("a", "b").edge("b", "y2");
    q.edge("y2", "z2").edge("y2", "x2").forbid("y1", "x2");
    q.degree("y1", 3).degree("z1", 1).degree("a", 2).degree("b", 2).degree("y2", 3).degree("z2", 1);
    for (const char* r : {"a", "b", "z2"}) q.color(r, ColorReq::Uncolored);
    return q;
  }();
  return p;
}

Added t8_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"a", "b", "y2", "z2"});
  ed.add_edge(e["y1"], e["x2"]);
  return {};
}

void t8_lift(const TraceEntry& e, PartialColoring& c) {
  if (known(c, e, "x2") == W) {
    put_all(c, e, {"b", "y2"}, B);
    put_all(c, e, {"a", "z2"}, W);
  } else {
    put_all(c, e, {"a", "y2"}, B);
    put_all(c, e, {"b", "z2"}, W);
  }
}

const Pattern& t9_pattern() {
  static const Pattern p = [] {
    Pattern q("T9");
    q.edge("v1", "v2").edge("v2", "v3").edge("v3", "v4").edge("v4", "v5").maybe("v1", "v5");
    for (const char* r : {"v2", "v3", "v4"}) q.closed(r).color(r, ColorReq::NotWhite);
    return q;
  }();
  return p;
}

// x lies in a triangle avoiding the neighbours of y.
bool triangle_apart(const Graph& g, VertexId x, VertexId y) {
  const auto& nx = g.neighbors(x);
  for (std::size_t i = 0; i < nx.size(); ++i)
    for (std::size_t j = i + 1; j < nx.size(); ++j) {
      VertexId a = nx[i], b = nx[j];
      if (a != y && b != y && g.adjacent(a, b) && !g.adjacent(a, y) && !g.adjacent(b, y)) return true;
    }
  return false;
}

// Adjacent ends must be forced apart, otherwise two black ends cannot be lifted.
bool t9_guard(const Graph& g, const PartialColoring&, const Embedding& e) {
  VertexId a = e["v1"], b = e["v5"];
  return !g.adjacent(a, b) || triangle_apart(g, a, b) || triangle_apart(g, b, a);
}

Added t9_apply(GraphEditor& ed, const Embedding& e) {
  remove_roles(ed, e, {"v2", "v3", "v4"});
  ed.add_edge(e["v1"], e["v5"]);
  return {};
}

void t9_lift(const TraceEntry& e, PartialColoring& c) {
  Color a = known(c, e, "v1"), b = known(c, e, "v5");
  if (a == B && b == W) {
    put_all(c, e, {"v3", "v4"}, B);
    put(c, e, "v2", W);
  } else if (a == W && b == B) {
    put_all(c, e, {"v2", "v3"}, B);
    put(c, e, "v4", W);
  } else if (a == B && b == B) {
    put_all(c, e, {"v2", "v4"}, B);
    put(c, e, "v3", W);
  } else {
    fallthrough(e, "v1 and v5 both white");
  }
}

Added delete_closed(GraphEditor& ed, const Embedding& e) {
  for (int i = 0; i < e.pattern->size(); ++i)
    if (e.pattern->is_closed(i)) ed.remove_vertex(e.images[i]);
  return {};
}

}  // namespace

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = {
      {"R1", "pendant path", true, &r1_pattern(), always, delete_closed, r1_lift},
      {"R2", "triangle hub", true, &r2_pattern(), always, delete_closed, r2_lift},
      {"R3", "linked fan with leaf", true, &r3_pattern(), always, delete_closed,
       [](const TraceEntry& e, PartialColoring& c) { fan_lift(e, c, true, false); }},
      {"R4", "linked fan", true, &r4_pattern(), always, delete_closed,
       [](const TraceEntry& e, PartialColoring& c) { fan_lift(e, c, false, false); }},
      {"R5", "square with triangle", true, &r5_pattern(), r5_guard, delete_closed, r5_lift},
      {"R6", "double triangle bridge", true, &r6_pattern(), always, delete_closed, r6_lift},
      {"R7", "triangle pair with tail", true, &r7_pattern(), r7_guard, delete_closed, r7_lift},
      {"R8", "triangle with square tail", true, &r8_pattern(), always, delete_closed, r8_lift},
      {"T1", "unlinked fan with leaf", false, &t1_pattern(), always, t1_apply,
       [](const TraceEntry& e, PartialColoring& c) { fan_lift(e, c, true, true); }},
      {"T2", "unlinked fan", false, &t2_pattern(), always, t2_apply,
       [](const TraceEntry& e, PartialColoring& c) { fan_lift(e, c, false, false); }},
      {"T3", "three-spoke fan with leaf", false, &t3_pattern(), always, t3_apply, t3_lift},
      {"T4", "triangle between two hubs", false, &t4_pattern(), always, t4_apply, t4_lift},
      {"T5", "triangle with hub tail", false, &t5_pattern(), always, t5_apply, t5_lift},
      {"T6", "triangle between squares", false, &t6_pattern(), always, t6_apply, t6_lift},
      {"T7", "redundant bridge", false, &t7_pattern(), always, t7_apply, identity_lift},
      {"T8", "leafy path", false, &t8_pattern(), always, t8_apply, t8_lift},
      {"T9", "long path", false, &t9_pattern(), t9_guard, t9_apply, t9_lift},
  };
  return rules;
}

const RewriteRule* find_rewrite_rule(const std::string& id) {
  for (const auto& r : rewrite_rules())
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace dim
