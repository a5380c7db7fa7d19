#include "quiverlab/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quiverlab {

namespace {

struct DArrow {
  std::string name, src, dst;
};

std::vector<DArrow> pure_arrows(const Quiver& q) {
  std::vector<DArrow> out;
  for (const auto& e : q.edges()) out.push_back({e.name, e.src, e.dst});
  return out;
}

std::vector<DArrow> double_arrows(const Quiver& q) {
  std::vector<DArrow> out = pure_arrows(q);
  for (const auto& e : q.edges())
    out.push_back({e.name + "*", e.dst, e.src});
  return out;
}

Gen vertex_gen(const std::string& i, const std::string& j) {
  Gen g;
  g.key = {i, j};
  g.vertex = true;
  g.src = g.dst = {i, j};
  return g;
}

Gen arrow_gen(const DArrow& a, const DArrow& b) {
  Gen g;
  g.key = {a.name, b.name};
  g.vertex = false;
  g.src = {a.src, b.src};
  g.dst = {a.dst, b.dst};
  return g;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p) {
    if (c >= 0 && !first) os << " + ";
    if (c < 0) os << (first ? "-" : " - ");
    long long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    for (const auto& k : w) os << k.to_string();
    first = false;
  }
  os << " = 0";
  return os.str();
}

void add_term(Poly& p, const Word& w, long long c) {
  auto it = p.find(w);
  if (it == p.end()) {
    if (c != 0) p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

using SymbolTable = std::map<GenKey, Gen>;

// One-step reduction of the length-2 subword (g,h); returns true and
// fills `repl` when a structural or oriented rule applies.
bool reduce_pair(const Gen& g, const Gen& h,
                 const std::map<Word, Poly>& rules, Poly& repl) {
  if (g.vertex && h.vertex) {
    repl.clear();
    if (g.key == h.key) add_term(repl, {g.key}, 1);
    return true;
  }
  if (g.vertex) {
    repl.clear();
    if (std::pair{g.key.first, g.key.second} == h.src)
      add_term(repl, {h.key}, 1);
    return true;
  }
  if (h.vertex) {
    repl.clear();
    if (std::pair{h.key.first, h.key.second} == g.dst)
      add_term(repl, {g.key}, 1);
    return true;
  }
  if (g.dst != h.src) {
    repl.clear();
    return true;
  }
  auto it = rules.find(Word{g.key, h.key});
  if (it != rules.end()) {
    repl = it->second;
    return true;
  }
  return false;
}

struct ReduceLimits {
  std::size_t steps = 0;
  std::size_t step_cap = 200000;
  std::size_t max_len = 0;
  bool guard_hit = false;
};

Poly normalize(Poly p, const std::map<Word, Poly>& rules,
               const SymbolTable& tab, ReduceLimits& lim) {
  bool changed = true;
  while (changed && !lim.guard_hit) {
    changed = false;
    for (const auto& [w, c] : p) {
      if (w.size() < 2) continue;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Poly repl;
        if (!reduce_pair(tab.at(w[i]), tab.at(w[i + 1]), rules, repl))
          continue;
        if (++lim.steps > lim.step_cap) {
          lim.guard_hit = true;
          return p;
        }
        long long coef = c;
        Word head = w;
        add_term(p, head, -coef);
        for (const auto& [rw, rc] : repl) {
          Word full(head.begin(), head.begin() + i);
          full.insert(full.end(), rw.begin(), rw.end());
          full.insert(full.end(), head.begin() + i + 2, head.end());
          if (full.size() > lim.max_len) {
            lim.guard_hit = true;
            return p;
          }
          add_term(p, full, coef * rc);
        }
        changed = true;
        break;
      }
      if (changed) break;  // the map was mutated; restart the scan
    }
  }
  return p;
}

// Orients each relation as: largest monomial -> minus the rest.
std::map<Word, Poly> orient(const std::vector<Poly>& relations,
                            std::vector<std::string>& diffs) {
  auto word_less = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::map<Word, Poly> rules;
  for (const Poly& r : relations) {
    if (r.empty()) continue;
    const Word* head = nullptr;
    long long hc = 0;
    for (const auto& [w, c] : r)
      if (!head || word_less(*head, w)) {
        head = &w;
        hc = c;
      }
    if (hc != 1 && hc != -1) {
      diffs.push_back("cannot orient relation (head coefficient " +
                      std::to_string(hc) + "): " + poly_to_string(r));
      continue;
    }
    Poly rhs;
    for (const auto& [w, c] : r)
      if (w != *head) add_term(rhs, w, -c * hc);
    rules.emplace(*head, std::move(rhs));
  }
  return rules;
}

}  // namespace

const Gen* Presentation::find(const GenKey& k) const {
  for (const auto& g : gens)
    if (g.key == k) return &g;
  return nullptr;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  for (const auto& r : relations) os << poly_to_string(r) << "\n";
  return os.str();
}

Presentation lpa_presentation(const Quiver& q) {
  Presentation p;
  p.name = "LPA(" + q.name() + "^)";
  auto arrows = pure_arrows(q);
  std::vector<DArrow> ghosts;
  for (const auto& a : arrows) ghosts.push_back({a.name + "*", a.dst, a.src});

  std::vector<Gen> vgens;
  for (const auto& i : q.vertices())
    for (const auto& j : q.vertices()) vgens.push_back(vertex_gen(i, j));
  p.gens = vgens;
  for (const auto& a : arrows)
    for (const auto& b : arrows) p.gens.push_back(arrow_gen(a, b));
  for (const auto& a : ghosts)
    for (const auto& b : ghosts) p.gens.push_back(arrow_gen(a, b));

  // (1) orthogonal idempotents
  for (const auto& g : vgens)
    for (const auto& h : vgens) {
      Poly r;
      add_term(r, {g.key, h.key}, 1);
      if (g.key == h.key) add_term(r, {g.key}, -1);
      p.relations.push_back(std::move(r));
    }
  // (2) units absorb arrow pairs
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      GenKey k{a.name, b.name};
      Poly l, rr;
      add_term(l, {{a.src, b.src}, k}, 1);
      add_term(l, {k}, -1);
      add_term(rr, {k, {a.dst, b.dst}}, 1);
      add_term(rr, {k}, -1);
      p.relations.push_back(std::move(l));
      p.relations.push_back(std::move(rr));
    }
  // (3) CK-1
  for (const auto& a : arrows)
    for (const auto& b : arrows)
      for (const auto& a2 : arrows)
        for (const auto& b2 : arrows) {
          Poly r;
          add_term(r, {{a.name + "*", b.name + "*"}, {a2.name, b2.name}}, 1);
          if (a.name == a2.name && b.name == b2.name)
            add_term(r, {{a.dst, b.dst}}, -1);
          p.relations.push_back(std::move(r));
        }
  // (4) CK-2 at non-sink vertex pairs
  for (const auto& i : q.vertices())
    for (const auto& j : q.vertices()) {
      if (q.out_degree(q.vertex_index(i)) == 0 ||
          q.out_degree(q.vertex_index(j)) == 0)
        continue;
      Poly r;
      for (const auto& a : arrows)
        for (const auto& b : arrows)
          if (a.src == i && b.src == j)
            add_term(r,
                     {{a.name, b.name}, {a.name + "*", b.name + "*"}}, 1);
      add_term(r, {{i, j}}, -1);
      p.relations.push_back(std::move(r));
    }
  return p;
}

Presentation face_quotient_presentation(const Quiver& q) {
  Presentation p;
  p.name = "A(" + q.name() + ")";
  auto darrows = double_arrows(q);
  auto arrows = pure_arrows(q);

  std::vector<Gen> vgens;
  for (const auto& i : q.vertices())
    for (const auto& j : q.vertices()) vgens.push_back(vertex_gen(i, j));
  p.gens = vgens;
  for (const auto& a : darrows)
    for (const auto& b : darrows) p.gens.push_back(arrow_gen(a, b));

  // face algebra (1): orthogonal idempotents
  for (const auto& g : vgens)
    for (const auto& h : vgens) {
      Poly r;
      add_term(r, {g.key, h.key}, 1);
      if (g.key == h.key) add_term(r, {g.key}, -1);
      p.relations.push_back(std::move(r));
    }
  // face algebra (2): units absorb every double-quiver arrow pair
  for (const auto& a : darrows)
    for (const auto& b : darrows) {
      GenKey k{a.name, b.name};
      Poly l, rr;
      add_term(l, {{a.src, b.src}, k}, 1);
      add_term(l, {k}, -1);
      add_term(rr, {k, {a.dst, b.dst}}, 1);
      add_term(rr, {k}, -1);
      p.relations.push_back(std::move(l));
      p.relations.push_back(std::move(rr));
    }
  // face algebra (3): non-composable products vanish
  for (const auto& a : darrows)
    for (const auto& b : darrows)
      for (const auto& a2 : darrows)
        for (const auto& b2 : darrows) {
          if (a.dst == a2.src && b.dst == b2.src) continue;
          Poly r;
          add_term(r, {{a.name, b.name}, {a2.name, b2.name}}, 1);
          p.relations.push_back(std::move(r));
        }
  // ideal (1): CK-1 shaped generators
  for (const auto& a : arrows)
    for (const auto& b : arrows)
      for (const auto& a2 : arrows)
        for (const auto& b2 : arrows) {
          Poly r;
          add_term(r, {{a.name + "*", b.name + "*"}, {a2.name, b2.name}}, 1);
          if (a.name == a2.name && b.name == b2.name)
            add_term(r, {{a.dst, b.dst}}, -1);
          p.relations.push_back(std::move(r));
        }
  // ideal (2): CK-2 shaped generators
  for (const auto& i : q.vertices())
    for (const auto& j : q.vertices()) {
      if (q.out_degree(q.vertex_index(i)) == 0 ||
          q.out_degree(q.vertex_index(j)) == 0)
        continue;
      Poly r;
      for (const auto& a : arrows)
        for (const auto& b : arrows)
          if (a.src == i && b.src == j)
            add_term(r,
                     {{a.name, b.name}, {a.name + "*", b.name + "*"}}, 1);
      add_term(r, {{i, j}}, -1);
      p.relations.push_back(std::move(r));
    }
  return p;
}

MatchResult presentations_match(const Presentation& a, const Presentation& b) {
  MatchResult res;
  SymbolTable tab;
  for (const Presentation* p : {&a, &b})
    for (const auto& g : p->gens) {
      auto [it, fresh] = tab.emplace(g.key, g);
      if (!fresh && !(it->second == g))
        res.diffs.push_back("conflicting metadata for symbol " +
                            g.key.to_string());
    }
  for (const Presentation* p : {&a, &b})
    for (const auto& r : p->relations)
      for (const auto& [w, c] : r) {
        (void)c;
        for (const auto& k : w)
          if (!tab.count(k))
            res.diffs.push_back(p->name + ": undeclared symbol " +
                                k.to_string());
      }
  if (!res.diffs.empty()) return res;

  std::map<Word, Poly> rules_a = orient(a.relations, res.diffs);
  std::map<Word, Poly> rules_b = orient(b.relations, res.diffs);

  std::size_t max_len = 0;  // 2|vertex pairs| + 2 word-length guard
  for (const auto& [k, g] : tab) {
    (void)k;
    if (g.vertex) ++max_len;
  }
  max_len = 2 * max_len + 2;

  auto check = [&](const Presentation& from, const std::map<Word, Poly>& rules) {
    for (const auto& r : from.relations) {
      ReduceLimits lim;
      lim.max_len = max_len;
      Poly residue = normalize(r, rules, tab, lim);
      if (lim.guard_hit) {
        res.diffs.push_back(from.name + ": reduction guard exceeded on " +
                            poly_to_string(r));
      } else if (!residue.empty()) {
        res.diffs.push_back(from.name + ": " + poly_to_string(r) +
                            "  reduces to  " + poly_to_string(residue));
      }
      if (res.diffs.size() > 25) return;
    }
  };
  check(a, rules_b);
  check(b, rules_a);
  res.match = res.diffs.empty();
  return res;
}

}  // namespace quiverlab
