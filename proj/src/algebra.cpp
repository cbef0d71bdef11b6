#include "earring/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "earring/errors.hpp"

namespace earring {

Idem letter_source(Letter l) {
  switch (l) {
    case Letter::S1:
    case Letter::D2:
      return Idem::Circ;
    default:
      return Idem::Bullet;
  }
}

Idem letter_target(Letter l) {
  switch (l) {
    case Letter::S2:
    case Letter::D2:
      return Idem::Circ;
    default:
      return Idem::Bullet;
  }
}

std::string idem_name(Idem e) { return e == Idem::Circ ? "a°" : "a•"; }

ChordWord ChordWord::of(std::vector<Letter> ls) {
  if (ls.empty()) throw std::invalid_argument("ChordWord::of needs letters");
  ChordWord w{letter_source(ls.front()), std::move(ls)};
  return w;
}

namespace {

bool is_d(Letter l) { return l == Letter::D1 || l == Letter::D2; }

const char* letter_name(Letter l) {
  static const char* names[] = {"S1", "S2", "D1", "D2"};
  return names[static_cast<int>(l)];
}

}  // namespace

bool is_valid(const ChordWord& w) {
  Idem at = w.src;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    Letter l = w.letters[k];
    if (letter_source(l) != at) return false;
    if (k > 0 && is_d(l) != is_d(w.letters[k - 1])) return false;
    at = letter_target(l);
  }
  return true;
}

std::string to_string(const ChordWord& w) {
  if (w.letters.empty()) return w.src == Idem::Circ ? "id°" : "id•";
  std::string s;
  for (Letter l : w.letters) s += letter_name(l);
  return s;
}

ChordWord parse_word(const std::string& s) {
  if (s == "id°" || s == "ido" || s == "id_o") return ChordWord::id(Idem::Circ);
  if (s == "id•" || s == "idb" || s == "id_b") return ChordWord::id(Idem::Bullet);
  std::vector<Letter> ls;
  for (size_t k = 0; k < s.size(); k += 2) {
    std::string tok = s.substr(k, 2);
    if (tok == "S1") ls.push_back(Letter::S1);
    else if (tok == "S2") ls.push_back(Letter::S2);
    else if (tok == "D1") ls.push_back(Letter::D1);
    else if (tok == "D2") ls.push_back(Letter::D2);
    else throw std::invalid_argument("bad chord word: " + s);
  }
  if (ls.empty()) throw std::invalid_argument("empty chord word");
  ChordWord w = ChordWord::of(std::move(ls));
  if (!is_valid(w)) throw std::invalid_argument("word violates the quiver relations: " + s);
  return w;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& w : o.terms) {
    auto it = terms.find(w);
    if (it == terms.end()) terms.insert(w);
    else terms.erase(it);
  }
  return *this;
}

std::string to_string(const AlgebraElement& x) {
  if (x.terms.empty()) return "0";
  // shorter words first
  std::vector<ChordWord> ws(x.terms.begin(), x.terms.end());
  std::stable_sort(ws.begin(), ws.end(), [](const ChordWord& a, const ChordWord& b) { return a.length() < b.length(); });
  std::string s;
  for (const auto& w : ws) {
    if (!s.empty()) s += "+";
    s += to_string(w);
  }
  return s;
}

AlgebraElement parse_element(const std::string& s) {
  AlgebraElement x;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, '+')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty() || tok == "0") continue;
    x += AlgebraElement(parse_word(tok));
  }
  return x;
}

AlgebraElement mul_B(const AlgebraElement& x, const AlgebraElement& y, int n_max) {
  AlgebraElement r;
  for (const auto& a : x.terms) {
    for (const auto& b : y.terms) {
      if (a.tgt() != b.src) continue;
      if (static_cast<int>(a.length() + b.length()) > n_max) continue;
      ChordWord w{a.src, a.letters};
      w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
      if (!is_valid(w)) continue;
      r += AlgebraElement(std::move(w));
    }
  }
  return r;
}

AlgebraElement central_H() { return H_id(Idem::Circ) + H_id(Idem::Bullet); }

AlgebraElement H_id(Idem e) {
  if (e == Idem::Circ)
    return AlgebraElement(ChordWord::of({Letter::D2})) + AlgebraElement(ChordWord::of({Letter::S1, Letter::S2}));
  return AlgebraElement(ChordWord::of({Letter::D1})) + AlgebraElement(ChordWord::of({Letter::S2, Letter::S1}));
}

// ---------------------------------------------------------------- complexes

AlgebraElement TwistedComplex::entry(int i, int j) const {
  auto it = d.find({i, j});
  return it == d.end() ? AlgebraElement{} : it->second;
}

void TwistedComplex::add(int i, int j, const AlgebraElement& x) {
  auto& e = d[{i, j}];
  e += x;
  if (e.is_zero()) d.erase({i, j});
}

int TwistedComplex::term_count() const {
  int n = 0;
  for (const auto& [k, v] : d) n += static_cast<int>(v.terms.size());
  return n;
}

bool TwistedComplex::lower_triangular() const {
  for (const auto& [k, v] : d)
    if (k.first >= k.second && !v.is_zero()) return false;
  return true;
}

McReport mc_check(const TwistedComplex& c, int n_max) {
  const int n = static_cast<int>(c.gens.size());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      AlgebraElement sq;
      for (int j = 0; j < n; ++j) {
        auto a = c.d.find({i, j});
        if (a == c.d.end()) continue;
        auto b = c.d.find({j, k});
        if (b == c.d.end()) continue;
        sq += mul_B(a->second, b->second, n_max);
      }
      if (!sq.is_zero()) return {false, i, k, sq};
    }
  }
  return {};
}

TwistedComplex functor_II(const TwistedComplex& c) {
  const int n = static_cast<int>(c.gens.size());
  TwistedComplex r;
  for (int copy = 0; copy < 2; ++copy)
    for (int i = 0; i < n; ++i) r.gens.push_back({"g" + std::to_string(copy * n + i + 1), c.gens[i].idem});
  for (const auto& [k, v] : c.d) {
    r.d[k] = v;
    r.d[{k.first + n, k.second + n}] = v;
  }
  for (int i = 0; i < n; ++i) r.d[{i, i + n}] = H_id(c.gens[i].idem);
  return r;
}

namespace {

// cancel one entry that is exactly an identity; false when there is none
bool cancel_identity(TwistedComplex& c, int n_max) {
  for (const auto& [key, val] : c.d) {
    if (val.terms.size() != 1 || val.terms.begin()->length() != 0) continue;
    auto [i, j] = key;
    TwistedComplex r;
    std::vector<int> remap(c.gens.size(), -1);
    for (int g = 0; g < static_cast<int>(c.gens.size()); ++g) {
      if (g == i || g == j) continue;
      remap[g] = static_cast<int>(r.gens.size());
      r.gens.push_back(c.gens[g]);
    }
    for (const auto& [k, v] : c.d) {
      if (remap[k.first] >= 0 && remap[k.second] >= 0) r.add(remap[k.first], remap[k.second], v);
    }
    for (const auto& [gk, into_j] : c.d) {
      if (gk.second != j || gk.first == i) continue;
      for (const auto& [hk, out_i] : c.d) {
        if (hk.first != i || hk.second == j) continue;
        AlgebraElement zz = mul_B(into_j, out_i, n_max);
        if (zz.is_zero()) continue;
        int g = remap[gk.first], h = remap[hk.second];
        if (g >= h)
          throw NonCancellable("cancelling " + c.gens[i].label + " -> " + c.gens[j].label + " creates an arrow " +
                               c.gens[gk.first].label + " -> " + c.gens[hk.second].label + " against the filtration");
        r.add(g, h, zz);
      }
    }
    c = std::move(r);
    return true;
  }
  return false;
}

// conjugate by 1 + h E_ab (a < b): row a gains h·d(b,·), column b gains d(·,a)·h
TwistedComplex basis_change(const TwistedComplex& c, int a, int b, const AlgebraElement& h, int n_max) {
  TwistedComplex r = c;
  for (const auto& [k, v] : c.d) {
    if (k.first == b) r.add(a, k.second, mul_B(h, v, n_max));
    if (k.second == a) r.add(k.first, b, mul_B(v, h, n_max));
  }
  return r;
}

std::vector<ChordWord> short_words(Idem from, Idem to) {
  std::vector<ChordWord> out;
  if (from == to) out.push_back(ChordWord::id(from));
  const Letter all[] = {Letter::S1, Letter::S2, Letter::D1, Letter::D2};
  for (Letter x : all) {
    if (letter_source(x) != from) continue;
    if (letter_target(x) == to) out.push_back(ChordWord::of({x}));
    for (Letter y : all) {
      ChordWord w = ChordWord::of({x, y});
      if (is_valid(w) && w.tgt() == to) out.push_back(w);
    }
  }
  return out;
}

bool best_basis_change(TwistedComplex& c, int n_max) {
  const int n = static_cast<int>(c.gens.size());
  int best = c.term_count();
  TwistedComplex chosen;
  bool found = false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (const auto& w : short_words(c.gens[a].idem, c.gens[b].idem)) {
        TwistedComplex t = basis_change(c, a, b, AlgebraElement(w), n_max);
        int cnt = t.term_count();
        if (cnt < best) {
          best = cnt;
          chosen = std::move(t);
          found = true;
        }
      }
    }
  }
  if (found) c = std::move(chosen);
  return found;
}

}  // namespace

TwistedComplex reduce(const TwistedComplex& c, int n_max) {
  TwistedComplex r = c;
  for (;;) {
    bool changed = false;
    while (cancel_identity(r, n_max)) changed = true;
    if (best_basis_change(r, n_max)) changed = true;
    if (!changed) break;
  }
  return r;
}

bool same_up_to_relabeling(const TwistedComplex& a, const TwistedComplex& b) {
  const int n = static_cast<int>(a.gens.size());
  if (n != static_cast<int>(b.gens.size()) || a.d.size() != b.d.size()) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int p = 0; p < n; ++p) {
      if (used[p] || a.gens[i].idem != b.gens[p].idem) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = a.entry(i, j) == b.entry(p, perm[j]) && a.entry(j, i) == b.entry(perm[j], p);
      }
      if (!ok) continue;
      perm[i] = p;
      used[p] = true;
      if (place(i + 1)) return true;
      used[p] = false;
    }
    return false;
  };
  return place(0);
}

namespace {

int f2_rank(std::vector<std::vector<bool>> m) {
  int rank = 0;
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
    size_t piv = rank;
    while (piv < rows && !m[piv][col]) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < rows; ++r)
      if (r != static_cast<size_t>(rank) && m[r][col])
        for (size_t k = col; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
    ++rank;
  }
  return rank;
}

void words_from(Idem e, int L, std::vector<ChordWord>& out) {
  std::vector<ChordWord> layer{ChordWord::id(e)};
  const Letter all[] = {Letter::S1, Letter::S2, Letter::D1, Letter::D2};
  for (int len = 0; len <= L; ++len) {
    std::vector<ChordWord> next;
    for (const auto& w : layer) {
      out.push_back(w);
      for (Letter l : all) {
        ChordWord v = w;
        v.letters.push_back(l);
        if (is_valid(v)) next.push_back(v);
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

std::array<int, 2> homology_ranks(const TwistedComplex& c, int L) {
  std::array<int, 2> out{0, 0};
  for (int end = 0; end < 2; ++end) {
    std::map<std::pair<int, ChordWord>, int> index;
    for (int g = 0; g < static_cast<int>(c.gens.size()); ++g) {
      std::vector<ChordWord> ws;
      words_from(c.gens[g].idem, L, ws);
      for (auto& w : ws)
        if (static_cast<int>(w.tgt()) == end) index.emplace(std::make_pair(g, w), static_cast<int>(index.size()));
    }
    const size_t N = index.size();
    std::vector<std::vector<bool>> m(N, std::vector<bool>(N, false));
    // boundary of (g, w) is the sum over arrows g' -> g of (g', d(g',g)·w)
    for (const auto& [key, col] : index) {
      const auto& [g, w] = key;
      for (const auto& [k, v] : c.d) {
        if (k.second != g) continue;
        for (const auto& t : mul_B(v, AlgebraElement(w), L).terms) {
          auto it = index.find({k.first, t});
          if (it != index.end()) m[it->second][col] = !m[it->second][col];
        }
      }
    }
    out[end] = static_cast<int>(N) - 2 * f2_rank(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------- text

std::string to_text(const TwistedComplex& c) {
  std::ostringstream os;
  for (const auto& g : c.gens) os << g.label << " = " << idem_name(g.idem) << "\n";
  for (const auto& [k, v] : c.d)
    os << c.gens[k.first].label << " -> " << c.gens[k.second].label << " : " << to_string(v) << "\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Idem parse_idem(const std::string& s) {
  if (s == "a°" || s == "ao" || s == "circ") return Idem::Circ;
  if (s == "a•" || s == "ab" || s == "bullet") return Idem::Bullet;
  throw std::invalid_argument("unknown idempotent: " + s);
}

}  // namespace

TwistedComplex from_text(const std::string& text) {
  TwistedComplex c;
  std::map<std::string, int> at;
  std::istringstream is(text);
  std::string line;
  struct Pending {
    int line;
    std::string from, to;
    AlgebraElement x;
  };
  std::vector<Pending> arrows;
  int lineno = 0;
  auto fail = [&](int n, const std::string& msg) { throw std::invalid_argument("line " + std::to_string(n) + ": " + msg); };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (auto arrow = line.find("->"); arrow != std::string::npos) {
        auto colon = line.find(':', arrow);
        if (colon == std::string::npos) fail(lineno, "arrow line needs ':'");
        arrows.push_back({lineno, trim(line.substr(0, arrow)), trim(line.substr(arrow + 2, colon - arrow - 2)),
                          parse_element(line.substr(colon + 1))});
      } else if (auto eq = line.find('='); eq != std::string::npos) {
        std::string name = trim(line.substr(0, eq));
        if (at.count(name)) fail(lineno, "duplicate generator " + name);
        at[name] = static_cast<int>(c.gens.size());
        c.gens.push_back({name, parse_idem(trim(line.substr(eq + 1)))});
      } else {
        fail(lineno, "expected 'g = a°' or 'g -> h : words'");
      }
    } catch (const std::invalid_argument& e) {
      std::string m = e.what();
      if (m.rfind("line ", 0) == 0) throw;
      fail(lineno, m);
    }
  }
  for (auto& [n, from, to, x] : arrows) {
    if (!at.count(from) || !at.count(to)) fail(n, "undeclared generator in " + from + " -> " + to);
    int i = at[from], j = at[to];
    for (const auto& w : x.terms) {
      if (w.src != c.gens[i].idem || w.tgt() != c.gens[j].idem)
        fail(n, "word " + to_string(w) + " does not run " + from + " -> " + to);
    }
    if (i >= j && !x.is_zero()) fail(n, "arrow " + from + " -> " + to + " goes against the generator order");
    c.add(i, j, x);
  }
  return c;
}

TwistedComplex t3_complex() {
  return from_text(
      "g1 = a°\ng2 = a•\ng3 = a•\ng4 = a•\n"
      "g1 -> g2 : S1\ng2 -> g3 : D1\ng3 -> g4 : S2S1\n");
}

TwistedComplex fig8_complex() { return from_text("g1 = a•\ng2 = a•\ng1 -> g2 : D1+S2S1\n"); }

}  // namespace earring
