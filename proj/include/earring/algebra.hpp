#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace earring {

inline constexpr int kNMax = 12;

enum class Idem : std::uint8_t { Circ, Bullet };  // a°, a•
enum class Letter : std::uint8_t { S1, S2, D1, D2 };

Idem letter_source(Letter l);
Idem letter_target(Letter l);
std::string idem_name(Idem e);

// A path in the quiver, read in travel order: S1 S2 goes a° -> a• -> a°.
struct ChordWord {
  Idem src = Idem::Circ;
  std::vector<Letter> letters;

  Idem tgt() const { return letters.empty() ? src : letter_target(letters.back()); }
  size_t length() const { return letters.size(); }
  auto operator<=>(const ChordWord&) const = default;

  static ChordWord id(Idem e) { return {e, {}}; }
  static ChordWord of(std::vector<Letter> ls);  // nonempty
};

bool is_valid(const ChordWord& w);
std::string to_string(const ChordWord& w);
ChordWord parse_word(const std::string& s);  // "S1S2", "D1", "id°", "id•" (also "ido", "idb")

// F2 combination of chord words
struct AlgebraElement {
  std::set<ChordWord> terms;

  AlgebraElement() = default;
  AlgebraElement(ChordWord w) { terms.insert(std::move(w)); }

  bool is_zero() const { return terms.empty(); }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    return r += o;
  }
  bool operator==(const AlgebraElement&) const = default;
};

std::string to_string(const AlgebraElement& x);
AlgebraElement parse_element(const std::string& s);  // "D1+S2S1", "0"

AlgebraElement mul_B(const AlgebraElement& x, const AlgebraElement& y, int n_max = kNMax);

// H = D1 + D2 + S1S2 + S2S1 and its restriction to one idempotent
AlgebraElement central_H();
AlgebraElement H_id(Idem e);

struct Generator {
  std::string label;
  Idem idem;
  bool operator==(const Generator&) const = default;
};

// d[{i,j}] is the arrow gens[i] -> gens[j]; the filtration is the order of gens
struct TwistedComplex {
  std::vector<Generator> gens;
  std::map<std::pair<int, int>, AlgebraElement> d;

  AlgebraElement entry(int i, int j) const;
  void add(int i, int j, const AlgebraElement& x);
  int term_count() const;
  bool lower_triangular() const;
  bool operator==(const TwistedComplex&) const = default;
};

struct McReport {
  bool ok = true;
  int i = -1, j = -1;  // first offending entry of d·d
  AlgebraElement value;
};
McReport mc_check(const TwistedComplex& c, int n_max = kNMax);

TwistedComplex functor_II(const TwistedComplex& c);

// identity cancellation (zig-zag update) followed by single-entry changes of
// basis g_a -> g_a + h g_b that lower the number of differential terms
TwistedComplex reduce(const TwistedComplex& c, int n_max = kNMax);

bool same_up_to_relabeling(const TwistedComplex& a, const TwistedComplex& b);

// ranks of the homology of C tensored with B truncated at word length L,
// split by the end idempotent (a°, a•)
std::array<int, 2> homology_ranks(const TwistedComplex& c, int L = 6);

std::string to_text(const TwistedComplex& c);
TwistedComplex from_text(const std::string& text);

// the complexes that appear in the examples
TwistedComplex t3_complex();
TwistedComplex fig8_complex();

}  // namespace earring
