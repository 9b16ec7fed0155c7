#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "macmahon/numeric.hpp"

namespace macmahon {

/// A composition eta = (eta_1, ..., eta_r) of n: every part is >= 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  /// Parses "1,2,3". Throws ContractViolation on anything else.
  static Composition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool is_rectangle() const;
  int max_part() const;

  /// "(1,2,3)"
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All compositions of n, lexicographic.
std::vector<Composition> compositions_of(int n);

/// Weakly increasing compositions of n (partitions written in ascending
/// order), sorted by number of parts and then lexicographically.
std::vector<Composition> partitions_of(int n);

enum class Sign : std::int8_t { minus = -1, plus = 1 };

/// Multiset permutation in one-line notation; letters are 1..r.
struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

/// (w, epsilon): a word plus one sign per position. Kept as separate value
/// and sign so that w_0 := 0 with epsilon(0) := +1 needs no signed zero.
struct SignedWord {
  std::vector<int> letters;
  std::vector<Sign> signs;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// (w, gamma): a word plus one colour per position.
struct ColouredWord {
  std::vector<int> letters;
  std::vector<int> colours;
  friend bool operator==(const ColouredWord&, const ColouredWord&) = default;
};

using Element = std::variant<Word, SignedWord, ColouredWord>;

/// S_eta
struct TypeA {
  Composition eta;
};
/// B_eta
struct TypeB {
  Composition eta;
};
/// S_eta^c, colours 0..c-1 on every position.
struct Coloured {
  Composition eta;
  int colours = 1;
};
/// S_n^{(c)}: permutations of 1..n where letter v takes colours 0..c_v - 1.
struct CColoured {
  std::vector<int> palette;
};

using Family = std::variant<TypeA, TypeB, Coloured, CColoured>;

/// Throws ContractViolation for an empty palette or a colour count < 1.
void validate(const Family& family);

/// Length n of every element.
int word_length(const Family& family);
/// Closed-form cardinality (n!/prod eta_i!, times 2^n, c^n or prod c_i).
Integer cardinality(const Family& family);
std::string describe(const Family& family);

/// Streams a family in lexicographic order of the letters, then of the
/// signs (+ before -) or colours read as digit strings. Holds one element
/// at a time.
///
///   FamilyStream s(TypeB{Composition{2}});
///   while (s.next()) use(s.current());
class FamilyStream {
 public:
  explicit FamilyStream(Family family);

  /// Advances to the next element; false once the family is exhausted.
  bool next();
  const Element& current() const { return current_; }

 private:
  void reset_decorations();
  void publish();

  Family family_;
  std::vector<int> letters_;
  std::vector<int> decor_;
  std::vector<int> bounds_;
  Element current_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_element(const Family& family, const std::function<void(const Element&)>& visit);

/// One-line rendering: "2 2 1 2 1", "-2 -2 1 2 -1", "1^2 2^1 2^1".
std::string render(const Element& e);

/// Inverse of render, checked against the family. Throws ContractViolation
/// on a parse failure or when the element does not belong to the family.
Element parse_element(std::string_view text, const Family& family);

bool is_member(const Element& e, const Family& family);

}  // namespace macmahon
