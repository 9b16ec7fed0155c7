#include "macmahon/permutations.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int parse_int(std::string_view tok, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ContractViolation("cannot parse " + std::string(what) + " '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\n') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Sorted multiset 1^{eta_1} 2^{eta_2} ... for a family.
std::vector<int> base_letters(const Family& family) {
  return std::visit(overloaded{[](const CColoured& f) {
                                 std::vector<int> v(f.palette.size());
                                 std::iota(v.begin(), v.end(), 1);
                                 return v;
                               },
                               [](const auto& f) {
                                 std::vector<int> v;
                                 for (int i = 0; i < f.eta.length(); ++i) v.insert(v.end(), static_cast<std::size_t>(f.eta.part(i)), i + 1);
                                 return v;
                               }},
                    family);
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ContractViolation("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw ContractViolation("composition parts must be positive");
    size_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    parts.push_back(parse_int(tok, "composition part"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

bool Composition::is_rectangle() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p == parts_.front(); });
}

int Composition::max_part() const { return *std::max_element(parts_.begin(), parts_.end()); }

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Composition> partitions_of(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int min_part) {
    if (rest == 0) {
      all.push_back(cur);
      return;
    }
    for (int p = min_part; p <= rest; ++p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, 1);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Composition> out;
  out.reserve(all.size());
  for (auto& p : all) out.emplace_back(std::move(p));
  return out;
}

void validate(const Family& family) {
  std::visit(overloaded{[](const Coloured& f) {
                          if (f.colours < 1) throw ContractViolation("number of colours must be at least 1");
                        },
                        [](const CColoured& f) {
                          if (f.palette.empty()) throw ContractViolation("palette must be nonempty");
                          for (int c : f.palette)
                            if (c < 1) throw ContractViolation("palette entries must be at least 1");
                        },
                        [](const auto&) {}},
             family);
}

int word_length(const Family& family) {
  return std::visit(overloaded{[](const CColoured& f) { return static_cast<int>(f.palette.size()); },
                               [](const auto& f) { return f.eta.size(); }},
                    family);
}

Integer cardinality(const Family& family) {
  auto multinomial = [](const Composition& eta) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(eta.size()));
    for (int p : eta.parts()) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
      r /= f;
    }
    return r;
  };
  auto power = [](long base, int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
  };
  return std::visit(overloaded{[&](const TypeA& f) { return multinomial(f.eta); },
                               [&](const TypeB& f) { return Integer(power(2, f.eta.size()) * multinomial(f.eta)); },
                               [&](const Coloured& f) { return Integer(power(f.colours, f.eta.size()) * multinomial(f.eta)); },
                               [&](const CColoured& f) {
                                 Integer r;
                                 mpz_fac_ui(r.get_mpz_t(), f.palette.size());
                                 for (int c : f.palette) r *= c;
                                 return r;
                               }},
                    family);
}

std::string describe(const Family& family) {
  return std::visit(overloaded{[](const TypeA& f) { return "S" + f.eta.to_string(); },
                               [](const TypeB& f) { return "B" + f.eta.to_string(); },
                               [](const Coloured& f) { return "S" + f.eta.to_string() + "^" + std::to_string(f.colours); },
                               [](const CColoured& f) {
                                 std::string s = "S" + std::to_string(f.palette.size()) + "^(";
                                 for (std::size_t i = 0; i < f.palette.size(); ++i) s += (i ? "," : "") + std::to_string(f.palette[i]);
                                 return s + ")";
                               }},
                    family);
}

FamilyStream::FamilyStream(Family family) : family_(std::move(family)) {
  validate(family_);
  letters_ = base_letters(family_);
  decor_.assign(letters_.size(), 0);
  bounds_.assign(letters_.size(), 1);
}

void FamilyStream::reset_decorations() {
  std::fill(decor_.begin(), decor_.end(), 0);
  std::visit(overloaded{[&](const TypeA&) { std::fill(bounds_.begin(), bounds_.end(), 1); },
                        [&](const TypeB&) { std::fill(bounds_.begin(), bounds_.end(), 2); },
                        [&](const Coloured& f) { std::fill(bounds_.begin(), bounds_.end(), f.colours); },
                        [&](const CColoured& f) {
                          for (std::size_t i = 0; i < letters_.size(); ++i)
                            bounds_[i] = f.palette[static_cast<std::size_t>(letters_[i] - 1)];
                        }},
             family_);
}

void FamilyStream::publish() {
  std::visit(overloaded{[&](const TypeA&) { current_ = Word{letters_}; },
                        [&](const TypeB&) {
                          SignedWord w{letters_, std::vector<Sign>(letters_.size())};
                          for (std::size_t i = 0; i < letters_.size(); ++i) w.signs[i] = decor_[i] ? Sign::minus : Sign::plus;
                          current_ = std::move(w);
                        },
                        [&](const auto&) { current_ = ColouredWord{letters_, decor_}; }},
             family_);
}

bool FamilyStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    reset_decorations();
    publish();
    return true;
  }
  // Odometer over decorations, last position fastest.
  for (std::size_t i = decor_.size(); i-- > 0;) {
    if (++decor_[i] < bounds_[i]) {
      publish();
      return true;
    }
    decor_[i] = 0;
  }
  if (!std::next_permutation(letters_.begin(), letters_.end())) {
    done_ = true;
    return false;
  }
  reset_decorations();
  publish();
  return true;
}

void for_each_element(const Family& family, const std::function<void(const Element&)>& visit) {
  FamilyStream s(family);
  while (s.next()) visit(s.current());
}

std::string render(const Element& e) {
  std::ostringstream os;
  std::visit(overloaded{[&](const Word& w) {
                          for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? " " : "") << w.letters[i];
                        },
                        [&](const SignedWord& w) {
                          for (std::size_t i = 0; i < w.letters.size(); ++i)
                            os << (i ? " " : "") << (w.signs[i] == Sign::minus ? "-" : "") << w.letters[i];
                        },
                        [&](const ColouredWord& w) {
                          for (std::size_t i = 0; i < w.letters.size(); ++i)
                            os << (i ? " " : "") << w.letters[i] << '^' << w.colours[i];
                        }},
             e);
  return os.str();
}

bool is_member(const Element& e, const Family& family) {
  std::vector<int> expected = base_letters(family);
  auto same_multiset = [&](std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    return letters == expected;
  };
  return std::visit(
      overloaded{[&](const TypeA&) { return std::holds_alternative<Word>(e) && same_multiset(std::get<Word>(e).letters); },
                 [&](const TypeB&) {
                   if (!std::holds_alternative<SignedWord>(e)) return false;
                   const auto& w = std::get<SignedWord>(e);
                   return w.signs.size() == w.letters.size() && same_multiset(w.letters);
                 },
                 [&](const Coloured& f) {
                   if (!std::holds_alternative<ColouredWord>(e)) return false;
                   const auto& w = std::get<ColouredWord>(e);
                   if (w.colours.size() != w.letters.size() || !same_multiset(w.letters)) return false;
                   return std::all_of(w.colours.begin(), w.colours.end(), [&](int c) { return c >= 0 && c < f.colours; });
                 },
                 [&](const CColoured& f) {
                   if (!std::holds_alternative<ColouredWord>(e)) return false;
                   const auto& w = std::get<ColouredWord>(e);
                   if (w.colours.size() != w.letters.size() || !same_multiset(w.letters)) return false;
                   for (std::size_t i = 0; i < w.letters.size(); ++i)
                     if (w.colours[i] < 0 || w.colours[i] >= f.palette[static_cast<std::size_t>(w.letters[i] - 1)]) return false;
                   return true;
                 }},
      family);
}

Element parse_element(std::string_view text, const Family& family) {
  validate(family);
  auto tokens = split_ws(text);
  Element e;
  if (std::holds_alternative<TypeA>(family)) {
    Word w;
    for (auto tok : tokens) {
      if (!tok.empty() && tok.front() == '-') throw ContractViolation("type A words carry no signs: '" + std::string(tok) + "'");
      w.letters.push_back(parse_int(tok, "letter"));
    }
    e = std::move(w);
  } else if (std::holds_alternative<TypeB>(family)) {
    SignedWord w;
    for (auto tok : tokens) {
      bool neg = !tok.empty() && tok.front() == '-';
      if (neg) tok.remove_prefix(1);
      w.letters.push_back(parse_int(tok, "letter"));
      w.signs.push_back(neg ? Sign::minus : Sign::plus);
    }
    e = std::move(w);
  } else {
    ColouredWord w;
    for (auto tok : tokens) {
      auto caret = tok.find('^');
      w.letters.push_back(parse_int(tok.substr(0, caret), "letter"));
      w.colours.push_back(caret == std::string_view::npos ? 0 : parse_int(tok.substr(caret + 1), "colour"));
    }
    e = std::move(w);
  }
  if (!is_member(e, family))
    throw ContractViolation("element '" + std::string(text) + "' is not a member of " + describe(family));
  return e;
}

}  // namespace macmahon
