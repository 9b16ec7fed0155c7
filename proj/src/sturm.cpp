#include "macmahon/sturm.hpp"

#include "macmahon/errors.hpp"

namespace macmahon {

namespace {

IntPoly primitive(IntPoly p) {
  Integer c = p.content();
  if (c > 1) {
    std::vector<Integer> coeffs(p.coefficients().begin(), p.coefficients().end());
    for (auto& x : coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    p = IntPoly(std::move(coeffs));
  }
  return p;
}

// A positive multiple of a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.leading();
  int steps = 0;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Integer la = a.leading();
    IntPoly sub = b.shifted(static_cast<std::size_t>(a.degree() - b.degree())) * la;
    a *= lb;
    a -= sub;
    ++steps;
  }
  if (lb < 0 && steps % 2 == 1) a = -a;
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw ContractViolation("Sturm chain of the zero polynomial");
  std::vector<IntPoly> chain{primitive(p)};
  IntPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive(d));
  while (true) {
    IntPoly r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive(-r));
  }
  return chain;
}

int count_distinct_real_roots(const IntPoly& p) {
  auto chain = sturm_chain(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& f : chain) {
    int s = f.leading() > 0 ? 1 : -1;
    at_pos.push_back(s);
    at_neg.push_back(f.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

int count_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw ContractViolation("real roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  IntPoly g = sturm_chain(p).back();
  return count_distinct_real_roots(p) + (g.degree() > 0 ? count_real_roots(g) : 0);
}

bool is_real_rooted(const IntPoly& p) { return count_real_roots(p) == p.degree(); }

}  // namespace macmahon
