#include "golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace macmahon::testing {

IntPoly parse_t_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  IntPoly p;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::size_t t = term.find('t');
    if (t == std::string::npos) {
      p.add_term(0, Integer(term));
      continue;
    }
    Integer c = t == 0 ? Integer(1) : Integer(term.substr(0, t));
    std::size_t e = term.size() > t + 2 && term[t + 1] == '^' ? std::stoul(term.substr(t + 2)) : 1;
    p.add_term(e, c);
  }
  return p;
}

std::vector<GoldenRow> load_appendix_golden() {
  const std::string path = std::string(MACMAHON_GOLDEN_DIR) + "/appendix_b.txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    rows.push_back(GoldenRow{Composition::parse(line.substr(0, tab)), parse_t_polynomial(line.substr(tab + 1))});
  }
  return rows;
}

}  // namespace macmahon::testing
