#include "scer/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace scer {
namespace {

bool is_plain_integer(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  throw ParseError(os.str());
}

}  // namespace

WeightedComplex parse_complex(std::istream& in) {
  std::vector<std::vector<int>> facets;
  std::map<std::vector<int>, double> weights;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok != "simplex") fail(lineno, "expected 'simplex', got '" + tok + "'");

    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) fail(lineno, "simplex record without vertices");

    double weight = 1.0;
    bool has_weight = !is_plain_integer(toks.back());
    if (has_weight) {
      try {
        size_t pos = 0;
        weight = std::stod(toks.back(), &pos);
        if (pos != toks.back().size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail(lineno, "bad weight '" + toks.back() + "'");
      }
      toks.pop_back();
      if (toks.empty()) fail(lineno, "simplex record without vertices");
    }

    std::vector<int> vs;
    for (const auto& t : toks) {
      if (!is_plain_integer(t)) fail(lineno, "bad vertex id '" + t + "'");
      vs.push_back(std::stoi(t));
    }
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(lineno, "repeated vertex in simplex");
    if (has_weight && !(weight > 0.0)) fail(lineno, "weight must be > 0");

    facets.push_back(sorted);
    if (has_weight) weights[sorted] = weight;
  }

  try {
    return WeightedComplex::from_facets(facets, weights);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

WeightedComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOErr("cannot open '" + path + "'");
  return parse_complex(in);
}

void dump_complex(std::ostream& out, const WeightedComplex& K) {
  char buf[64];
  for (int p = 0; p <= K.dim(); ++p) {
    for (int i = 0; i < K.size(p); ++i) {
      out << "simplex";
      for (int v : K.simplices(p)[i].vertices) out << ' ' << v;
      std::snprintf(buf, sizeof buf, "%.9g", K.weight(p, i));
      std::string w(buf);
      // keep the token out of the vertex-id lexical class
      if (w.find_first_of(".eE") == std::string::npos) w += ".0";
      out << ' ' << w << '\n';
    }
  }
}

}  // namespace scer
