#pragma once

#include <fstream>
#include <sstream>

#include "autsurf/endo.hpp"

// File formats shared by the CLI and fixtures. One flat grammar: words as in
// word.hpp; automorphism files have one "g -> word" line per generator;
// multiset files one cyclic word per line; '#' starts a comment.

namespace autsurf {

inline std::vector<std::string> read_logical_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  return lines;
}

inline Endomorphism parse_endomorphism_text(const std::string& text) {
  std::istringstream in(text);
  std::map<int, Word> images;
  int max_gen = 0;
  for (const std::string& line : read_logical_lines(in)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'g -> word' in line: " + line);
    std::string lhs = line.substr(0, arrow);
    std::string rhs = line.substr(arrow + 2);
    Word g = parse_word(lhs);
    if (g.size() != 1 || g[0] < 0) throw ParseError("left side must be a single generator: " + line);
    int idx = g[0];
    if (images.count(idx)) throw ParseError("duplicate generator line: " + line);
    images[idx] = parse_word(rhs);
    max_gen = std::max(max_gen, idx);
  }
  if (images.empty()) throw ParseError("empty automorphism file");
  int rank = max_gen;
  for (const auto& [g, w] : images) rank = std::max(rank, w.max_index());
  std::vector<Word> im;
  for (int g = 1; g <= rank; ++g) {
    auto it = images.find(g);
    if (it == images.end()) throw ParseError("missing image for generator " + letter_to_string(g));
    im.push_back(it->second);
  }
  return Endomorphism(rank, std::move(im));
}

inline std::string endomorphism_to_text(const Endomorphism& e) {
  std::string out;
  for (int g = 1; g <= e.rank(); ++g)
    out += letter_to_string(g) + " -> " + to_string(e.image(g)) + "\n";
  return out;
}

inline std::vector<CyclicWord> parse_multiset_text(const std::string& text, int rank = 0) {
  std::istringstream in(text);
  std::vector<CyclicWord> out;
  for (const std::string& line : read_logical_lines(in)) out.push_back(parse_cyclic(line, rank));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace autsurf
