#pragma once

// The group file format.
//
//   degree <n>          mandatory first line
//   name <string>       optional
//   gen <...>           one generator per line, either disjoint cycles in
//                       parentheses or an image list of n integers; points
//                       are 1-based in files
//
// Canonical emission uses image lists. Parse errors carry line positions.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvlab/group.hpp"

namespace tvlab {

struct ParsedGroup {
  unsigned degree = 0;
  std::string name;
  std::vector<Permutation> generators;

  PermGroup group() const { return PermGroup(degree, generators); }
};

class GroupFormatError : public std::runtime_error {
public:
  GroupFormatError(unsigned line, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  unsigned line() const { return line_; }

private:
  unsigned line_;
};

namespace detail {

inline Point parse_point(const std::string &tok, unsigned n, unsigned lineno);

inline Permutation parse_cycles(const std::string &body, unsigned n, unsigned lineno) {
  std::vector<std::vector<Point>> cycles;
  size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) { ++i; continue; }
    if (body[i] != '(') throw GroupFormatError(lineno, "expected '(' in cycle notation");
    ++i;
    std::vector<Point> cyc;
    std::string tok;
    for (; i < body.size() && body[i] != ')'; ++i) {
      if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
        if (!tok.empty()) { cyc.push_back(parse_point(tok, n, lineno)); tok.clear(); }
      } else {
        tok += body[i];
      }
    }
    if (i == body.size()) throw GroupFormatError(lineno, "unterminated cycle");
    ++i;  // skip ')'
    if (!tok.empty()) cyc.push_back(parse_point(tok, n, lineno));
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  for (const auto &c : cycles) {
    std::vector<bool> inc(n, false);
    for (Point p : c) {
      if (inc[p]) throw GroupFormatError(lineno, "point repeated within a cycle");
      inc[p] = true;
    }
  }
  // points may not repeat across cycles either
  std::vector<bool> used(n, false);
  for (const auto &c : cycles)
    for (Point p : c) {
      if (used[p]) throw GroupFormatError(lineno, "cycles are not disjoint");
      used[p] = true;
    }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const std::exception &e) {
    throw GroupFormatError(lineno, e.what());
  }
}

inline Point parse_point(const std::string &tok, unsigned n, unsigned lineno) {
  size_t pos = 0;
  long v;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception &) {
    throw GroupFormatError(lineno, "not an integer: '" + tok + "'");
  }
  if (pos != tok.size()) throw GroupFormatError(lineno, "not an integer: '" + tok + "'");
  if (v < 1 || v > static_cast<long>(n))
    throw GroupFormatError(lineno, "point " + tok + " out of range 1.." + std::to_string(n));
  return static_cast<Point>(v - 1);
}

inline Permutation parse_images(const std::string &body, unsigned n, unsigned lineno) {
  std::istringstream iss(body);
  std::vector<Point> im;
  std::string tok;
  while (iss >> tok) im.push_back(parse_point(tok, n, lineno));
  if (im.size() != n)
    throw GroupFormatError(lineno, "image list has " + std::to_string(im.size()) +
                                       " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < im.size(); ++i) {
    if (seen[im[i]])
      throw GroupFormatError(lineno, "not a bijection: image " + std::to_string(im[i] + 1) +
                                         " repeated at position " + std::to_string(i + 1));
    seen[im[i]] = true;
  }
  return Permutation(std::move(im));
}

}  // namespace detail

inline ParsedGroup parse_group(const std::string &text) {
  ParsedGroup out;
  std::istringstream in(text);
  std::string line;
  unsigned lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string body;
    std::getline(ls, body);
    if (!body.empty() && body[0] == ' ') body.erase(0, body.find_first_not_of(' '));

    if (key == "degree") {
      if (have_degree) throw GroupFormatError(lineno, "duplicate degree header");
      try {
        out.degree = static_cast<unsigned>(std::stoul(body));
      } catch (const std::exception &) {
        throw GroupFormatError(lineno, "bad degree: '" + body + "'");
      }
      if (out.degree == 0) throw GroupFormatError(lineno, "degree must be positive");
      have_degree = true;
    } else if (key == "name") {
      out.name = body;
    } else if (key == "gen") {
      if (!have_degree) throw GroupFormatError(lineno, "gen line before degree header");
      if (body.find('(') != std::string::npos)
        out.generators.push_back(detail::parse_cycles(body, out.degree, lineno));
      else
        out.generators.push_back(detail::parse_images(body, out.degree, lineno));
    } else {
      throw GroupFormatError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_degree) throw GroupFormatError(lineno, "missing degree header");
  return out;
}

inline std::string emit_group(const ParsedGroup &g) {
  std::ostringstream out;
  out << "degree " << g.degree << "\n";
  if (!g.name.empty()) out << "name " << g.name << "\n";
  for (const auto &p : g.generators) {
    out << "gen";
    for (Point x = 0; x < g.degree; ++x) out << ' ' << p[x] + 1;
    out << "\n";
  }
  return out.str();
}

inline ParsedGroup load_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str());
}

}  // namespace tvlab
