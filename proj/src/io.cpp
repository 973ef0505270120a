#include "hwh/io.hpp"

#include <fstream>
#include <sstream>

namespace hwh {

Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(text);
      q.canonicalize();
      return q;
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument(text);
    Rational q(num + "/" + den);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument(text);
    return q;
  } catch (const std::exception&) {
    throw ParseError("malformed rational: '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string HighFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, x_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph6(const std::string& line) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw ParseError("graph6: truncated input", 1, int(pos) + 1);
    int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", 1, int(pos) + 1);
    ++pos;
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxVertices) throw ParseError("graph6: more than 64 vertices unsupported");
  std::vector<std::pair<int, int>> edges;
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) edges.push_back({row, col});
      --nbits;
    }
  }
  if (pos != line.size()) throw ParseError("graph6: trailing bytes", 1, int(pos) + 1);
  return build_graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v)) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("edge list: missing header", 1);
  std::istringstream hs(header);
  long n, m;
  if (!(hs >> n >> m)) throw ParseError("edge list: header must be 'n m'", 1);
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < m; ++i) {
    std::string s;
    if (!std::getline(in, s)) throw ParseError("edge list: expected " + std::to_string(m) + " edges", int(i) + 2);
    std::istringstream es(s);
    long u, v;
    if (!(es >> u >> v)) throw ParseError("edge list: malformed edge line", int(i) + 2);
    edges.push_back({int(u), int(v)});
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: vertex count out of range", 1);
  try {
    return build_graph(int(n), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

static bool looks_like_edge_list(const std::string& first_line) {
  std::istringstream s(first_line);
  long a, b;
  std::string rest;
  return bool(s >> a >> b) && !(s >> rest);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (format == GraphFormat::sniff) {
    std::string first;
    std::getline(in, first);
    in.seekg(0);
    format = looks_like_edge_list(first) ? GraphFormat::edge_list : GraphFormat::graph6;
  }
  if (format == GraphFormat::edge_list) return parse_edge_list(in);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty graph file '" + path + "'", 1);
  return parse_graph6(line);
}

std::vector<Graph> read_graphs_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  in.seekg(0);
  if (format == GraphFormat::sniff)
    format = looks_like_edge_list(first) ? GraphFormat::edge_list : GraphFormat::graph6;
  if (format == GraphFormat::edge_list) return {parse_edge_list(in)};
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), lineno, e.column);
    }
  }
  return out;
}

std::string weights_to_string(const std::vector<Rational>& w) {
  std::ostringstream out;
  out << "n=" << w.size() << "\n";
  for (size_t v = 0; v < w.size(); ++v) {
    out << v << " " << w[v].get_num().get_str() << "/" << w[v].get_den().get_str() << "\n";
  }
  return out.str();
}

std::vector<Rational> parse_weights(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("weights: missing header", 1);
  if (header.rfind("n=", 0) != 0) throw ParseError("weights: header must be 'n=<count>'", 1);
  long n = 0;
  try {
    n = std::stol(header.substr(2));
  } catch (const std::exception&) {
    throw ParseError("weights: malformed count in header", 1);
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("weights: count out of range", 1);
  std::vector<Rational> w(n, Rational(0));
  std::vector<bool> seen(n, false);
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long idx;
    std::string value;
    if (!(ls >> idx >> value)) throw ParseError("weights: expected 'index value'", lineno);
    if (idx < 0 || idx >= n) throw ParseError("weights: index out of range", lineno);
    if (seen[idx]) throw ParseError("weights: duplicate index " + std::to_string(idx), lineno);
    try {
      w[idx] = parse_rational(value);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (w[idx] < 0) throw ParseError("weights: negative weight", lineno);
    seen[idx] = true;
  }
  for (long v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError("weights: missing entry for vertex " + std::to_string(v));
  return w;
}

std::vector<Rational> read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_weights(in);
}

}  // namespace hwh
