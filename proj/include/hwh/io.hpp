#ifndef HWH_IO_HPP
#define HWH_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hwh/graph.hpp"
#include "hwh/rational.hpp"

namespace hwh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

// graph6: first byte n+63 for n <= 62 ('~' + 3 bytes for 63/64), then the
// upper triangle read column by column, packed 6 bits per byte MSB first,
// zero padded, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

// Edge list: first line "n m", then m lines "u v", zero-indexed.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::istream& in);

enum class GraphFormat { graph6, edge_list, sniff };
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::sniff);
std::vector<Graph> read_graphs_file(const std::string& path, GraphFormat format = GraphFormat::sniff);

// Weight files: header "n=<count>", then one "index numerator/denominator"
// line per vertex. Shared by normalized weight maps and good functions.
std::string weights_to_string(const std::vector<Rational>& w);
std::vector<Rational> parse_weights(std::istream& in);
std::vector<Rational> read_weights_file(const std::string& path);

}  // namespace hwh

#endif
