#pragma once

#include <iosfwd>
#include <string>

#include "polwalk/graph.hpp"

namespace polwalk {

// Line-oriented "polgraph 1" text format:
//   polgraph 1
//   vertices <S>
//   edges <A>
//   v <i>: <dart> <dart> ...     (one line per vertex, cyclic order)
// where a dart is written "<edge>+" or "<edge>-". Lines starting with '#'
// are comments. Serialization normalizes each rotation to start at its
// smallest dart, so serialize(parse(serialize(g))) == serialize(g).
PolarizedGraph parse_polgraph(std::istream& in);
PolarizedGraph parse_polgraph_string(const std::string& text);

std::string serialize_polgraph(const PolarizedGraph& g);

std::string dart_token(Dart d);
Dart parse_dart_token(const std::string& tok, int edge_count);

}  // namespace polwalk
