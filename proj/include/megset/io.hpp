#pragma once

#include <iosfwd>
#include <string>

#include "megset/interval.hpp"

namespace meg {

// Edge-list text format: a header line "n m" followed by m lines "u v",
// 0-indexed, whitespace separated, LF line endings on output. Parse errors
// (wrong counts, non-integers, trailing tokens, simple-graph violations)
// raise parse_error.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// Interval text format: a header line "n" followed by n lines "l r".
IntervalModel read_interval_model(std::istream& in);
IntervalModel read_interval_model_file(const std::string& path);
void write_interval_model(std::ostream& out, const IntervalModel& model);
std::string interval_model_string(const IntervalModel& model);

}  // namespace meg
