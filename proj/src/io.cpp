#include "megset/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace meg {

namespace {

long long next_int(std::istream& in, const char* what) {
  long long x;
  if (!(in >> x)) throw parse_error(std::string("expected integer for ") + what);
  return x;
}

int next_count(std::istream& in, const char* what) {
  long long x = next_int(in, what);
  if (x < 0 || x > 100000000) throw parse_error(std::string(what) + " out of range");
  return static_cast<int>(x);
}

void expect_end(std::istream& in) {
  std::string tail;
  if (in >> tail) throw parse_error("trailing content after instance: '" + tail + "'");
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  int n = next_count(in, "vertex count");
  int m = next_count(in, "edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    long long u = next_int(in, "edge endpoint");
    long long v = next_int(in, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge endpoint out of range on edge line " + std::to_string(i + 1));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  expect_end(in);
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in = open_file(path);
  try {
    return read_edge_list(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

IntervalModel read_interval_model(std::istream& in) {
  int n = next_count(in, "interval count");
  IntervalModel model;
  model.intervals.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long l = next_int(in, "interval endpoint");
    long long r = next_int(in, "interval endpoint");
    if (l > r)
      throw parse_error("interval on line " + std::to_string(i + 2) + " has l > r");
    model.intervals.emplace_back(l, r);
  }
  expect_end(in);
  return model;
}

IntervalModel read_interval_model_file(const std::string& path) {
  std::ifstream in = open_file(path);
  try {
    return read_interval_model(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_interval_model(std::ostream& out, const IntervalModel& model) {
  out << model.size() << '\n';
  for (const auto& [l, r] : model.intervals) out << l << ' ' << r << '\n';
}

std::string interval_model_string(const IntervalModel& model) {
  std::ostringstream out;
  write_interval_model(out, model);
  return out.str();
}

}  // namespace meg
