#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "bwl/core.hpp"
#include "bwl/graphs.hpp"
#include "bwl/hyper.hpp"

// Line-oriented text formats. Blank lines are skipped and '#' starts a comment.
//
//   .bws     n <count> / c i j k m      (collinear triple with middle m; others are triangles)
//   .wg      n <count> / e u v p[/q]    (edge with positive rational weight)
//   .th      n <count> / t i j k        (hyperedge)
//   .metric  n <count> / upper-triangle distances, row-major, whitespace separated

namespace bwl {

class FormatError : public Error {
 public:
  using Error::Error;
};

BetweennessStructure read_bws(std::istream& in);
std::string write_bws(const BetweennessStructure& b);

WeightedGraph read_wg(std::istream& in);
std::string write_wg(const WeightedGraph& g);

TriangleHypergraph read_th(std::istream& in);
std::string write_th(const TriangleHypergraph& h);

RationalMetric read_metric(std::istream& in);
std::string write_metric(const RationalMetric& m);

BetweennessStructure load_bws(const std::filesystem::path& path);
WeightedGraph load_wg(const std::filesystem::path& path);
TriangleHypergraph load_th(const std::filesystem::path& path);
RationalMetric load_metric(const std::filesystem::path& path);

void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace bwl
