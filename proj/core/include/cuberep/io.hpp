#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored by every parser; writers emit canonical order so that
// write(parse(write(x))) == write(x) byte for byte.
//
//   cube subgraph   n=<int>, then one edge per line ("[01*11]", brackets optional)
//   representation  cube block, then k=<int>, then sigma= <v1> ... <vl>
//   hypergraph      m=<int> k=<int>, then one edge per line as k vertex indices
//   graph           v=<int>, then one edge per line as "u w" (1-based);
//                   a cube subgraph block is also accepted
//   certificate     representation block, S= <positions>, g= <g1> ... <gl>,
//                   then the lifted edges as a cube block
//   extremal        value=<int> status=<exact|lower>, then the witness block

#include <string>
#include <string_view>

#include "cuberep/cube.hpp"
#include "cuberep/embedding.hpp"
#include "cuberep/extremal.hpp"
#include "cuberep/graph.hpp"
#include "cuberep/hypergraph.hpp"
#include "cuberep/representation.hpp"

namespace cuberep {

CubeSubgraph parse_cube_subgraph(std::string_view text);
std::string write_cube_subgraph(const CubeSubgraph& g);

Representation parse_representation(std::string_view text);
std::string write_representation(const Representation& r);

KUniformHypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const KUniformHypergraph& h);

AbstractGraph parse_graph(std::string_view text);
std::string write_graph(const AbstractGraph& g);

CubeCopyCertificate parse_certificate(std::string_view text);
std::string write_certificate(const CubeCopyCertificate& c);

std::string write_extremal(const CubeExtremalResult& r);
std::string write_extremal(const HypergraphExtremalResult& r);
CubeExtremalResult parse_cube_extremal(std::string_view text);
HypergraphExtremalResult parse_hypergraph_extremal(std::string_view text);

/// Throws Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cuberep
