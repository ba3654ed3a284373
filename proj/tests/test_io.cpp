#include <gtest/gtest.h>

#include "cuberep/error.hpp"
#include "cuberep/generators.hpp"
#include "cuberep/io.hpp"
#include "fixtures.hpp"

using namespace cuberep;
using namespace cuberep::testing;

TEST(CubeIo, ParseWithCommentsAndBlanks) {
  const CubeSubgraph g = parse_cube_subgraph("# a face\nn=3\n\n[*00]\n0*0\n  [1*0]  \n");
  EXPECT_EQ(g.dimension(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(write_cube_subgraph(g), "n=3\n[*00]\n[0*0]\n[1*0]\n");
}

TEST(CubeIo, ErrorsCarryLineNumbers) {
  try {
    parse_cube_subgraph("n=3\n[*00]\n[0**]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_cube_subgraph("n=3\n[*00]\n\n[*00]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  try {
    parse_cube_subgraph("n=4\n[*00]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_cube_subgraph("[*00]\n"), ParseError);
}

TEST(RepresentationIo, RoundTrip) {
  const Representation r = c14_rep();
  const std::string text = write_representation(r);
  EXPECT_EQ(parse_representation(text), r);
  EXPECT_EQ(write_representation(parse_representation(text)), text);
  EXPECT_NE(text.find("sigma= 1 2 3 1 3 2 3"), std::string::npos);
}

TEST(RepresentationIo, SigmaLengthChecked) {
  const std::string text = "n=4\n[1*00]\nk=2\nsigma= 1 2 1\n";
  try {
    parse_representation(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(HypergraphIo, RoundTrip) {
  const KUniformHypergraph h = KUniformHypergraph::complete_partite({1, 2, 2});
  const std::string text = write_hypergraph(h);
  EXPECT_EQ(text.substr(0, 8), "m=5 k=3\n");
  EXPECT_EQ(parse_hypergraph(text), h);
  EXPECT_THROW(parse_hypergraph("m=4 k=2\n1 2\n3\n"), ParseError);
}

TEST(GraphIo, RoundTripAndCubeForm) {
  const AbstractGraph c = cycle_graph(6);
  EXPECT_TRUE(are_isomorphic(parse_graph(write_graph(c)), c));
  EXPECT_EQ(parse_graph(write_graph(c)), c);
  const AbstractGraph from_cube = parse_graph("n=2\n[*0]\n[0*]\n[1*]\n[*1]\n");
  EXPECT_TRUE(are_isomorphic(from_cube, cycle_graph(4)));
  EXPECT_THROW(parse_graph("v=3\n1 4\n"), ParseError);
}

TEST(CertificateIo, RoundTrip) {
  const CubeSubgraph g = full_cube(6);
  const auto res = find_copy(g, c8_rep());
  ASSERT_TRUE(res.certificate);
  const std::string text = write_certificate(*res.certificate);
  const CubeCopyCertificate back = parse_certificate(text);
  EXPECT_EQ(back.representation, res.certificate->representation);
  EXPECT_EQ(back.anchor, res.certificate->anchor);
  EXPECT_EQ(back.g, res.certificate->g);
  EXPECT_EQ(back.edges, res.certificate->edges);
  EXPECT_EQ(write_certificate(back), text);
}

TEST(ExtremalIo, RoundTripAndComments) {
  const auto r = ex_cube(3, cycle_graph(4));
  const std::string text = write_extremal(r);
  EXPECT_EQ(text.substr(0, text.find('\n')), "value=9 status=exact");
  const auto back = parse_cube_extremal("# produced by a test\n" + text);
  EXPECT_EQ(back.value, 9u);
  EXPECT_EQ(back.witness, r.witness);
  const auto h = ex_hypergraph(5, KUniformHypergraph(3, 2, {set_of({1, 2}), set_of({2, 3}), set_of({1, 3})}));
  EXPECT_EQ(parse_hypergraph_extremal(write_extremal(h)).witness, h.witness);
  EXPECT_THROW(parse_cube_extremal("value=3 status=maybe\nn=2\n"), ParseError);
  EXPECT_THROW(parse_cube_extremal("value=4 status=exact\nn=2\n[*0]\n"), ParseError);
}

TEST(EdgeText, RenderParseRoundTripAllQ5Edges) {
  full_cube(5).for_each_edge([](const CubeEdge& e) { EXPECT_EQ(parse_edge(render_edge(e)), e); });
}
