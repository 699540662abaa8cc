// Copyright 2026 The detourkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detourkit/graph_io.h"

#include <gtest/gtest.h>

#include <string>

namespace detourkit {
namespace {

std::string ErrorOf(std::string_view text) {
  try {
    ParseGraph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = ParseGraph("# a triangle\n\n3 3\n0 1\n  1 2 \n# chord\n2 0\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_TRUE(g.HasEdge(0, 2));
  EXPECT_EQ(ParseGraph("4 0").num_vertices(), 4);
}

TEST(ParseGraph, RoundTrip) {
  const Graph g = Gnp(15, 0.3, 8);
  const Graph h = ParseGraph(SerializeGraph(g));
  EXPECT_EQ(SerializeGraph(h), SerializeGraph(g));
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(ParseGraph, Errors) {
  EXPECT_NE(ErrorOf("").find("header"), std::string::npos);
  EXPECT_NE(ErrorOf("3 1\n0 x\n").find("line 2"), std::string::npos);
  EXPECT_NE(ErrorOf("3 1\n0 3\n").find("out of range"), std::string::npos);
  EXPECT_NE(ErrorOf("3 1\n0 1\n1 2\n").find("line 3"), std::string::npos);
  EXPECT_NE(ErrorOf("3 2\n0 1\n").find("found 1"), std::string::npos);
  EXPECT_NE(ErrorOf("3 1 7\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(ErrorOf("3 1\n1 1\n").empty());
  EXPECT_FALSE(ErrorOf("3 2\n0 1\n1 0\n").empty());
  EXPECT_FALSE(ErrorOf("-1 0\n").empty());
  EXPECT_THROW(ReadGraphFile("/nonexistent/graph.txt"), ParseError);
}

TEST(ParsePartition, Tokens) {
  const Bipartition p = ParsePartition("1 2 # first two\n2\n", 3);
  EXPECT_TRUE(p.in_v1(0));
  EXPECT_TRUE(p.in_v2(1));
  EXPECT_TRUE(p.in_v2(2));
  EXPECT_THROW(ParsePartition("1 3", 2), ParseError);
  EXPECT_THROW(ParsePartition("1 2", 3), ParseError);
}

TEST(Generators, Shapes) {
  EXPECT_EQ(PathGraph(5).num_edges(), 4);
  EXPECT_EQ(CycleGraph(5).num_edges(), 5);
  EXPECT_EQ(GridGraph(3).num_vertices(), 9);
  EXPECT_EQ(GridGraph(3).num_edges(), 12);
  const Graph pg = PetersenGraph();
  EXPECT_EQ(pg.num_vertices(), 10);
  EXPECT_EQ(pg.num_edges(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(pg.neighbors(v).size(), 3u);
  EXPECT_THROW(CycleGraph(2), std::invalid_argument);
  EXPECT_THROW(PathGraph(0), std::invalid_argument);
}

TEST(Generators, GnpDeterministic) {
  EXPECT_EQ(Gnp(20, 0.3, 1).edges(), Gnp(20, 0.3, 1).edges());
  EXPECT_NE(Gnp(20, 0.3, 1).edges(), Gnp(20, 0.3, 2).edges());
  EXPECT_EQ(Gnp(6, 0.0, 1).num_edges(), 0);
  EXPECT_EQ(Gnp(6, 1.0, 1).num_edges(), 15);
}

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(Fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

}  // namespace
}  // namespace detourkit
