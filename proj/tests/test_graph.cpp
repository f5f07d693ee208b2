#include <doctest.h>

#include "hiergraph/family.hpp"
#include "hiergraph/graph.hpp"
#include "support.hpp"

using namespace hiergraph;

namespace {

// Adjacency from the matrix representation only.
HierarchyGraph oracle_graph(const FiniteGroupView& v, GraphKind kind) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto &x = v.element(i), &y = v.element(j);
      bool adj = false;
      switch (kind) {
        case GraphKind::Pow: adj = oracle::pow_adjacent(x, y); break;
        case GraphKind::EPow: adj = oracle::epow_adjacent(v, x, y); break;
        default: adj = oracle::commute(x, y); break;
      }
      if (adj) edges.emplace_back(i, j);
    }
  return HierarchyGraph::from_edges(kind, v.name(), v.labels(), edges);
}

HierarchyGraph complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return HierarchyGraph::from_edges(GraphKind::Other, "K", labels, edges);
}

const GroupElement kShift2 = InfiniteDihedralElem{2, false}, kShift3 = InfiniteDihedralElem{3, false};

}  // namespace

TEST_CASE("commuting") {
  CHECK(adj_com(DihedralElem{{1, 4}, true}, DihedralElem{{}, false}));
  CHECK_FALSE(adj_com(InfiniteDihedralElem{2, false}, InfiniteDihedralElem{3, true}));
  CHECK(adj_com(DihedralElem{{}, true}, DihedralElem{{1, 2}, true}));
  CHECK_FALSE(adj_com(DihedralElem{{}, true}, DihedralElem{{1, 4}, true}));
}

TEST_CASE("quaternionic coset elements a j and -a j") {
  // (a j)(-a j) = x_{2a} (-I) and (-a j)(a j) = x_{-2a} (-I): they commute
  // exactly when 4a = 0.
  for (const RationalAngle a : {RationalAngle(1, 4), RationalAngle(1, 8), RationalAngle(1, 2)}) {
    const GroupElement x = InfiniteQuaternionElem{ToralParam::torsion(a), true};
    const GroupElement y = InfiniteQuaternionElem{ToralParam::torsion(-a), true};
    CHECK(adj_com(x, y) == oracle::commute(x, y));
    CHECK(adj_com(x, y) == a.times(4).is_zero());
  }
  const GroupElement g = InfiniteQuaternionElem{ToralParam(RationalAngle{}, {1, 0}), true};
  const GroupElement gi = InfiniteQuaternionElem{ToralParam(RationalAngle{}, {-1, 0}), true};
  CHECK_FALSE(adj_com(g, gi));
  CHECK(adj_com(g, elem_inv(g)));
}

TEST_CASE("power-graph adjacency") {
  CHECK(in_cyclic_subgroup(InfiniteDihedralElem{6, false}, kShift2));
  CHECK(adj_pow(InfiniteDihedralElem{6, false}, kShift2));
  CHECK_FALSE(adj_pow(kShift2, kShift3));
  CHECK_FALSE(adj_pow(CyclicElem{{1, 2}}, CyclicElem{{1, 3}}));
  CHECK(adj_pow(CyclicElem{{1, 2}}, CyclicElem{{1, 6}}));
  CHECK(adj_pow(InfiniteDihedralElem{0, false}, InfiniteDihedralElem{7, true}));
  CHECK(adj_pow(InfiniteQuaternionElem{ToralParam(RationalAngle{}, {-3, 0}), false},
                InfiniteQuaternionElem{ToralParam(RationalAngle{}, {1, 0}), false}));
  CHECK_FALSE(adj_pow(InfiniteQuaternionElem{ToralParam({1, 2}, {2, 0}), false},
                      InfiniteQuaternionElem{ToralParam(RationalAngle{}, {1, 0}), false}));
}

TEST_CASE("enhanced power adjacency") {
  CHECK(adj_epow(kShift2, kShift3));
  CHECK(adj_epow(CyclicElem{{1, 2}}, CyclicElem{{1, 3}}));
  CHECK_FALSE(adj_epow(InfiniteQuaternionElem{ToralParam(RationalAngle{}, {1, 0}), false},
                       InfiniteQuaternionElem{ToralParam(RationalAngle{}, {0, 1}), false}));
  CHECK_FALSE(adj_epow(InfiniteDihedralElem{1, true}, InfiniteDihedralElem{1, false}));
  CHECK(adj_epow(InfiniteDihedralElem{1, true}, InfiniteDihedralElem{0, false}));
}

TEST_CASE("graphs on C6") {
  const FiniteGroupView c6 = build_family({CyclicSpec{6}});
  const auto pow = build_graph(c6, GraphKind::Pow);
  const auto epow = build_graph(c6, GraphKind::EPow);
  CHECK(epow.edge_count() == 15);
  CHECK(pow == oracle_graph(c6, GraphKind::Pow));
  CHECK(pow.edge_count() == 13);
  CHECK(edge_subset(pow, epow));
  CHECK_FALSE(edge_set_equal(pow, epow));
  CHECK(edge_set_equal(pow, pow));
}

TEST_CASE("closed-form adjacency agrees with the matrix oracle") {
  for (const char* text : {"cyclic:12", "dihedral:6", "dihedral:4", "dicyclic:3", "genq:3", "lq:3",
                           "ld:3", "prufer:3", "prod(cyclic:2,cyclic:4)",
                           "prod(cyclic:3,dihedral:2)"}) {
    const FiniteGroupView v = build_family(parse_family_spec(text));
    for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com}) {
      INFO(text, " ", kind_name(k));
      CHECK(build_graph(v, k) == oracle_graph(v, k));
    }
  }
}

TEST_CASE("window adjacency agrees with the matrix oracle for power and commuting graphs") {
  for (const char* text : {"dinf:-3..4", "qinf:default"}) {
    const FiniteGroupView v = build_family(parse_family_spec(text));
    for (GraphKind k : {GraphKind::Pow, GraphKind::Com}) {
      INFO(text, " ", kind_name(k));
      CHECK(build_graph(v, k) == oracle_graph(v, k));
    }
  }
}

TEST_CASE("generic path agrees with closed forms") {
  for (const char* text : {"dihedral:8", "dicyclic:5", "lq:4", "ld:4", "prod(cyclic:3,cyclic:3)"}) {
    const FiniteGroupView v = build_family(parse_family_spec(text));
    for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com})
      CHECK(build_graph(v, k, AdjacencyPath::ClosedForm) == build_graph(v, k, AdjacencyPath::Generic));
  }
}

TEST_CASE("hierarchy inclusions hold on every view") {
  for (const char* text : {"cyclic:30", "dihedral:9", "dicyclic:6", "lq:4", "ld:4", "dinf:-4..4",
                           "qinf:default", "prod(dihedral:3,cyclic:2)"}) {
    const FiniteGroupView v = build_family(parse_family_spec(text));
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    CHECK(edge_subset(pow, epow));
    CHECK(edge_subset(epow, com));
  }
}

TEST_CASE("epow closure oracle refuses windows") {
  const FiniteGroupView w = build_family(parse_family_spec("dinf:0..3"));
  CHECK_ERROR_CODE(adj_epow_closure(w, 1, 2), ErrorCode::WindowNotClosed);
  CHECK_ERROR_CODE(build_graph(w, GraphKind::EPow, AdjacencyPath::Generic),
                   ErrorCode::WindowNotClosed);
}

TEST_CASE("edge comparisons need matching labels") {
  const auto a = build_graph(build_family({CyclicSpec{4}}), GraphKind::Pow);
  const auto b = build_graph(build_family({CyclicSpec{5}}), GraphKind::Pow);
  CHECK_ERROR_CODE(edge_set_equal(a, b), ErrorCode::LabelMismatch);
  CHECK_ERROR_CODE(edge_subset(a, b), ErrorCode::LabelMismatch);
}

TEST_CASE("graph construction errors") {
  CHECK_ERROR_CODE(HierarchyGraph(GraphKind::Other, "x", {"a", "a"}), ErrorCode::BadParam);
  CHECK_ERROR_CODE(HierarchyGraph::from_edges(GraphKind::Other, "x", {"a", "b"}, {{0, 0}}),
                   ErrorCode::BadParam);
  CHECK_ERROR_CODE(HierarchyGraph::from_edges(GraphKind::Other, "x", {"a", "b"}, {{0, 2}}),
                   ErrorCode::BadParam);
}

TEST_CASE("universal vertices") {
  CHECK(universal_vertices(complete(4)).size() == 4);
  const FiniteGroupView q16 = build_family({GenQuaternionSpec{3}});
  const auto pow = build_graph(q16, GraphKind::Pow);
  std::vector<std::string> u;
  for (std::size_t i : universal_vertices(pow)) u.push_back(pow.labels()[i]);
  CHECK(u == std::vector<std::string>{"c(0/1)", "c(1/2)"});
  const auto com = build_graph(build_family(parse_family_spec("dinf:0..3")), GraphKind::Com);
  CHECK(universal_vertices(com) == std::vector<std::size_t>{0});
  CHECK(com.degree(0) == 7);
}

TEST_CASE("decomposition signatures") {
  const auto pow = build_graph(build_family({GenQuaternionSpec{3}}), GraphKind::Pow);
  CHECK(decomposition_signature(pow) == DecompositionSignature{2, {6, 2, 2, 2, 2}});
  CHECK(decomposition_signature(pow)->to_string() == "(2, {6,2,2,2,2})");
  const auto com = build_graph(build_family({DicyclicSpec{3}}), GraphKind::Com);
  CHECK(decomposition_signature(com) == DecompositionSignature{2, {4, 2, 2, 2}});
  CHECK(decomposition_signature(complete(5)) == DecompositionSignature{5, {}});
  // A path on 3 vertices: the middle vertex is universal, the ends are isolated.
  const auto path = HierarchyGraph::from_edges(GraphKind::Other, "p", {"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(decomposition_signature(path) == DecompositionSignature{1, {1, 1}});
  // A path on 4 vertices is not a join of cliques.
  const auto p4 = HierarchyGraph::from_edges(GraphKind::Other, "p", {"a", "b", "c", "d"},
                                             {{0, 1}, {1, 2}, {2, 3}});
  CHECK(decomposition_signature(p4) == std::nullopt);
  CHECK_FALSE(decomposition_signature(build_graph(build_family({CyclicSpec{6}}), GraphKind::Pow)) ==
              std::nullopt);
}

TEST_CASE("signature reconstruction round-trips") {
  for (const DecompositionSignature& s :
       {DecompositionSignature{2, {6, 2, 2, 2, 2}}, DecompositionSignature{0, {3, 1}},
        DecompositionSignature{1, {7, 1, 1}}, DecompositionSignature{4, {}}}) {
    CHECK(decomposition_signature(graph_from_signature(s)) == s);
  }
}

TEST_CASE("induced subgraphs") {
  const auto pow = build_graph(build_family({GenQuaternionSpec{3}}), GraphKind::Pow);
  CHECK(induced_subgraph(pow, pow.labels()) == pow);
  std::vector<std::string> rest(pow.labels().begin() + 2, pow.labels().end());
  const auto sub = induced_subgraph(pow, rest);
  CHECK(universal_vertices(sub).empty());
  CHECK(decomposition_signature(sub) == DecompositionSignature{0, {6, 2, 2, 2, 2}});
  const auto single = induced_subgraph(pow, {"c(1/4)"});
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
  CHECK_ERROR_CODE(induced_subgraph(pow, {"nope"}), ErrorCode::UnknownLabel);
}

TEST_CASE("first missing edge") {
  const FiniteGroupView c6 = build_family({CyclicSpec{6}});
  const auto pow = build_graph(c6, GraphKind::Pow), epow = build_graph(c6, GraphKind::EPow);
  const auto e = first_missing_edge(pow, epow);
  REQUIRE(e.has_value());
  CHECK(pow.labels()[e->first] == "c(1/2)");
  CHECK(pow.labels()[e->second] == "c(1/3)");
  CHECK(first_missing_edge(epow, pow) == std::nullopt);
}
