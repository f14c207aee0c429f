#include <algorithm>
#include <string>

#include "completion_search.hpp"
#include "multipartite_scheme.hpp"
#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::Precondition, what + " violated");
}

BoundCertificate finish(const Graph& input, const Graph& target, CaseWitness witness,
                        EdgeColoring coloring) {
  BoundCertificate cert;
  cert.input_graph = input;
  cert.target_graph = target;
  cert.claimed_bound = case_bound(witness.label);
  cert.lower_bound = lower_bounds(target);
  auto verdict = verify_rainbow_connected(target, coloring);
  if (!verdict)
    throw Error(ErrorKind::Internal, std::string(to_string(witness.label)) +
                                         ": construction is not rainbow connected (pair " +
                                         std::to_string(verdict.witness->first) + "," +
                                         std::to_string(verdict.witness->second) + ")");
  if (cert.claimed_bound && coloring.num_colors() > *cert.claimed_bound)
    throw Error(ErrorKind::Internal, std::string(to_string(witness.label)) +
                                         ": construction exceeds its bound");
  cert.witness = std::move(witness);
  cert.coloring = std::move(coloring);
  cert.verified = true;
  return cert;
}

CaseWitness layered_witness(CaseLabel label, const LayerDecomposition& layers) {
  CaseWitness w;
  w.label = label;
  w.root = layers.root;
  w.layer_sizes = layers.sizes();
  return w;
}

// Colouring of target[part] (local vertex i = part[i]): the complete
// multipartite graph on `groups` gets the multipartite scheme and every other
// edge colour 0.
EdgeColoring scheme_on_part(const Graph& target, const VertexSet& part,
                            const std::vector<VertexSet>& groups) {
  Graph sub = induced_subgraph(target, part);
  std::vector<VertexSet> local;
  for (const auto& group : groups) {
    VertexSet l;
    for (Vertex v : group)
      l.push_back(static_cast<int>(std::lower_bound(part.begin(), part.end(), v) - part.begin()));
    std::sort(l.begin(), l.end());
    local.push_back(std::move(l));
  }
  ColoringBuilder builder(sub);
  detail::apply_multipartite_scheme(builder, local);
  builder.fill_unset(0);
  return builder.build();
}

EdgeColoring uniform_on_part(const Graph& target, const VertexSet& part) {
  return uniform_coloring(induced_subgraph(target, part));
}

EdgeColoring distinct_on_part(const Graph& target, const VertexSet& part) {
  return distinct_coloring(induced_subgraph(target, part));
}

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

bool is_star(const Graph& tree) {
  auto d = diameter(tree);
  return d && *d <= 2;
}

}  // namespace

// ---------------------------------------------------------------------------

BoundCertificate color_complement_of_diam_ge4(const Graph& g) {
  require(is_connected(g), "G connected");
  require(*diameter(g) >= 4, "diam(G) >= 4");
  Graph h = complement(g);
  require(is_connected(h), "complement of G connected");

  const auto L = bfs_layers(g, select_root(g));
  const auto& N = L.layers;
  ColoringBuilder builder(h);
  CaseWitness w;

  if (L.depth >= 5) {
    // Both parity classes span complete multipartite graphs with at least
    // three parts; colour them on a shared palette {0,1,2}, then give every
    // cross edge colour 3.
    std::vector<VertexSet> even, odd;
    for (int i = 0; i <= L.depth; ++i) (i % 2 ? odd : even).push_back(N[i]);
    detail::apply_multipartite_scheme(builder, even);
    detail::apply_multipartite_scheme(builder, odd);
    builder.set_between(L.even_class, L.odd_class, 3);
    w = layered_witness(CaseLabel::THM31_CASE1, L);
  } else if (N[1].size() >= 2 && N[3].size() >= 2) {
    // The odd class spans K_{n1,n3} (at most four colours 0..3); the even
    // class spans K_{n0,n2,n4} on colours 0..2; cross edges take colour 3.
    detail::apply_multipartite_scheme(builder, {N[1], N[3]});
    detail::apply_multipartite_scheme(builder, {N[0], N[2], N[4]});
    builder.set_between(L.even_class, L.odd_class, 3);
    w = layered_witness(CaseLabel::THM31_SUB21, L);
  } else {
    // n1 = 1, or n3 = 1 handled on the mirrored layering i -> 4 - i.
    const bool mirrored = N[1].size() != 1;
    auto layer = [&](int i) -> const VertexSet& { return N[mirrored ? 4 - i : i]; };
    enum { a, b, c, d };
    builder.set_between(layer(0), layer(4), a);
    builder.set_between(layer(0), layer(2), b);
    builder.set_between(layer(2), layer(4), c);
    builder.set_between(layer(1), layer(4), d);
    builder.set_between(layer(0), layer(3), b);
    builder.set_between(layer(1), layer(3), c);
    w = layered_witness(CaseLabel::THM31_SUB22, L);
    if (mirrored) w.note = "mirrored layering (n3 = 1)";
  }
  builder.fill_unset(0);
  return finish(g, h, std::move(w), builder.build());
}

BoundCertificate color_complement_of_tree(const Graph& g) {
  require(is_tree(g), "G is a tree");
  require(!is_star(g), "G is not a star");
  Graph h = complement(g);
  const auto L = bfs_layers(g, select_root(g));
  // Parity classes are independent in the tree, hence cliques in the
  // complement.
  const std::vector<VertexSet> parts{L.even_class, L.odd_class};
  const std::vector<EdgeColoring> cols{uniform_on_part(h, parts[0]),
                                       uniform_on_part(h, parts[1])};
  auto w = layered_witness(CaseLabel::PROP32_TREE, L);
  return finish(g, h, std::move(w), compose_partition_coloring(h, parts, cols));
}

BoundCertificate color_complement_of_disconnected(const Graph& g) {
  auto comps = components(g);
  require(comps.size() >= 2, "G has at least two components");
  if (comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1))
    throw Error(ErrorKind::Precondition,
                "G has exactly two components and one is trivial; use the "
                "trivial-plus-component route");
  Graph h = complement(g);
  ColoringBuilder builder(h);
  detail::apply_multipartite_scheme(builder, comps);
  builder.fill_unset(0);
  CaseWitness w;
  w.label = CaseLabel::PROP35_DISCONNECTED;
  std::vector<int> sizes;
  for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  w.part_sizes = sizes;
  return finish(g, h, std::move(w), builder.build());
}

BoundCertificate color_complement_diam3_trianglefree(const Graph& g) {
  require(is_connected(g), "G connected");
  require(*diameter(g) == 3, "diam(G) = 3");
  require(is_triangle_free(g), "G triangle-free");
  Graph h = complement(g);
  require(is_connected(h), "complement of G connected");

  const auto L = bfs_layers(g, select_root(g));
  const Vertex x = L.root;
  const VertexSet& N0 = L.layers[0];
  const VertexSet& N1 = L.layers[1];
  const VertexSet& N2 = L.layers[2];
  const VertexSet& N3 = L.layers[3];
  const auto n1 = N1.size(), n2 = N2.size(), n3 = N3.size();

  auto compose = [&](CaseLabel label, std::vector<VertexSet> parts,
                     std::vector<EdgeColoring> cols) {
    return finish(g, h, layered_witness(label, L), compose_partition_coloring(h, parts, cols));
  };

  if (n1 == 1 && n2 == 1 && n3 == 1) {
    // G = P4 and its complement is again P4.
    return finish(g, h, layered_witness(CaseLabel::THM41_P4, L), distinct_coloring(h));
  }
  if (n1 == 1 && n2 == 1) {
    // {x} u N1 against N3 spans K_{2,n3}; N2 is one more part.
    VertexSet big = sorted(set_union(set_union(N0, N1), N3));
    return compose(CaseLabel::THM41_SUB11, {big, N2},
                   {scheme_on_part(h, big, {set_union(N0, N1), N3}),
                    uniform_on_part(h, N2)});
  }
  if (n1 == 1 && n3 == 1) {
    // N2 is a clique in the complement; x - N3 - N1 is a path there.
    VertexSet path = sorted(set_union(set_union(N0, N1), N3));
    return compose(CaseLabel::THM41_SUB12, {N2, path},
                   {uniform_on_part(h, N2), distinct_on_part(h, path)});
  }
  if (n2 == 1 && n3 == 1) {
    VertexSet path = sorted(set_union(set_union(N0, N2), N3));
    return compose(CaseLabel::THM41_SUB13, {N1, path},
                   {uniform_on_part(h, N1), distinct_on_part(h, path)});
  }
  if (n1 == 1) {
    // K_{2,n3} on {x} u N1 against N3, then one fresh colour on x - N2.
    ColoringBuilder builder(h);
    detail::apply_multipartite_scheme(builder, {set_union(N0, N1), N3});
    builder.set_between(N0, N2, 4);
    builder.fill_unset(0);
    return finish(g, h, layered_witness(CaseLabel::THM41_SUB21, L), builder.build());
  }
  if (n2 == 1) {
    VertexSet big = sorted(set_union(set_union(N0, N1), N3));
    return compose(CaseLabel::THM41_SUB22, {big, N2},
                   {scheme_on_part(h, big, {set_union(N0, N1), N3}),
                    uniform_on_part(h, N2)});
  }

  enum { a, b, c, d, e };
  if (n3 == 1) {
    const Vertex u = N3[0];
    VertexSet vu;
    for (Vertex z : N2)
      if (g.adjacent(u, z)) vu.push_back(z);
    ColoringBuilder builder(h);
    builder.set_within(set_union(N1, N3), a);
    builder.set(x, u, b);
    builder.set_between(N3, set_difference(N2, vu), c);
    builder.set_between(N0, N2, d);
    builder.fill_unset(a);
    auto w = layered_witness(CaseLabel::THM41_SUB23, L);
    w.u = u;
    w.neighbors_of_u = vu;
    return finish(g, h, std::move(w), builder.build());
  }

  // n1, n2, n3 >= 2.
  auto neighbours_in_n2 = [&](Vertex z) {
    VertexSet out;
    for (Vertex y : N2)
      if (g.adjacent(z, y)) out.push_back(y);
    return out;
  };
  std::optional<Vertex> chosen;
  for (Vertex z : N3) {
    auto vz = neighbours_in_n2(z);
    if (!vz.empty() && vz != N2) {
      chosen = z;
      break;
    }
  }
  if (!chosen) {
    for (Vertex z : N3)
      if (neighbours_in_n2(z).empty()) {
        chosen = z;
        break;
      }
  }
  if (!chosen) {
    // Every vertex of N3 sees all of N2, so {x} u N3, N2 and N1 are cliques
    // of the complement.
    VertexSet top = sorted(set_union(N0, N3));
    return compose(CaseLabel::THM41_CASE3, {top, N2, N1},
                   {uniform_on_part(h, top), uniform_on_part(h, N2), uniform_on_part(h, N1)});
  }
  const Vertex u = *chosen;
  const VertexSet vu = neighbours_in_n2(u);
  const VertexSet rest = set_difference(N3, {u});
  ColoringBuilder builder(h);
  builder.set_within(N1, a);
  for (Vertex z : rest) {
    builder.set_between(VertexSet{z}, N1, c);
    builder.set(z, N1.front(), b);
  }
  builder.set_between(N0, rest, a);
  builder.set(x, u, d);
  builder.set_between(N0, N2, e);
  builder.set_between(VertexSet{u}, set_difference(N2, vu), b);
  builder.fill_unset(a);
  auto w = layered_witness(CaseLabel::THM41_CASE3, L);
  w.u = u;
  w.neighbors_of_u = vu;
  return finish(g, h, std::move(w), builder.build());
}

BoundCertificate color_complement_diam2_trianglefree(const Graph& g) {
  require(is_connected(g), "G connected");
  require(*diameter(g) == 2, "diam(G) = 2");
  require(is_triangle_free(g), "G triangle-free");
  Graph h = complement(g);
  require(is_connected(h), "complement of G connected");

  const auto L = bfs_layers(g, select_root(g));
  const Vertex x = L.root;
  const VertexSet& N1 = L.layers[1];
  const VertexSet& N2 = L.layers[2];

  if (N2.size() == 1) {
    // N1 is a clique of the complement and x - N2 an edge.
    VertexSet top = sorted(set_union(L.layers[0], N2));
    const std::vector<VertexSet> parts{top, N1};
    const std::vector<EdgeColoring> cols{uniform_on_part(h, top), uniform_on_part(h, N1)};
    return finish(g, h, layered_witness(CaseLabel::PROP43_CASE1, L),
                  compose_partition_coloring(h, parts, cols));
  }

  auto complement_neighbours_in_n1 = [&](Vertex z) {
    VertexSet out;
    for (Vertex y : N1)
      if (h.adjacent(z, y)) out.push_back(y);
    return out;
  };

  // D = {x, v} u N1. Inner colourings of h[D]: N1 clique colour 0, edge x-v
  // colour 1, and v - N1 either colour 0 (two colours, needs v to see all of
  // N1) or colour 2.
  auto inner_coloring = [&](const VertexSet& dset, Vertex v, int v_color) {
    Graph sub = induced_subgraph(h, dset);
    auto local = [&](Vertex z) {
      return static_cast<int>(std::lower_bound(dset.begin(), dset.end(), z) - dset.begin());
    };
    ColoringBuilder builder(sub);
    builder.fill_unset(0);
    builder.set(local(x), local(v), 1);
    for (Vertex y : complement_neighbours_in_n1(v)) builder.set(local(v), local(y), v_color);
    return std::pair{sub, builder.build()};
  };

  auto witness_for = [&](Vertex v, const VertexSet& dset) {
    auto w = layered_witness(CaseLabel::PROP43_CASE2, L);
    w.v = v;
    w.dominating_set = dset;
    return w;
  };

  std::vector<Vertex> candidates;
  for (Vertex z : N2)
    if (!complement_neighbours_in_n1(z).empty()) {
      candidates.push_back(z);
      break;
    }
  for (Vertex z : N2)
    if (complement_neighbours_in_n1(z) == N1 &&
        std::find(candidates.begin(), candidates.end(), z) == candidates.end()) {
      candidates.push_back(z);
      break;
    }
  if (candidates.empty())
    throw Error(ErrorKind::Internal, "complement connected but no N2 vertex sees N1");

  const int bound = *case_bound(CaseLabel::PROP43_CASE2);
  for (int inner_colors : {2, 3}) {
    for (Vertex v : candidates) {
      VertexSet dset = sorted(set_union(set_union(L.layers[0], N1), VertexSet{v}));
      auto [sub, inner] = inner_coloring(dset, v, inner_colors == 2 ? 0 : 2);
      if (!verify_rainbow_connected(sub, inner)) {
        if (inner_colors == 3) continue;
        std::vector<int> free(sub.size(), -1);
        auto found = detail::complete_coloring(sub, free, 2, false);
        if (!found) continue;
        inner = *found;
      }
      auto col = extend_via_dominating_set(h, dset, inner);
      if (col.num_colors() <= bound) return finish(g, h, witness_for(v, dset), col);
    }
  }

  // The dominating-set route needs three colours inside D here, so it can
  // overshoot the bound by one; fall back to a bounded search for it.
  std::vector<int> free(h.size(), -1);
  if (auto found = detail::complete_coloring(h, free, bound, false)) {
    auto w = layered_witness(CaseLabel::PROP43_CASE2, L);
    w.fallback = std::string(to_string(CaseLabel::SEARCH_FALLBACK));
    w.note = "dominating-set route needs more than two colours inside D";
    return finish(g, h, std::move(w), *found);
  }
  throw Error(ErrorKind::Internal, "extension exhausted: no colouring within the bound");
}

BoundCertificate color_complement_trivial_plus_component(const Graph& g) {
  require(is_triangle_free(g), "G triangle-free");
  auto comps = components(g);
  require(comps.size() == 2, "G has exactly two components");
  require(comps[0].size() == 1 || comps[1].size() == 1, "one component of G is trivial");
  require(comps[0].size() > 1 || comps[1].size() > 1, "one component of G is non-trivial");
  Graph h = complement(g);
  const Vertex u = comps[0].size() == 1 ? comps[0][0] : comps[1][0];

  int min_degree = h.order();
  Vertex v1 = 0;
  for (Vertex z = 0; z < h.order(); ++z)
    if (h.degree(z) < min_degree) {
      min_degree = h.degree(z);
      v1 = z;
    }

  CaseWitness w;
  w.u = u;
  w.v1 = v1;
  if (min_degree == 1) {
    // h - v1 is complete; v1 hangs off u.
    ColoringBuilder builder(h);
    builder.fill_unset(0);
    builder.set(u, v1, 1);
    w.label = CaseLabel::PROP44_CASE1;
    return finish(g, h, std::move(w), builder.build());
  }

  VertexSet dset = sorted(set_union(VertexSet{v1}, h.neighbors(v1)));
  Graph sub = induced_subgraph(h, dset);
  auto local = [&](Vertex z) {
    return static_cast<int>(std::lower_bound(dset.begin(), dset.end(), z) - dset.begin());
  };
  enum { a, b, c };
  ColoringBuilder inner(sub);
  VertexSet others = set_difference(h.neighbors(v1), {u});
  for (Vertex z : others) {
    inner.set(local(v1), local(z), b);
    inner.set(local(u), local(z), c);
  }
  inner.set(local(u), local(v1), a);
  inner.fill_unset(a);
  w.label = CaseLabel::PROP44_CASE2;
  w.dominating_set = dset;
  return finish(g, h, std::move(w), extend_via_dominating_set(h, dset, inner.build()));
}

// ---------------------------------------------------------------------------

EdgeColoring extend_via_dominating_set(const Graph& g, const VertexSet& d_set,
                                       const EdgeColoring& inner) {
  const int n = g.order();
  if (d_set.empty() || !std::is_sorted(d_set.begin(), d_set.end()) ||
      std::adjacent_find(d_set.begin(), d_set.end()) != d_set.end() || d_set.front() < 0 ||
      d_set.back() >= n)
    throw Error(ErrorKind::InvalidArgument, "dominating set must be sorted, distinct, in range");
  Graph sub = induced_subgraph(g, d_set);
  require(is_connected(sub), "D induces a connected subgraph");
  for (Vertex z = 0; z < n; ++z) {
    if (contains(d_set, z)) continue;
    auto nb = g.neighbors(z);
    require(std::any_of(nb.begin(), nb.end(), [&](Vertex y) { return contains(d_set, y); }),
            "D dominates G (vertex " + std::to_string(z) + ")");
    require(nb.size() != 1, "D contains every pendant vertex (vertex " + std::to_string(z) + ")");
  }
  if (!inner.covers(sub)) throw Error(ErrorKind::Coverage, "inner colouring does not match G[D]");
  require(static_cast<bool>(verify_rainbow_connected(sub, inner)),
          "inner colouring rainbow connects G[D]");
  if (static_cast<int>(d_set.size()) == n) return inner;

  const int c = inner.num_colors();
  ColoringBuilder builder(g);
  builder.set_induced(d_set, inner);
  for (Vertex z = 0; z < n; ++z) {
    if (contains(d_set, z)) continue;
    bool first = true;
    for (Vertex y : g.neighbors(z)) {
      if (contains(d_set, y)) {
        builder.set(z, y, first ? c : c + 1);
        first = false;
      } else if (z < y) {
        builder.set(z, y, c + 2);
      }
    }
  }
  auto col = builder.build();
  if (verify_rainbow_connected(g, col)) return col;

  // Keep the inner colouring and search the three fresh colours elsewhere.
  EdgeIndex index(g);
  std::vector<int> fixed(g.size(), -1);
  for (std::size_t i = 0; i < inner.edges().size(); ++i) {
    auto [a, b] = inner.edges()[i];
    fixed[index.id(d_set[a], d_set[b])] = inner.colors()[i];
  }
  // the fixed ids must span 0..c-1 so fresh ids start at c
  if (auto found = detail::complete_coloring(g, fixed, 3, false)) return *found;
  throw Error(ErrorKind::Internal, "extension exhausted");
}

}  // namespace rainbow
