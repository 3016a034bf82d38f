#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergepath/hypergraph.hpp"

namespace bergepath {

// Generators for the extremal and lower-bound families. Every generator puts
// its hub or core at vertex 0 and numbers blocks consecutively; identical
// parameters give identical output. Out-of-range parameters throw
// ParameterError.

enum class K3Variant { star, double_edge };
enum class K4Variant { small, h1, h2 };
enum class MultiVariant { multi_star, multi_cycle_hub };

/// BP_3-free: a star of (n-1)/(r-1) edges through vertex 0, or two edges
/// sharing 2r-n >= 2 vertices.
Hypergraph k3_family(int n, int r, K3Variant variant);

/// Three-edge gadget e1={v1,v2}+A, e2={v2,v3}+A, e3={v3,v4}+A with |A|=r-2,
/// A = {0..r-3}, v1..v4 = r-2..r+1, extended per variant:
///   small: one more edge {v1,v4}+A (n = r+2), or with the extra vertices
///          absorbed in place of vertices of A (n = r+3, r+4);
///   h1:    edges {v2,v3} + (r-2) fresh vertices;
///   h2:    f = A+{v5,v6} and edges {v3} + (r-1) fresh vertices.
Hypergraph k4_family(int n, int r, K4Variant variant);

/// a-1 blocks of r+1 vertices (hub included) carrying floor((k-1)/2) edges
/// W\{w_j}, plus one block on the hub and the remaining r+b vertices
/// carrying ceil((k-1)/2) edges through the hub, where n = 1 + ar + b.
/// Requires r >= k >= 5, a >= 1 and r not dividing n.
Hypergraph hub_blocks(int n, int r, int k);
std::int64_t hub_blocks_edges(int n, int r, int k);

/// Berge cycle of length k-1 on vertices 0..k-2 whose defining edges carry
/// r-2 private fillers each, plus satellite edges containing the
/// floor((k-1)/2) pairwise non-adjacent cycle vertices 0,2,4,... and private
/// fresh vertices. Requires r >= k >= 5 and the residual vertex count to be
/// a multiple of r - floor((k-1)/2).
Hypergraph cycle_hub(int n, int r, int k);
int cycle_hub_base_order(int r, int k);
std::int64_t cycle_hub_edges(int n, int r, int k);

/// Edges {0..r-2} + {i} for r-1 <= i < n. Requires n >= r+1.
Hypergraph sunflower(int n, int r);

/// Complete r-uniform hypergraph on S = {0..k-3} plus, for every other
/// vertex v, the edge {0..r-2} + {v}. Requires r+1 <= k <= 2r-1, n >= k-1.
Hypergraph complete_core(int n, int r, int k);

/// Multi-hypergraph families for n >= r >= k >= 3 (r > k for multi_cycle_hub).
///   multi_star: n = 1 + a(r-1) + b with a >= 2; a-1 edges of multiplicity
///               floor((k-1)/2) through vertex 0, and ceil((k-1)/2) edges on
///               the hub plus the remaining r-1+b vertices (so k = 3
///               needs b = 0).
///   multi_cycle_hub: {0..r-1} with multiplicity k-1 plus satellite edges
///               through the non-adjacent cycle vertices 0,2,4,...
Hypergraph multi_family(int n, int r, int k, MultiVariant variant);
std::int64_t multi_family_edges(int n, int r, int k, MultiVariant variant);

/// Named generator output.
struct NamedConstruction {
  std::string name;
  int k = 0;  // forbidden path length the construction targets
  Hypergraph hypergraph;
  std::int64_t expected_edges = 0;
};

/// Every simple-hypergraph generator whose preconditions hold at (n, r, k),
/// unverified. Multi-hypergraph families are excluded.
std::vector<NamedConstruction> applicable_constructions(int n, int r, int k);

/// CLI family names: star, double-edge, k4-small, k4-h1, k4-h2, hub,
/// cycle-hub, sunflower, complete-core, multi-star, multi-cycle-hub.
NamedConstruction construct_by_name(const std::string& family, int n, int r, int k);
const std::vector<std::string>& family_names();

}  // namespace bergepath
