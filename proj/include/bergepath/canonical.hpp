#pragma once

#include <string>
#include <vector>

#include "bergepath/hypergraph.hpp"

namespace bergepath {

/// Default vertex-count ceiling for exact canonicalization.
inline constexpr int kDefaultCanonicalLimit = 12;

/// Isomorphism-invariant encoding of a multi-hypergraph.
struct CanonicalForm {
  /// "n:r:a.b.c/d.e.f/..." over the canonically relabeled, sorted instances.
  /// Equal strings iff the hypergraphs are isomorphic (multiplicity included).
  std::string text;
  /// relabel[v] is the canonical label of input vertex v.
  std::vector<int> relabel;
  /// The input with `relabel` applied.
  Hypergraph hypergraph;
};

/// Exact canonical labeling by individualization-refinement over vertex
/// colorings, branching only on one vertex per twin class. Throws LimitError
/// when h.order() > limit.
CanonicalForm canonical_form(const Hypergraph& h, int limit = kDefaultCanonicalLimit);

/// Inverse of the text encoding; throws ParameterError on malformed input.
Hypergraph from_canonical_text(const std::string& text);

/// Text encoding of h under its current labels (no canonicalization).
std::string encode_text(const Hypergraph& h);

}  // namespace bergepath
