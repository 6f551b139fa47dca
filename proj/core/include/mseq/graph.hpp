#ifndef MSEQ_GRAPH_HPP
#define MSEQ_GRAPH_HPP

#include <cstddef>
#include <vector>

#include "mseq/types.hpp"

namespace mseq {

struct SccIndex {
  std::vector<std::uint32_t> scc_of;          // state -> component id
  std::vector<std::vector<State>> components;  // reverse topological order

  std::size_t size() const { return components.size(); }
};

/// Tarjan decomposition of the underlying directed graph. Component ids
/// are assigned in reverse topological order: every edge goes from a
/// component id to an equal or smaller one.
SccIndex scc(const Transducer& t);

/// Indices into t.edges of the edges whose endpoints lie in distinct
/// components.
std::vector<std::size_t> transient_edges(const Transducer& t, const SccIndex& index);

/// Path of the condensation: a chain of transient edges starting in a
/// component that contains an initial state. The empty chain is anchored
/// at such a component.
struct CondensationPath {
  std::uint32_t start_component = 0;
  std::vector<std::size_t> edges;  // indices into t.edges
};

std::vector<CondensationPath> condensation_paths(const Transducer& t,
                                                 const SccIndex& index);
std::vector<CondensationPath> condensation_paths(const Transducer& t);

/// Sub-transducer keeping all intra-component edges plus exactly the
/// transient edges of the given path, trimmed.
Transducer path_restriction(const Transducer& t, const SccIndex& index,
                            const CondensationPath& path);

/// Disjoint union of the path restrictions; equivalent to t.
Transducer split(const Transducer& t);
/// Same parts, unmerged; empty restrictions are dropped.
std::vector<Transducer> split_parts(const Transducer& t);

/// Single initial state and every same-source same-letter edge pair
/// consists of transient edges.
bool is_separable(const Transducer& t);

/// Equivalent single-valued transducer: a disjoint union of copies, one
/// per choice function picking a single final output per final state.
/// Throws BoundExceededError when the number of copies exceeds max_copies.
Transducer multi_to_union(const Transducer& t, std::size_t max_copies = 10000);

}  // namespace mseq

#endif
