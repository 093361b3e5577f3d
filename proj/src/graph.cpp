#include "sciomap/graph.hpp"

#include "sciomap/error.hpp"

namespace sciomap {

std::size_t AdjacencyView::index_of(const NodeId& id) const {
  // ids come from an ordered map, so they are sorted.
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) throw PreconditionError("unknown node '" + id + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace sciomap
