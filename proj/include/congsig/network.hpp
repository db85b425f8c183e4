#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace congsig {

/// A directed link with BPR volume-delay parameters. Node ids are 1-based.
struct Edge {
  std::size_t id = 0;
  int from = 0;
  int to = 0;
  double capacity = 1.0;
  double length = 0.0;
  double free_flow = 0.0;
  double b_coeff = 0.0;
  double power = 0.0;
  // Retained from the input file; not used by any cost computation.
  double speed = 0.0;
  double toll = 0.0;
  double link_type = 1.0;
};

class Network {
 public:
  Network() = default;

  /// Validates every edge and rewrites edge ids to their position in `edges`.
  /// `node_count` is raised to the largest node id referenced by an edge.
  Network(int node_count, std::vector<Edge> edges);

  int node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  /// Ids of edges leaving `node`, in file order.
  std::span<const std::size_t> out_edges(int node) const;

  /// First edge from `from` to `to`, or edge_count() when there is none.
  std::size_t find_edge(int from, int to) const noexcept;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;  // indexed by node id
};

class DemandTable {
 public:
  using Key = std::pair<int, int>;  // (origin, destination)

  DemandTable() = default;
  explicit DemandTable(std::map<Key, double> entries);

  const std::map<Key, double>& entries() const noexcept { return entries_; }
  double total() const noexcept { return total_; }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of distinct origins with at least one positive entry.
  std::size_t origin_count() const;

 private:
  std::map<Key, double> entries_;
  double total_ = 0.0;
};

using WarningSink = std::function<void(const std::string&)>;

/// Writes the warning to stderr.
void stderr_warning(const std::string& message);

Network parse_network(std::istream& in);
Network parse_network(std::string_view text);
Network load_network(const std::string& path);

DemandTable parse_trips(std::istream& in, const WarningSink& warn = stderr_warning);
DemandTable parse_trips(std::string_view text, const WarningSink& warn = stderr_warning);
DemandTable load_trips(const std::string& path, const WarningSink& warn = stderr_warning);

/// TNTP net text with metadata, a `~` header and one row per edge.
void write_network(std::ostream& out, const Network& net);
/// TNTP trips text, one `Origin` block per origin.
void write_trips(std::ostream& out, const DemandTable& demand, int zone_count);

/// Relative and absolute slack used when deciding that two path weights tie.
struct TieTolerance {
  double relative = 1e-9;
  double absolute = 1e-12;
};

/// The subgraph of all minimum-weight origin->dest paths, kept acyclic.
struct TightDag {
  int origin = 0;
  int dest = 0;
  std::vector<double> dist;            // per node id, from origin
  std::vector<std::size_t> tight_edges;  // ascending edge ids
  std::vector<double> path_count_from;  // tight paths origin -> v
  std::vector<double> path_count_to;    // tight paths v -> dest

  double total_paths() const { return path_count_from.at(static_cast<std::size_t>(dest)); }
  /// Fraction of the tight paths that use edge `edge_id` (0 if it is not tight).
  double edge_share(const Network& net, std::size_t edge_id) const;
};

/// Single-source distances from `origin` (Dijkstra). Unreachable nodes hold +inf.
std::vector<double> shortest_distances(const Network& net, std::span<const double> weights,
                                       int origin);

/// Builds the tight DAG for (origin, dest) from precomputed distances.
TightDag tight_dag_from_distances(const Network& net, std::span<const double> weights,
                                  std::vector<double> dist, int origin, int dest,
                                  TieTolerance tol = {});

/// Throws NoPathError when dest is unreachable, ValidationError on negative weights.
TightDag shortest_path_dag(const Network& net, std::span<const double> weights, int origin,
                           int dest, TieTolerance tol = {});

}  // namespace congsig
