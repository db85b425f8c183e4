#include "congsig/network.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <tuple>

#include "congsig/errors.hpp"

namespace congsig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> to_node(std::string_view s) {
  const auto v = to_double(s);
  if (!v || *v < 1.0 || *v != std::floor(*v) || *v > std::numeric_limits<int>::max()) {
    return std::nullopt;
  }
  return static_cast<int>(*v);
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string s;
  std::size_t n = 0;
  while (std::getline(in, s)) lines.push_back({++n, s});
  return lines;
}

/// Consumes an optional `<KEY> value` block. Returns the index of the first
/// line after `<END OF METADATA>` (or 0 when there is no metadata).
std::size_t read_metadata(const std::vector<Line>& lines, std::map<std::string, std::string>& meta) {
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i].text).empty()) ++i;
  if (i == lines.size() || !starts_with(trim(lines[i].text), "<")) return 0;
  for (; i < lines.size(); ++i) {
    const auto t = trim(lines[i].text);
    if (t.empty()) continue;
    if (starts_with(t, "<END OF METADATA>")) return i + 1;
    if (!starts_with(t, "<")) {
      throw ParseError("expected metadata line or <END OF METADATA>", lines[i].number);
    }
    const auto close = t.find('>');
    if (close == std::string_view::npos) throw ParseError("unterminated metadata key", lines[i].number);
    meta[std::string(t.substr(1, close - 1))] = std::string(trim(t.substr(close + 1)));
  }
  throw ParseError("missing <END OF METADATA>", lines.empty() ? 0 : lines.back().number);
}

}  // namespace

// ---------------------------------------------------------------------------
// Network / DemandTable

Network::Network(int node_count, std::vector<Edge> edges) : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) throw ValidationError("negative node count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    e.id = i;
    const std::string where = "edge " + std::to_string(e.from) + "-" + std::to_string(e.to);
    if (e.from < 1 || e.to < 1) throw ValidationError(where + ": node ids must be >= 1");
    if (e.from == e.to) throw ValidationError(where + ": self-loop");
    if (!(e.capacity > 0.0) || !std::isfinite(e.capacity)) {
      throw ValidationError(where + ": capacity must be positive");
    }
    if (!(e.free_flow >= 0.0) || !(e.b_coeff >= 0.0) || !(e.power >= 0.0)) {
      throw ValidationError(where + ": free-flow time, B and power must be nonnegative");
    }
    node_count_ = std::max({node_count_, e.from, e.to});
  }
  out_.assign(static_cast<std::size_t>(node_count_) + 1, {});
  for (const Edge& e : edges_) out_[static_cast<std::size_t>(e.from)].push_back(e.id);
}

std::span<const std::size_t> Network::out_edges(int node) const {
  if (node < 1 || node > node_count_) return {};
  return out_[static_cast<std::size_t>(node)];
}

std::size_t Network::find_edge(int from, int to) const noexcept {
  if (from < 1 || from > node_count_) return edges_.size();
  for (std::size_t id : out_[static_cast<std::size_t>(from)]) {
    if (edges_[id].to == to) return id;
  }
  return edges_.size();
}

DemandTable::DemandTable(std::map<Key, double> entries) : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    const auto [od, flow] = *it;
    if (!(flow >= 0.0) || !std::isfinite(flow)) {
      throw ValidationError("demand " + std::to_string(od.first) + "->" + std::to_string(od.second) +
                            " must be a nonnegative finite number");
    }
    if (flow == 0.0) {
      it = entries_.erase(it);
      continue;
    }
    if (od.first == od.second) {
      throw ValidationError("demand entry with origin = destination " + std::to_string(od.first));
    }
    total_ += flow;
    ++it;
  }
}

std::size_t DemandTable::origin_count() const {
  std::size_t n = 0;
  int last = 0;
  for (const auto& [od, flow] : entries_) {
    if (od.first != last) ++n;
    last = od.first;
  }
  return n;
}

void stderr_warning(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

// ---------------------------------------------------------------------------
// Parsing

Network parse_network(std::istream& in) {
  const auto lines = read_lines(in);
  std::map<std::string, std::string> meta;
  const std::size_t body = read_metadata(lines, meta);

  int node_count = 0;
  if (auto it = meta.find("NUMBER OF NODES"); it != meta.end()) {
    const auto n = to_double(trim(it->second));
    if (!n || *n < 0 || *n != std::floor(*n)) throw ParseError("bad <NUMBER OF NODES> value", 0);
    node_count = static_cast<int>(*n);
  }

  std::vector<Edge> edges;
  for (std::size_t i = body; i < lines.size(); ++i) {
    auto t = trim(lines[i].text);
    if (t.empty() || t.front() == '~') continue;
    const std::size_t ln = lines[i].number;
    if (t.back() != ';') throw ParseError("edge row not terminated by ';'", ln);
    t.remove_suffix(1);
    const auto fields = split_ws(t);
    if (fields.size() < 10) {
      throw ParseError("edge row has " + std::to_string(fields.size()) + " fields, expected 10", ln);
    }
    double v[10];
    for (std::size_t k = 0; k < 10; ++k) {
      const auto d = to_double(fields[k]);
      if (!d) throw ParseError("non-numeric field '" + std::string(fields[k]) + "'", ln);
      v[k] = *d;
    }
    const auto from = to_node(fields[0]);
    const auto to = to_node(fields[1]);
    if (!from || !to) throw ParseError("node ids must be positive integers", ln);
    Edge e;
    e.from = *from;
    e.to = *to;
    e.capacity = v[2];
    e.length = v[3];
    e.free_flow = v[4];
    e.b_coeff = v[5];
    e.power = v[6];
    e.speed = v[7];
    e.toll = v[8];
    e.link_type = v[9];
    if (!(e.capacity > 0.0)) throw ValidationError("line " + std::to_string(ln) + ": capacity must be positive");
    edges.push_back(e);
  }
  try {
    return Network(node_count, std::move(edges));
  } catch (const ValidationError& err) {
    throw ValidationError(std::string("network: ") + err.what());
  }
}

Network parse_network(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_network(in);
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open network file '" + path + "'", 0);
  return parse_network(in);
}

DemandTable parse_trips(std::istream& in, const WarningSink& warn) {
  const auto lines = read_lines(in);
  std::map<std::string, std::string> meta;
  const std::size_t body = read_metadata(lines, meta);

  std::map<DemandTable::Key, double> entries;
  std::optional<int> origin;
  for (std::size_t i = body; i < lines.size(); ++i) {
    const auto t = trim(lines[i].text);
    const std::size_t ln = lines[i].number;
    if (t.empty() || t.front() == '~') continue;
    if (starts_with(t, "Origin")) {
      const auto fields = split_ws(t.substr(6));
      if (fields.empty()) throw ParseError("'Origin' without node id", ln);
      origin = to_node(fields[0]);
      if (!origin) throw ParseError("bad origin id '" + std::string(fields[0]) + "'", ln);
      continue;
    }
    if (!origin) throw ParseError("demand entry before any 'Origin' line", ln);
    std::string_view rest = t;
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const auto piece = trim(rest.substr(0, semi));
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
      if (piece.empty()) continue;
      const auto colon = piece.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'dest : flow'", ln);
      const auto dest = to_node(trim(piece.substr(0, colon)));
      const auto flow = to_double(trim(piece.substr(colon + 1)));
      if (!dest || !flow) throw ParseError("malformed demand entry '" + std::string(piece) + "'", ln);
      if (*flow < 0.0) throw ValidationError("line " + std::to_string(ln) + ": negative demand");
      if (*flow == 0.0) continue;
      if (*dest == *origin) {
        throw ValidationError("line " + std::to_string(ln) + ": positive demand with origin = destination");
      }
      entries[{*origin, *dest}] += *flow;
    }
  }

  DemandTable table(std::move(entries));
  if (auto it = meta.find("TOTAL OD FLOW"); it != meta.end()) {
    const auto declared = to_double(trim(it->second));
    if (declared && std::abs(*declared - table.total()) > 1e-6 * std::max(std::abs(*declared), 1.0)) {
      if (warn) {
        warn("<TOTAL OD FLOW> " + it->second + " differs from the sum of entries " +
             shortest(table.total()));
      }
    }
  }
  return table;
}

DemandTable parse_trips(std::string_view text, const WarningSink& warn) {
  std::istringstream in{std::string(text)};
  return parse_trips(in, warn);
}

DemandTable load_trips(const std::string& path, const WarningSink& warn) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trips file '" + path + "'", 0);
  return parse_trips(in, warn);
}

void write_network(std::ostream& out, const Network& net) {
  out << "<NUMBER OF ZONES> " << net.node_count() << '\n'
      << "<NUMBER OF NODES> " << net.node_count() << '\n'
      << "<FIRST THRU NODE> 1\n"
      << "<NUMBER OF LINKS> " << net.edge_count() << '\n'
      << "<END OF METADATA>\n\n"
      << "~\tinit_node\tterm_node\tcapacity\tlength\tfree_flow_time\tb\tpower\tspeed\ttoll\tlink_type\t;\n";
  for (const Edge& e : net.edges()) {
    out << '\t' << e.from << '\t' << e.to;
    for (double v : {e.capacity, e.length, e.free_flow, e.b_coeff, e.power, e.speed, e.toll, e.link_type}) {
      out << '\t' << shortest(v);
    }
    out << "\t;\n";
  }
}

void write_trips(std::ostream& out, const DemandTable& demand, int zone_count) {
  out << "<NUMBER OF ZONES> " << zone_count << '\n'
      << "<TOTAL OD FLOW> " << shortest(demand.total()) << '\n'
      << "<END OF METADATA>\n";
  int current = 0;
  for (const auto& [od, flow] : demand.entries()) {
    if (od.first != current) {
      current = od.first;
      out << "\n\nOrigin \t" << current << '\n';
    }
    out << "    " << od.second << " :    " << shortest(flow) << ";\n";
  }
}

// ---------------------------------------------------------------------------
// Shortest paths

std::vector<double> shortest_distances(const Network& net, std::span<const double> weights, int origin) {
  if (weights.size() != net.edge_count()) throw ValidationError("weight vector size does not match edge count");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("edge weights must be finite and nonnegative");
  }
  if (origin < 1 || origin > net.node_count()) throw ValidationError("origin node out of range");

  std::vector<double> dist(static_cast<std::size_t>(net.node_count()) + 1, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(origin)] = 0.0;
  pq.emplace(0.0, origin);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (std::size_t id : net.out_edges(u)) {
      const Edge& e = net.edges()[id];
      const double nd = d + weights[id];
      if (nd < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = nd;
        pq.emplace(nd, e.to);
      }
    }
  }
  return dist;
}

TightDag tight_dag_from_distances(const Network& net, std::span<const double> weights, std::vector<double> dist,
                                  int origin, int dest, TieTolerance tol) {
  const auto n = static_cast<std::size_t>(net.node_count()) + 1;
  if (dest < 1 || dest > net.node_count()) throw ValidationError("destination node out of range");
  if (dist.size() != n) throw ValidationError("distance vector size does not match node count");
  if (!std::isfinite(dist[static_cast<std::size_t>(dest)])) throw NoPathError(origin, dest);

  const auto& edges = net.edges();
  std::vector<char> tight(edges.size(), 0);
  for (const Edge& e : edges) {
    const double du = dist[static_cast<std::size_t>(e.from)];
    const double dv = dist[static_cast<std::size_t>(e.to)];
    if (std::isfinite(du) && du + weights[e.id] <= dv * (1.0 + tol.relative) + tol.absolute) tight[e.id] = 1;
  }

  // Group nodes whose distances agree within the tie slack; a tight edge never
  // leads to a lower group.
  std::vector<int> by_dist;
  for (int v = 1; v <= net.node_count(); ++v) {
    if (std::isfinite(dist[static_cast<std::size_t>(v)])) by_dist.push_back(v);
  }
  std::stable_sort(by_dist.begin(), by_dist.end(), [&](int a, int b) {
    return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
  });
  std::vector<std::size_t> group(n, 0);
  for (std::size_t k = 1; k < by_dist.size(); ++k) {
    const double prev = dist[static_cast<std::size_t>(by_dist[k - 1])];
    const double cur = dist[static_cast<std::size_t>(by_dist[k])];
    const double slack = 2.0 * (tol.relative * std::max(std::abs(prev), std::abs(cur)) + tol.absolute);
    group[static_cast<std::size_t>(by_dist[k])] =
        group[static_cast<std::size_t>(by_dist[k - 1])] + (cur - prev > slack ? 1 : 0);
  }

  // Fewest tight edges from the origin; breaks ties among zero-weight cycles.
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(n, kUnreached);
  {
    std::queue<int> q;
    hops[static_cast<std::size_t>(origin)] = 0;
    q.push(origin);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (std::size_t id : net.out_edges(u)) {
        const auto v = static_cast<std::size_t>(edges[id].to);
        if (tight[id] && hops[v] == kUnreached) {
          hops[v] = hops[static_cast<std::size_t>(u)] + 1;
          q.push(edges[id].to);
        }
      }
    }
  }

  auto key = [&](int v) {
    const auto i = static_cast<std::size_t>(v);
    return std::make_tuple(group[i], hops[i], v);
  };
  std::vector<int> order;
  for (int v = 1; v <= net.node_count(); ++v) {
    if (hops[static_cast<std::size_t>(v)] != kUnreached) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

  std::vector<char> kept(edges.size(), 0);
  for (const Edge& e : edges) {
    if (tight[e.id] && hops[static_cast<std::size_t>(e.from)] != kUnreached && key(e.from) < key(e.to)) {
      kept[e.id] = 1;
    }
  }

  TightDag dag;
  dag.origin = origin;
  dag.dest = dest;
  dag.path_count_from.assign(n, 0.0);
  dag.path_count_to.assign(n, 0.0);
  dag.path_count_from[static_cast<std::size_t>(origin)] = 1.0;
  for (int u : order) {
    const double cu = dag.path_count_from[static_cast<std::size_t>(u)];
    if (cu == 0.0) continue;
    for (std::size_t id : net.out_edges(u)) {
      if (kept[id]) dag.path_count_from[static_cast<std::size_t>(edges[id].to)] += cu;
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    double c = (u == dest) ? 1.0 : 0.0;
    for (std::size_t id : net.out_edges(u)) {
      if (kept[id]) c += dag.path_count_to[static_cast<std::size_t>(edges[id].to)];
    }
    dag.path_count_to[static_cast<std::size_t>(u)] = c;
  }
  for (const Edge& e : edges) {
    if (kept[e.id] && dag.path_count_from[static_cast<std::size_t>(e.from)] > 0.0 &&
        dag.path_count_to[static_cast<std::size_t>(e.to)] > 0.0) {
      dag.tight_edges.push_back(e.id);
    }
  }
  dag.dist = std::move(dist);
  if (!(dag.total_paths() > 0.0)) throw NoPathError(origin, dest);
  return dag;
}

TightDag shortest_path_dag(const Network& net, std::span<const double> weights, int origin, int dest,
                           TieTolerance tol) {
  auto dist = shortest_distances(net, weights, origin);
  return tight_dag_from_distances(net, weights, std::move(dist), origin, dest, tol);
}

double TightDag::edge_share(const Network& net, std::size_t edge_id) const {
  if (!std::binary_search(tight_edges.begin(), tight_edges.end(), edge_id)) return 0.0;
  const Edge& e = net.edge(edge_id);
  return path_count_from[static_cast<std::size_t>(e.from)] * path_count_to[static_cast<std::size_t>(e.to)] /
         total_paths();
}

}  // namespace congsig
