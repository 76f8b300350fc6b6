#include "usolab/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "json.hpp"
#include "usolab/errors.hpp"

namespace usolab {

namespace {

VerifyReport passed(std::string property, std::uint64_t evaluations) {
  VerifyReport r;
  r.property = std::move(property);
  r.pass = true;
  r.evaluations = evaluations;
  return r;
}

VerifyReport failed(std::string property, Witness w, std::uint64_t evaluations) {
  VerifyReport r;
  r.property = std::move(property);
  r.pass = false;
  r.witness = std::move(w);
  r.evaluations = evaluations;
  return r;
}

const char* kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Subcube: return "subcube";
    case Witness::Kind::Vertices: return "vertices";
    case Witness::Kind::Path: return "path";
    case Witness::Kind::Assignment: return "assignment";
  }
  return "unknown";
}

}  // namespace

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["property"] = property;
  doc["verdict"] = pass ? "pass" : "fail";
  if (witness) {
    nlohmann::ordered_json w;
    w["kind"] = kind_name(witness->kind);
    if (witness->face) w["face"] = witness->face->to_string();
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : witness->vertices) vs.push_back(v.to_string());
    w["vertices"] = std::move(vs);
    if (!witness->detail.empty()) w["detail"] = witness->detail;
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  doc["evaluations"] = evaluations;
  return doc.dump();
}

// ------------------------------------------------------------- unique sink

VerifyReport is_uso(const UsoTable& t) {
  const int n = t.dimension();
  const std::uint64_t all = full_mask(n);
  const std::uint64_t count = t.size();
  std::vector<std::uint32_t> sinks(count);
  for (std::uint64_t free = 0; free <= all; ++free) {
    std::fill(sinks.begin(), sinks.end(), 0);
    for (std::uint64_t v = 0; v < count; ++v)
      if ((t.at(v).minus_mask() & free) == 0) ++sinks[v & ~free];
    std::optional<std::uint64_t> bad;
    for_each_submask(all & ~free, [&](std::uint64_t base) {
      if (sinks[base] != 1 && (!bad || base < *bad)) bad = base;
    });
    if (bad) {
      Witness w;
      w.kind = Witness::Kind::Subcube;
      w.face = Subcube(Vertex(n, *bad), CoordSet::from_mask(n, free));
      for (const Vertex& v : w.face->vertices())
        if ((t.at(v.bits()).minus_mask() & free) == 0) w.vertices.push_back(v);
      w.detail = std::to_string(sinks[*bad]) + " sinks";
      return failed("uso", std::move(w), count);
    }
    if (free == all) break;
  }
  return passed("uso", count);
}

VerifyReport unique_completion_holds(const UsoTable& t) {
  const int n = t.dimension();
  const std::uint64_t all = full_mask(n);
  const std::uint64_t count = t.size();
  std::vector<std::uint32_t> hits(count);
  // A = coordinates with prescribed bits, B = the rest with prescribed signs.
  for (std::uint64_t a = 0; a <= all; ++a) {
    const std::uint64_t b = all & ~a;
    std::fill(hits.begin(), hits.end(), 0);
    for (std::uint64_t v = 0; v < count; ++v) ++hits[(v & a) | (t.at(v).minus_mask() & b)];
    for (std::uint64_t key = 0; key < count; ++key) {
      if (hits[key] == 1) continue;
      Witness w;
      w.kind = Witness::Kind::Assignment;
      w.face = Subcube(Vertex(n, key & a), CoordSet::from_mask(n, b));
      std::string signs(n, '*');
      for (int i = 0; i < n; ++i)
        if ((b >> i) & 1u) signs[i] = ((key >> i) & 1u) ? '-' : '+';
      w.detail = "bits " + w.face->to_string() + " signs " + signs + ": " + std::to_string(hits[key]) +
                 " matching vertices";
      for (std::uint64_t v = 0; v < count; ++v)
        if (((v & a) | (t.at(v).minus_mask() & b)) == key) w.vertices.emplace_back(n, v);
      return failed("unique-completion", std::move(w), count);
    }
    if (a == all) break;
  }
  return passed("unique-completion", count);
}

// --------------------------------------------------------------- Holt-Klee

namespace {

// Unit-capacity network on split vertices: in(v) = 2v, out(v) = 2v+1.
class SplitNetwork {
public:
  explicit SplitNetwork(std::size_t nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, int cap) {
    to_.push_back(to); cap_.push_back(cap); next_.push_back(head_[from]); head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from); cap_.push_back(0); next_.push_back(head_[to]); head_[to] = static_cast<int>(to_.size()) - 1;
  }

  // One BFS augmentation; false if the sink is unreachable.
  bool augment(int s, int t) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const int x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e != -1; e = next_[e]) {
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          via[to_[e]] = e;
          queue.push_back(to_[e]);
        }
      }
    }
    if (!seen[t]) return false;
    for (int x = t; x != s; x = to_[via[x] ^ 1]) {
      --cap_[via[x]];
      ++cap_[via[x] ^ 1];
    }
    return true;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e != -1; e = next_[e])
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          queue.push_back(to_[e]);
        }
    }
    return seen;
  }

  // Forward edges (even index) that carry flow.
  std::vector<int> flow_targets(int x) const {
    std::vector<int> out;
    for (int e = head_[x]; e != -1; e = next_[e])
      if ((e % 2) == 0 && cap_[e ^ 1] > 0) out.push_back(to_[e]);
    return out;
  }

private:
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

struct FlowResult {
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> cut;
};

FlowResult max_disjoint_paths(const UsoTable& t, const Vertex& from, const Vertex& to, int wanted) {
  const int n = t.dimension();
  const std::uint64_t count = t.size();
  SplitNetwork net(2 * count);
  const auto in = [](std::uint64_t v) { return static_cast<int>(2 * v); };
  const auto out = [](std::uint64_t v) { return static_cast<int>(2 * v + 1); };
  const int big = n + 1;
  for (std::uint64_t v = 0; v < count; ++v) {
    const bool terminal = v == from.bits() || v == to.bits();
    net.add_edge(in(v), out(v), terminal ? big : 1);
    for (std::uint64_t m = t.at(v).minus_mask(); m; m &= m - 1) {
      const std::uint64_t u = v ^ (m & -m);
      // Only vertex capacities bind, so a minimum cut is a vertex cut.
      const bool direct = v == from.bits() && u == to.bits();
      net.add_edge(out(v), in(u), direct ? 1 : big);
    }
  }
  const int s = out(from.bits());
  const int sink = in(to.bits());
  int flow = 0;
  while (flow < wanted && net.augment(s, sink)) ++flow;

  FlowResult r;
  // Peel paths off the flow; each unit leaves out(from) on its own edge and
  // every interior vertex carries at most one unit.
  std::vector<std::vector<int>> used_targets(2 * count);
  std::vector<std::size_t> cursor(2 * count, 0);
  for (std::size_t x = 0; x < 2 * count; ++x) used_targets[x] = net.flow_targets(static_cast<int>(x));
  for (int p = 0; p < flow; ++p) {
    std::vector<Vertex> path{from};
    int x = s;
    while (x != sink) {
      const int y = used_targets[x][cursor[x]++];
      if (y % 2 == 0 && y != sink) {
        path.emplace_back(n, static_cast<std::uint64_t>(y / 2));
        x = y + 1;  // through in(v) -> out(v)
        ++cursor[y];
      } else {
        x = y;
      }
    }
    path.push_back(to);
    r.paths.push_back(std::move(path));
  }
  if (flow < wanted) {
    const auto seen = net.reachable(s);
    for (std::uint64_t v = 0; v < count; ++v)
      if (seen[in(v)] && !seen[out(v)]) r.cut.emplace_back(n, v);
  }
  return r;
}

}  // namespace

std::vector<std::vector<Vertex>> disjoint_paths(const UsoTable& t, const Vertex& from, const Vertex& to) {
  return max_disjoint_paths(t, from, to, std::max(1, t.dimension())).paths;
}

VerifyReport holt_klee(const UsoTable& t) {
  if (!is_uso(t).pass) throw DependencyError("holt-klee requires a unique-sink orientation");
  const int n = t.dimension();
  const Vertex source = t.source();
  const Vertex sink = t.sink();
  if (n == 0) return passed("holt-klee", t.size());
  FlowResult r = max_disjoint_paths(t, source, sink, n);
  if (static_cast<int>(r.paths.size()) >= n) return passed("holt-klee", t.size());
  Witness w;
  w.kind = Witness::Kind::Vertices;
  w.vertices = std::move(r.cut);
  w.detail = "only " + std::to_string(r.paths.size()) +
             " disjoint source-sink paths; listed vertices form a separating cut";
  return failed("holt-klee", std::move(w), t.size());
}

// -------------------------------------------------------------- uniformity

namespace {

std::optional<Subcube> first_non_uniform_2face(const UsoTable& t) {
  const int n = t.dimension();
  for (std::uint64_t u = 0; u < t.size(); ++u) {
    // Coordinates where u has a 0 and an outgoing edge.
    const std::uint64_t up = t.at(u).minus_mask() & ~u & full_mask(n);
    for (std::uint64_t mi = up; mi; mi &= mi - 1) {
      const std::uint64_t bi = mi & -mi;
      for (std::uint64_t mj = mi & (mi - 1); mj; mj &= mj - 1) {
        const std::uint64_t bj = mj & -mj;
        const bool ok = (t.at(u ^ bi).minus_mask() & bj) && (t.at(u ^ bj).minus_mask() & bi);
        if (!ok) return Subcube(Vertex(n, u), CoordSet::from_mask(n, bi | bj));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

UsoTable reversed(const UsoTable& t) {
  std::vector<Outmap> rows;
  rows.reserve(t.size());
  for (const auto& o : t.rows()) rows.emplace_back(t.dimension(), ~o.minus_mask() & full_mask(t.dimension()));
  return UsoTable(t.dimension(), std::move(rows));
}

VerifyReport is_two_up_uniform(const UsoTable& t) {
  if (auto face = first_non_uniform_2face(t)) {
    Witness w;
    w.kind = Witness::Kind::Subcube;
    w.face = face;
    w.vertices = face->vertices();
    w.detail = "2-face with source at its 00-corner is not uniform";
    return failed("2uu", std::move(w), t.size());
  }
  return passed("2uu", t.size());
}

VerifyReport is_two_uniform(const UsoTable& t) {
  VerifyReport up = is_two_up_uniform(t);
  if (!up.pass) {
    up.property = "2u";
    return up;
  }
  VerifyReport down = is_two_up_uniform(reversed(t));
  down.property = "2u";
  if (!down.pass) down.witness->detail = "in the fully reversed orientation: " + down.witness->detail;
  return down;
}

VerifyReport is_locally_up_uniform(const UsoTable& t) {
  const int n = t.dimension();
  for (std::uint64_t u = 0; u < t.size(); ++u) {
    const std::uint64_t j = t.at(u).minus_mask() & ~u & full_mask(n);
    if (std::popcount(j) < 2) continue;
    std::optional<std::uint64_t> offender;
    for_each_submask(j, [&](std::uint64_t sub) {
      const std::uint64_t w = u | sub;
      if ((t.at(w).minus_mask() & j) != (~w & j) && !offender) offender = w;
    });
    if (offender) {
      Witness w;
      w.kind = Witness::Kind::Subcube;
      w.face = Subcube(Vertex(n, u), CoordSet::from_mask(n, j));
      w.vertices = {Vertex(n, u), Vertex(n, *offender)};
      w.detail = "face spanned by the outgoing edges at its all-zero corner is not uniform";
      return failed("local-uu", std::move(w), t.size());
    }
  }
  return passed("local-uu", t.size());
}

// ---------------------------------------------------- levels and potential

int level(const Outmap& o, const Vertex& v) {
  return std::popcount(o.minus_mask() & ~v.bits() & full_mask(v.dimension()));
}

int level(const Orientation& o, const Vertex& v) { return level(o.evaluate(v), v); }

int upper_minus_count(const Outmap& o, const Vertex& v) {
  return std::popcount(o.minus_mask() & v.bits());
}

int potential(const Outmap& o, const Vertex& v, int k) {
  const int n = v.dimension();
  if (k < 1 || k > n) throw RangeError("potential anchor coordinate out of range");
  int p = 0;
  for (int j = 1; j <= n; ++j) {
    if (!o.outgoing(j)) continue;
    if (v.bit(j) == 1)
      p += 1;
    else
      p += ((j - k) % n + n) % n + 1;
  }
  return p;
}

// ------------------------------------------------------------------- paths

bool monotone_path_exists(const UsoTable& t, const Vertex& v) {
  const Vertex sink = t.sink();
  std::vector<char> seen(t.size(), 0);
  std::vector<std::uint64_t> stack{v.bits()};
  seen[v.bits()] = 1;
  while (!stack.empty()) {
    const std::uint64_t w = stack.back();
    stack.pop_back();
    if (w == sink.bits()) return true;
    // Only edges that fix a coordinate still differing from the sink.
    for (std::uint64_t m = t.at(w).minus_mask() & (w ^ sink.bits()); m; m &= m - 1) {
      const std::uint64_t u = w ^ (m & -m);
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

std::vector<Vertex> longest_directed_path(const UsoTable& t) {
  const int n = t.dimension();
  if (n > kLongestPathLimit)
    throw CapabilityError("exhaustive longest-path search is limited to n <= " +
                          std::to_string(kLongestPathLimit));
  std::vector<std::uint64_t> best, current;
  std::uint64_t visited = 0;  // up to 16 vertices
  std::function<void(std::uint64_t)> dfs = [&](std::uint64_t v) {
    current.push_back(v);
    visited |= std::uint64_t{1} << v;
    if (current.size() > best.size()) best = current;
    for (std::uint64_t m = t.at(v).minus_mask(); m; m &= m - 1) {
      const std::uint64_t u = v ^ (m & -m);
      if (!((visited >> u) & 1u)) dfs(u);
    }
    visited &= ~(std::uint64_t{1} << v);
    current.pop_back();
  };
  for (std::uint64_t v = 0; v < t.size(); ++v) dfs(v);
  std::vector<Vertex> out;
  for (std::uint64_t v : best) out.emplace_back(n, v);
  return out;
}

int longest_path_exact(const UsoTable& t) {
  return static_cast<int>(longest_directed_path(t).size()) - 1;
}

VerifyReport longest_path_within_2n(const UsoTable& t) {
  auto path = longest_directed_path(t);
  const int length = static_cast<int>(path.size()) - 1;
  if (length <= 2 * t.dimension()) return passed("longest-path", t.size());
  Witness w;
  w.kind = Witness::Kind::Path;
  w.vertices = std::move(path);
  w.detail = "directed path of length " + std::to_string(length) + " exceeds 2n";
  return failed("longest-path", std::move(w), t.size());
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"uso", "unique-completion", "holt-klee", "2uu",
                                              "2u",  "local-uu",          "longest-path"};
  return names;
}

VerifyReport run_check(const std::string& name, const UsoTable& t) {
  if (name == "uso") return is_uso(t);
  if (name == "unique-completion") return unique_completion_holds(t);
  if (name == "holt-klee") return holt_klee(t);
  if (name == "2uu") return is_two_up_uniform(t);
  if (name == "2u") return is_two_uniform(t);
  if (name == "local-uu") return is_locally_up_uniform(t);
  if (name == "longest-path") return longest_path_within_2n(t);
  throw RangeError("unknown check \"" + name + "\"");
}

}  // namespace usolab
