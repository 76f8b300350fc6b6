#pragma once

// Property checkers over tabulated orientations.

#include <optional>
#include <string>
#include <vector>

#include "usolab/uso.hpp"

namespace usolab {

/// Evidence attached to a failed check.
struct Witness {
  enum class Kind { Subcube, Vertices, Path, Assignment };
  Kind kind = Kind::Vertices;
  std::optional<Subcube> face;
  std::vector<Vertex> vertices;
  /// Free-form detail, e.g. which reversal the witness refers to.
  std::string detail;
};

struct VerifyReport {
  std::string property;
  bool pass = false;
  std::optional<Witness> witness;
  /// Distinct vertices whose outmap the checker read.
  std::uint64_t evaluations = 0;

  std::string to_json() const;
};

/// Every nonempty subcube has exactly one sink. Witness: the lexicographically
/// first face with a different sink count, and its sinks.
VerifyReport is_uso(const UsoTable& t);

/// For every split [n] = A ∪ B, bits on A and signs on B, exactly one vertex
/// matches. Witness: the pattern (as a face whose free part is B) and the
/// matching vertices.
VerifyReport unique_completion_holds(const UsoTable& t);

/// At least n internally vertex-disjoint directed source-sink paths. Throws
/// DependencyError unless the table is a USO. Witness on failure: a vertex
/// cut separating source from sink.
VerifyReport holt_klee(const UsoTable& t);

/// Maximum number of internally vertex-disjoint directed paths from source to
/// sink, with the paths themselves.
std::vector<std::vector<Vertex>> disjoint_paths(const UsoTable& t, const Vertex& from, const Vertex& to);

/// Every 2-face whose 00-corner is its source is uniformly oriented.
VerifyReport is_two_up_uniform(const UsoTable& t);
/// 2-up-uniform, and so is the table with every edge reversed.
VerifyReport is_two_uniform(const UsoTable& t);
/// Every face spanned by the outgoing edges at an all-zero corner is uniform.
VerifyReport is_locally_up_uniform(const UsoTable& t);

/// ℓ(v) = |{i : v_i = 0 and Φ(v)_i = '-'}|.
int level(const Outmap& o, const Vertex& v);
int level(const Orientation& o, const Vertex& v);
/// L(v) = |{i : v_i = 1 and Φ(v)_i = '-'}|.
int upper_minus_count(const Outmap& o, const Vertex& v);

/// |N_1(v)| + Σ_{j ∈ N_0(v)} r(j), where coordinates are cyclically relabeled
/// by r(j) = ((j - k) mod n) + 1 so that k becomes 1.
int potential(const Outmap& o, const Vertex& v, int k);

/// A directed path of length hamming(v, sink) from v to the global sink exists.
bool monotone_path_exists(const UsoTable& t, const Vertex& v);

/// Longest directed simple path, by exhaustive search. Capped at n <= 4.
inline constexpr int kLongestPathLimit = 4;
std::vector<Vertex> longest_directed_path(const UsoTable& t);
int longest_path_exact(const UsoTable& t);
/// Report form: passes iff the longest directed path has length <= 2n.
VerifyReport longest_path_within_2n(const UsoTable& t);

/// Table with every edge reversed.
UsoTable reversed(const UsoTable& t);

/// Runs a check by its command-line name: uso, unique-completion, holt-klee,
/// 2uu, 2u, local-uu, longest-path.
VerifyReport run_check(const std::string& name, const UsoTable& t);
const std::vector<std::string>& check_names();

}  // namespace usolab
