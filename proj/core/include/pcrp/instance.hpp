#ifndef PCRP_INSTANCE_HPP
#define PCRP_INSTANCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pcrp/dag.hpp"
#include "pcrp/paths.hpp"

namespace pcrp {

/// Required pair ⟨a, b⟩, a ≠ b. Oriented at load when the endpoints are
/// comparable: a reaches b.
struct RequiredPair {
    Vertex a = 0;
    Vertex b = 0;

    bool operator==(const RequiredPair&) const = default;
    auto operator<=>(const RequiredPair&) const = default;
};

/// A DAG plus its required pairs, with the closure and topological order
/// cached. Immutable after construction.
class PcrpInstance {
public:
    /// Validates the st-connectivity invariant and the pairs (ids in range,
    /// no self-pairs), orients coverable pairs, merges duplicates (unordered)
    /// with a warning. Uncoverable pairs are kept; solvers decide.
    static PcrpInstance make(Dag dag, std::vector<RequiredPair> pairs);

    /// Reuses already-computed caches. The caches must belong to `dag`.
    static PcrpInstance make_with_caches(Dag dag, std::vector<RequiredPair> pairs,
                                         ReachabilityIndex reach);

    const Dag& dag() const { return dag_; }
    const std::vector<RequiredPair>& pairs() const { return pairs_; }
    const ReachabilityIndex& reach() const { return reach_; }
    const TopoOrder& topo() const { return dag_.topo(); }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    PcrpInstance(Dag dag, std::vector<RequiredPair> pairs, ReachabilityIndex reach,
                 std::vector<std::string> warnings)
        : dag_(std::move(dag)),
          pairs_(std::move(pairs)),
          reach_(std::move(reach)),
          warnings_(std::move(warnings)) {}

    Dag dag_;
    std::vector<RequiredPair> pairs_;
    ReachabilityIndex reach_;
    std::vector<std::string> warnings_;
};

/// True iff one st-path can contain both endpoints.
inline bool coverable(const RequiredPair& p, const ReachabilityIndex& reach) {
    return reach.comparable(p.a, p.b);
}

/// Line-oriented text format:
///   pcrp 1
///   n <vertex_count> s <source> t <sink>
///   a <u> <v>      (one per arc)
///   p <x> <y>      (one per required pair)
/// '#' starts a comment line. Throws ParseError (with line number) or
/// ValidationError.
PcrpInstance parse_instance(std::string_view text);
std::string write_instance(const PcrpInstance& inst);

PcrpInstance read_instance_file(const std::string& path);

/// Raw fields of an instance file, before any graph validation. cmd_solve
/// uses this to collapse cyclic inputs first.
struct RawInstance {
    Digraph digraph;
    std::vector<RequiredPair> pairs;
};
RawInstance parse_raw_instance(std::string_view text);

/// Adds ⟨source, v⟩ for every vertex (except source and sink) that belongs to
/// no pair. Idempotent; original pairs keep their positions.
PcrpInstance augment_trivial_pairs(const PcrpInstance& inst);

enum class VerifyMode { cover_all, pairs_only };

struct VerifyReport {
    std::vector<Vertex> uncovered_vertices;  // cover_all mode only
    std::vector<RequiredPair> uncovered_pairs;

    bool valid() const { return uncovered_vertices.empty() && uncovered_pairs.empty(); }
};

/// Checks each path against the StPath invariants (MalformedPath on
/// violation), then reports what the set of paths fails to cover.
VerifyReport verify_solution(const PcrpInstance& inst, std::span<const StPath> paths,
                             VerifyMode mode);

}  // namespace pcrp

#endif
