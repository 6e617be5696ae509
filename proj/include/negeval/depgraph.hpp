#ifndef NEGEVAL_DEPGRAPH_HPP
#define NEGEVAL_DEPGRAPH_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "negeval/model.hpp"
#include "negeval/punctuation.hpp"

namespace negeval {

enum class EdgeLabel { Cue, Scope, Event, MultiwordCue };

std::string to_string(EdgeLabel label);  // CUE, S, E, MWC
EdgeLabel edge_label_from_string(const std::string& s);

/// Node 0 is the artificial root; token i is node i + 1.
inline constexpr std::size_t kRootNode = 0;
inline constexpr std::size_t node_of(std::size_t token) { return token + 1; }

struct DepEdge {
  std::size_t head = 0;
  std::size_t dependent = 0;
  EdgeLabel label = EdgeLabel::Scope;

  friend auto operator<=>(const DepEdge&, const DepEdge&) = default;
};

/// Negation annotations of one sentence as a labeled dependency graph.
/// Edges are kept sorted and free of duplicates.
struct NegDepGraph {
  std::size_t token_count = 0;
  std::vector<DepEdge> edges;

  void add(std::size_t head, std::size_t dependent, EdgeLabel label);
  std::size_t count(EdgeLabel label) const;
  /// (head, label) pairs of the given token's node, ascending.
  std::vector<DepEdge> incoming(std::size_t node) const;
  /// CUE-edge invariants, S/E heads carry a CUE edge, nodes in range.
  void check() const;

  friend bool operator==(const NegDepGraph&, const NegDepGraph&) = default;
};

/// DIRECT: scope/event tokens attach to every cue they belong to.
/// NESTED: an instance B is nested in A when cue(B) ∪ scope(B) ⊆ scope(A);
/// A then links once to B's representative and tokens attach only to the
/// innermost instance containing them.
enum class EncodingKind { Direct, Nested };

std::string to_string(EncodingKind kind);
EncodingKind encoding_kind_from_string(const std::string& s);

/// Representative of an instance is its first cue token (root CUE edge);
/// further cue tokens hang off it with MWC. Sub-token elements are promoted
/// to their token (lossy, reported). Two instances sharing a representative
/// throw GraphError. Overlapping, non-nested instances under NESTED are
/// attached directly and reported.
NegDepGraph encode(const Sentence& sentence, EncodingKind kind,
                   std::vector<Diagnostic>* diagnostics = nullptr);

/// Inverse of encode. Instances come out ordered by representative with
/// instance ids 0..n-1. Throws GraphError for S/E edges from a non-cue head
/// and for cyclic nesting.
std::vector<NegationInstance> decode(const NegDepGraph& graph, EncodingKind kind);

/// Text serialization: per sentence "# doc_id = ..." and "# sent_index = ..."
/// comment lines, then one row per token "index<TAB>surface<TAB>heads" with
/// 1-based index and heads as "head:LABEL" joined by '|' ("_" if none;
/// root is 0), then a blank line.
void write_dep_graphs(const Corpus& corpus, EncodingKind kind, std::ostream& out,
                      std::vector<Diagnostic>* diagnostics = nullptr);

/// Reads the serialization back into a corpus (tokens carry surfaces only).
Corpus read_dep_graphs(std::istream& in, const std::string& source, EncodingKind kind,
                       const PunctuationPolicy& punct = {});

}  // namespace negeval

#endif  // NEGEVAL_DEPGRAPH_HPP
