#ifndef NEGEVAL_DATATOOLS_HPP
#define NEGEVAL_DATATOOLS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negeval/model.hpp"

namespace negeval {

// ---- splits ---------------------------------------------------------------

enum class SplitName { Train, Dev, Test };

std::string to_string(SplitName name);
SplitName split_name_from_string(const std::string& s);

struct SplitSpec {
  std::array<unsigned, 3> ratios{80, 10, 10};  // train, dev, test; sum to 100
  std::uint64_t seed = 0;
  /// doc_id -> split. When present it replaces hashing and must name every
  /// document of the corpus and nothing else.
  std::optional<std::map<std::string, SplitName>> assignments;

  /// "80/10/10" or "80,10,10". Throws UsageError unless three integers summing to 100.
  static std::array<unsigned, 3> parse_ratios(const std::string& text);
};

/// Assignment TSV: "doc_id<TAB>train|dev|test" per line, '#' comments.
std::map<std::string, SplitName> parse_assignments(std::istream& in, const std::string& source);
void write_assignments(const std::map<std::string, SplitName>& assignments, std::ostream& out);

struct CorpusSplit {
  Corpus train;
  Corpus dev;
  Corpus test;
  std::map<std::string, SplitName> assignments;

  const Corpus& part(SplitName name) const;
};

/// FNV-1a over the little-endian seed bytes followed by the doc_id bytes.
std::uint64_t split_hash(std::uint64_t seed, const std::string& doc_id);

/// Whole documents go to one split. Documents are visited in order of
/// split_hash and each goes to the split furthest below its sentence target
/// (ties: train, dev, test). Sentences keep their corpus order inside a split.
CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec);

// ---- statistics -----------------------------------------------------------

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t negation_sentences = 0;
  std::size_t instances = 0;
  std::map<std::size_t, std::size_t> scope_lengths;  // |scope| -> instances

  double negation_sentence_ratio() const;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

/// Counts after punctuation stripping unless `strip_punct` is false.
CorpusStats corpus_stats(const Corpus& corpus, bool strip_punct = true);

/// "key<TAB>value" lines: sentences, negation_sentences,
/// negation_sentence_percent, instances, then scope_length.<n> rows.
std::string stats_to_tsv(const CorpusStats& stats, int decimals = 1);

// ---- re-annotation patches ------------------------------------------------

struct PatchTarget {
  std::string doc_id;
  std::size_t sent_index = 0;
  std::size_t instance_id = 0;

  friend auto operator<=>(const PatchTarget&, const PatchTarget&) = default;
  std::string to_string() const;  // "doc:sent#inst"
};

/// Replaces one instance by zero or more instances. `surfaces` are the
/// sentence tokens the patch was written against; they are checked on apply.
struct ReannotationPatch {
  PatchTarget target;
  std::vector<std::string> surfaces;
  std::vector<NegationInstance> replacement;

  friend bool operator==(const ReannotationPatch&, const ReannotationPatch&) = default;
};

/// Block format, blocks separated by blank lines, '#' lines outside blocks
/// are comments:
///
///   @ <doc_id> <sent_index> <instance_id>
///   <token_no><TAB><surface>[<TAB><cue><TAB><scope><TAB><event>]...
///
/// one row per token, one cell triple per replacement instance (cells as in
/// the CoNLL negation columns). Rows without cells delete the instance.
std::vector<ReannotationPatch> parse_patches(std::istream& in, const std::string& source);
void write_patches(const std::vector<ReannotationPatch>& patches, std::ostream& out);

/// Replaces every targeted instance (addressed by its original id) and
/// renumbers instance ids per touched sentence. Throws PatchError for a
/// missing target, a repeated target or a token mismatch.
Corpus apply_patches(const Corpus& corpus, const std::vector<ReannotationPatch>& patches);

/// Draft patches for instances whose cue is discontinuous and consists only
/// of lexicon words (case-insensitive): one instance per cue element, each
/// with the original scope and event. Meant for manual review.
std::vector<ReannotationPatch> detect_coordination_cues(
    const Corpus& corpus, const std::set<std::string>& lexicon = {"neither", "nor"});

}  // namespace negeval

#endif  // NEGEVAL_DATATOOLS_HPP
