#ifndef NEGEVAL_MODEL_HPP
#define NEGEVAL_MODEL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negeval {

struct Token {
  std::size_t index = 0;
  std::string surface;
  std::optional<std::string> lemma;
  std::optional<std::string> pos;
  // Opaque syntax column of the CoNLL format, carried through unchanged.
  std::optional<std::string> syntax;
  bool is_punct = false;

  friend bool operator==(const Token&, const Token&) = default;
};

/// One cue/scope/event constituent: a whole token, or a character range of
/// it (affix cues such as "im" in "imprecise").
///
/// Equality is (token index, subspan text). A range that covers the whole
/// surface is normalised to a whole-token element on construction, so both
/// spellings compare equal.
class AnnotationElement {
 public:
  AnnotationElement() = default;
  explicit AnnotationElement(std::size_t token) : token_(token) {}

  /// Element for the half-open byte range [begin, end) of `surface`.
  /// Throws std::invalid_argument unless 0 <= begin < end <= surface.size().
  static AnnotationElement part(std::size_t token, std::string_view surface,
                                std::size_t begin, std::size_t end);

  std::size_t token() const { return token_; }
  bool is_whole_token() const { return text_.empty(); }
  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }
  /// Subspan text; empty for whole-token elements.
  const std::string& text() const { return text_; }

  /// The same element with its subspan dropped.
  AnnotationElement whole() const { return AnnotationElement(token_); }

  friend bool operator==(const AnnotationElement& a, const AnnotationElement& b) {
    return a.token_ == b.token_ && a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const AnnotationElement& a,
                                          const AnnotationElement& b) {
    if (auto c = a.token_ <=> b.token_; c != 0) return c;
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::size_t token_ = 0;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  std::string text_;
};

/// Sorted set of annotation elements backed by a vector.
class ElementSet {
 public:
  using const_iterator = std::vector<AnnotationElement>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> tokens);
  explicit ElementSet(std::vector<AnnotationElement> elements);

  static ElementSet from_tokens(const std::vector<std::size_t>& tokens);

  /// Returns false if an equal element was already present.
  bool insert(const AnnotationElement& e);
  bool erase(const AnnotationElement& e);
  bool contains(const AnnotationElement& e) const;
  bool contains_token(std::size_t token) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const AnnotationElement& front() const { return items_.front(); }
  const AnnotationElement& back() const { return items_.back(); }
  const std::vector<AnnotationElement>& elements() const { return items_; }

  std::size_t intersection_size(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const { return intersection_size(other) > 0; }
  bool is_subset_of(const ElementSet& other) const;
  ElementSet united(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;

  /// Distinct token indices, ascending.
  std::vector<std::size_t> tokens() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<AnnotationElement> items_;
};

struct NegationInstance {
  ElementSet cue;
  ElementSet scope;
  ElementSet event;  // empty when no event is annotated
  std::size_t instance_id = 0;

  friend bool operator==(const NegationInstance&, const NegationInstance&) = default;
};

/// Cue and scope equality, ignoring events and ids.
bool same_cue_and_scope(const NegationInstance& a, const NegationInstance& b);

struct Sentence {
  std::string doc_id;
  std::size_t sent_index = 0;
  std::vector<Token> tokens;
  std::vector<NegationInstance> instances;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  std::string name;
  std::vector<Sentence> sentences;

  std::size_t instance_count() const;
};

/// Structural equality: same sentences, tokens and instances (name ignored).
bool structurally_equal(const Corpus& a, const Corpus& b);

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string code;
  std::string doc_id;
  std::size_t sent_index = 0;
  std::optional<std::size_t> instance_id;
  std::string message;

  /// "warning[code] doc:sent#inst: message"
  std::string to_string() const;
};

std::vector<Diagnostic> validate(const Corpus& corpus);

/// Removes punctuation tokens from every cue/scope/event set. Tokens stay in
/// place; instances left without a cue are dropped and reported through
/// `diagnostics` when it is non-null.
Corpus strip_punctuation(const Corpus& corpus,
                         std::vector<Diagnostic>* diagnostics = nullptr);

}  // namespace negeval

#endif  // NEGEVAL_MODEL_HPP
