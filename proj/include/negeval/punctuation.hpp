#ifndef NEGEVAL_PUNCTUATION_HPP
#define NEGEVAL_PUNCTUATION_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace negeval {

/// Decides which tokens count as punctuation.
///
/// With a POS tag, a token is punctuation iff the tag is in `tags`.
/// Without one (BioScope, SFU), iff every code point of the surface is in a
/// Unicode punctuation category (Pc, Pd, Ps, Pe, Pi, Pf, Po).
struct PunctuationPolicy {
  std::set<std::string> tags = default_tags();

  static std::set<std::string> default_tags();

  bool is_punct(std::string_view surface, const std::optional<std::string>& pos) const;
};

/// True iff `text` is non-empty valid UTF-8 made only of punctuation code points.
bool is_unicode_punctuation(std::string_view text);

}  // namespace negeval

#endif  // NEGEVAL_PUNCTUATION_HPP
