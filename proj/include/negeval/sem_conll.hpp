#ifndef NEGEVAL_SEM_CONLL_HPP
#define NEGEVAL_SEM_CONLL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "negeval/model.hpp"
#include "negeval/punctuation.hpp"

namespace negeval {

/// One token line of the *SEM 2012 negation format:
/// doc_id, sent_no, token_no, surface, lemma, pos, syntax, then either the
/// single cell "***" or three cells (cue, scope, event) per instance.
struct SemConllRecord {
  std::string doc_id;
  std::size_t sent_no = 0;
  std::size_t token_no = 0;
  std::string surface;
  std::string lemma;
  std::string pos;
  std::string syntax;
  std::vector<std::string> negation;

  bool negation_free() const { return negation.size() == 1 && negation[0] == "***"; }
  std::size_t instance_count() const { return negation_free() ? 0 : negation.size() / 3; }

  /// Splits on tabs, or on whitespace runs when the line has no tab.
  static SemConllRecord parse(std::string_view line, const std::string& source,
                              std::size_t line_no);
};

Corpus parse_sem_conll(std::istream& in, const std::string& source,
                       const PunctuationPolicy& punct = {});
Corpus read_sem_conll(const std::string& path, const PunctuationPolicy& punct = {});

/// Tab-separated, "_" for empty cells, "***" for negation-free sentences and
/// a blank line after every sentence.
void write_sem_conll(const Corpus& corpus, std::ostream& out);
std::string write_sem_conll(const Corpus& corpus);

/// Single annotation cell <-> element of `token`. A cell equal to the surface
/// is the whole token; a strict substring is located as prefix, then suffix,
/// then first occurrence. Throws ParseError when it is not part of the surface.
AnnotationElement parse_annotation_cell(const std::string& cell, const Token& token,
                                        const std::string& source, std::size_t line_no,
                                        const char* role);
/// "_" when `set` has no element on `token`.
std::string annotation_cell(const ElementSet& set, const Token& token);

}  // namespace negeval

#endif  // NEGEVAL_SEM_CONLL_HPP
