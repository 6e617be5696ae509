#ifndef NEGEVAL_XML_CORPORA_HPP
#define NEGEVAL_XML_CORPORA_HPP

#include <iosfwd>
#include <string>

#include "negeval/model.hpp"
#include "negeval/punctuation.hpp"
#include "negeval/tokenizer.hpp"

namespace negeval {

struct BioScopeOptions {
  /// BioScope puts the cue inside its scope. When set, cue tokens are
  /// removed from the scope so instances follow the CD convention.
  bool remove_cue_from_scope = false;
  PunctuationPolicy punct;
};

/// BioScope XML (<Document>/<DocID>/<sentence> with nested <xcope id> and
/// <cue type ref> markup). Only negation cues are kept. Sentence text is
/// tokenized with `tok`; text between two markup boundaries is tokenized on
/// its own so every token lies inside the markup that covers it.
Corpus parse_bioscope(std::istream& xml, const std::string& source, const TokenizerConfig& tok,
                      const BioScopeOptions& options = {});

/// SFU Review XML (<sentence> of <W>/<C> tokens, <cue ID type> and
/// <xcope><ref ID SRC/>...</xcope>). Several <xcope> elements referring to
/// one cue form one discontinuous scope. `doc_id` names the review.
Corpus parse_sfu(std::istream& xml, const std::string& source, const std::string& doc_id,
                 const PunctuationPolicy& punct = {});

}  // namespace negeval

#endif  // NEGEVAL_XML_CORPORA_HPP
