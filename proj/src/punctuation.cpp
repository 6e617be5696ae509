#include "negeval/punctuation.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace negeval {

std::set<std::string> PunctuationPolicy::default_tags() {
  return {".", ",", ":", "``", "''", "-LRB-", "-RRB-", "(", ")", "HYPH", "NFP", "PUNCT"};
}

bool PunctuationPolicy::is_punct(std::string_view surface,
                                 const std::optional<std::string>& pos) const {
  if (pos) return tags.count(*pos) > 0;
  return is_unicode_punctuation(surface);
}

bool is_unicode_punctuation(std::string_view text) {
  if (text.empty()) return false;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
    if ((U_GET_GC_MASK(c) & U_GC_P_MASK) == 0) return false;
  }
  return true;
}

}  // namespace negeval
