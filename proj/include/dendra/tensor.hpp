#pragma once

// Word-basis helpers on T(X): concatenation, brackets, multilinear
// projection and the text grammar used by the CLI.

#include <string_view>

#include "dendra/elem.hpp"
#include "dendra/word.hpp"

namespace dendra {

using WordElem = Elem<Word>;

inline WordElem letter(Letter i) { return WordElem(Word{i}); }
inline WordElem word_elem(Word w) { return WordElem(std::move(w)); }

/// Concatenation product on T(X).
WordElem concat(const WordElem& a, const WordElem& b);

/// [a, b] = ab - ba for concatenation.
WordElem commutator(const WordElem& a, const WordElem& b);

/// Keeps exactly the terms whose word has no repeated letter.
WordElem multilinear_part(const WordElem& x);

/// Parses the rendering grammar of to_string(WordElem): terms such as
/// "x1.x2", "3/2·x1", "−x2.x1", "1/2" (a unit term) joined by + and -.
/// ASCII '-' and '*' are accepted for '−' and '·'. Throws
/// std::invalid_argument on malformed input.
WordElem parse_word_elem(std::string_view text);

}  // namespace dendra
