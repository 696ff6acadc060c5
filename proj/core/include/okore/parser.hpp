#pragma once

#include <string_view>

#include "okore/element.hpp"

namespace okore {

/// Parses an element expression over n generators.
///
/// Grammar: a sum of terms; a term is a juxtaposed product of factors with an
/// optional leading sign; a factor is a rational literal ("2", "1/2"), the
/// imaginary unit "i", a generator word token, or a parenthesized expression,
/// each optionally adjointed by a postfix "*". Generator tokens use one digit
/// per letter ("s12" is s_1 s_2) for n <= 9 and a bracketed form ("s[10,2]")
/// beyond. parse(x.str()) == x.
///
/// Raises ParseError (with position) on bad syntax, MalformedInputError
/// wrapped into ParseError when a letter exceeds n.
Element parse(std::uint32_t n, std::string_view text);

/// Parses a scalar-valued expression (no generators allowed).
Scalar parse_scalar(std::string_view text);

}  // namespace okore
