#pragma once

#include <string>

#include "pryvect/cpsl/ast.hpp"

namespace pryvect::cpsl {

// Parses CPSL source text. Throws ParseError with line/column and the
// expected-token set on malformed input.
PolicyAst parse(const std::string& source);

PolicyAst load_policy(const std::string& path);

}  // namespace pryvect::cpsl
