#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varlam/term.hpp"

namespace varlam {

class Env;

// Parses one term. Uppercase identifiers become constants and must be bound in
// `env` when one is given; `#n` becomes the Church numeral λs z. s^n z.
Term parse(std::string_view source, const Env* env = nullptr);
inline Term parse(std::string_view source, const Env& env) { return parse(source, &env); }

// `Name := term ;` statements of a definition file, in order.
struct Definition {
  std::string name;
  std::string source;  // text of the term
  std::size_t offset;  // position of the name in the file
};
std::vector<Definition> split_definitions(std::string_view source);

// Canonical concrete syntax. With `sugar`, numeral-shaped abstractions print as #n.
std::string print(const Term& t, bool sugar = false);

// n if t is α-equal to λs z. s^n z, or 1 for λs.s.
std::optional<unsigned> numeral_value(const Term& t);

bool is_lower_ident_start(char c);
bool is_upper_ident_start(char c);
bool is_ident_char(char c);

}  // namespace varlam
