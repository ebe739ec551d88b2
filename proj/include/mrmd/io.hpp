#pragma once

#include <stdexcept>
#include <string>

#include "mrmd/types.hpp"

namespace mrmd {

// Malformed input: bad JSON, wrong field types, missing or unknown fields.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed input with dangling references (e.g. a demand
// requiring an undeclared type id).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

std::string serialize_solution(const Instance& inst, const Solution& sol);
Solution parse_solution(const Instance& inst, const std::string& text);

Instance load_instance_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace mrmd
