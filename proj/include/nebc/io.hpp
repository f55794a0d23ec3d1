#pragma once

#include <string>

#include "nebc/model.hpp"

namespace nebc {

// Instance files: {"delta": "1/2", "sizes": ["1/3", "0.25", ...]}.
// Numbers are strings ("p/q", integer, or decimal literal); bare JSON
// integers are also accepted. Bare JSON floats are rejected, exactness
// cannot be guaranteed for them.
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& inst);

// Packing files: {"bins": [[0,1],[2],...]}. Duplicate indices are rejected.
Packing read_packing(const std::string& text);
std::string write_packing(const Packing& packing);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a over the canonical instance serialization; stable across runs.
std::string instance_digest(const Instance& inst);

}  // namespace nebc
