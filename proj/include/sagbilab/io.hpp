#pragma once

#include <string>
#include <vector>

#include "sagbilab/polynomial.hpp"
#include "sagbilab/toric.hpp"

namespace sagbilab {

struct GeneratorFile {
  std::vector<std::string> vars;
  std::vector<Polynomial> polys;
};

// Format: header `vars: x y`, one polynomial per line, `#` comments.
GeneratorFile parse_generator_file(const std::string& text);
GeneratorFile read_generator_file(const std::string& path);

// Format: one column per line as space-separated integers.
ExponentMatrix parse_matrix_file(const std::string& text);
ExponentMatrix read_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sagbilab
