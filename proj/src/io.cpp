#include "sagbilab/io.hpp"

#include <fstream>
#include <sstream>

#include "sagbilab/error.hpp"

namespace sagbilab {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

GeneratorFile parse_generator_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GeneratorFile out;
  bool have_vars = false;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    if (!have_vars) {
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      if (head != "vars:")
        throw ParseError("generator file must start with a 'vars:' header", 0);
      std::string v;
      while (ls >> v) out.vars.push_back(v);
      if (out.vars.empty()) throw ParseError("empty variable list", 0);
      have_vars = true;
      continue;
    }
    out.polys.push_back(parse_polynomial(line, out.vars));
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", 0);
  return out;
}

GeneratorFile read_generator_file(const std::string& path) {
  return parse_generator_file(read_text_file(path));
}

ExponentMatrix parse_matrix_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ExponentVector> columns;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    ExponentVector col;
    std::int64_t v;
    while (ls >> v) col.push_back(v);
    if (col.empty()) continue;
    columns.push_back(std::move(col));
  }
  return ExponentMatrix::from_columns(std::move(columns));
}

ExponentMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_file(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace sagbilab
