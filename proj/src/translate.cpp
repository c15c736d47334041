#include "f2sym/translate.hpp"

#include <cctype>

#include "f2sym/emitter.hpp"
#include "f2sym/parser.hpp"
#include "f2sym/reader.hpp"

namespace f2sym {

Translation translate(std::string_view source) {
  Translation out;
  std::vector<LogicalStatement> stmts = read_source(source);
  for (const ast::Unit& unit : parse_program(stmts)) {
    out.plans.push_back(analyze(unit));
    for (target::Stmt& s : emit_unit(out.plans.back())) out.program.push_back(std::move(s));
  }
  out.text = render(out.program);
  return out;
}

std::string normalize(std::string_view text) {
  std::string out;
  bool in_string = false;
  bool escaped = false;
  for (char c : text) {
    if (in_string) {
      out.push_back(c);
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') in_string = true;
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace f2sym
