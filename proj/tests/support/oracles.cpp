#include "oracles.hpp"

#include <regex>

namespace testsupport {

using boost::multiprecision::cpp_int;

cpp_int decimal_digits(const std::string& digits) {
  cpp_int v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

Rational decimal_value(const f2sym::RealParts& parts) {
  std::string digits = parts.int_digits + parts.frac_digits;
  long point = static_cast<long>(parts.int_digits.size()) + (parts.exp_letter ? parts.exp_value : 0);
  long len = static_cast<long>(digits.size());
  if (digits.empty()) return Rational(0);
  if (point >= len) return Rational(decimal_digits(digits + std::string(point - len, '0')));
  return Rational(decimal_digits(digits)) / decimal_digits("1" + std::string(len - point, '0'));
}

std::optional<Rational> scaled_text_value(const std::string& text) {
  static const std::regex bare(R"(^(\d+)$)");
  static const std::regex scaled(R"(^\((\d+)(\*10\^\(-(\d+)\))?(\*10\^\((-?\d+)\))?\)$)");
  std::smatch m;
  if (std::regex_match(text, m, bare)) return Rational(decimal_digits(m[1].str()));
  if (!std::regex_match(text, m, scaled) || (!m[2].matched && !m[4].matched)) return std::nullopt;
  long shift = 0;
  if (m[3].matched) shift -= std::stol(m[3].str());
  if (m[5].matched) shift += std::stol(m[5].str());
  Rational value{decimal_digits(m[1].str())};
  Rational ten(10);
  for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) {
    if (shift < 0) value /= ten; else value *= ten;
  }
  return value;
}

std::vector<std::vector<long>> column_major_order(const std::vector<long>& lower,
                                                  const std::vector<long>& extents,
                                                  std::size_t count) {
  std::vector<std::vector<long>> out;
  std::size_t total = 1;
  for (long e : extents) total *= static_cast<std::size_t>(e);
  for (std::size_t c = 0; c < count && c < total; ++c) {
    std::vector<long> index;
    std::size_t rest = c;
    for (std::size_t d = 0; d < extents.size(); ++d) {
      index.push_back(lower[d] + static_cast<long>(rest % static_cast<std::size_t>(extents[d])));
      rest /= static_cast<std::size_t>(extents[d]);
    }
    out.push_back(std::move(index));
  }
  return out;
}

std::vector<std::string> emitted_identifiers(const std::string& text) {
  std::string code;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "(*") == 0) {
      std::size_t end = text.find("*)", i + 2);
      i = end == std::string::npos ? text.size() : end + 1;
      code.push_back(' ');
    } else if (text[i] == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      i = j;
      code.push_back(' ');
    } else {
      code.push_back(text[i]);
    }
  }
  static const std::regex ident(R"([A-Za-z$][A-Za-z0-9_$]*)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(code.begin(), code.end(), ident); it != std::sregex_iterator();
       ++it) {
    std::string id = it->str();
    std::size_t end = it->position() + id.size();
    if (!id.empty() && id.back() == '_' && end < code.size() && (code[end] == ',' || code[end] == ']')) {
      id.pop_back();
    }
    out.push_back(id);
  }
  return out;
}

}  // namespace testsupport
