#include "f2sym/reader.hpp"

#include <algorithm>

#include "f2sym/error.hpp"

namespace f2sym {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool all_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_blank);
}

}  // namespace

std::vector<RawLine> split_lines(std::string_view text) {
  std::vector<RawLine> lines;
  int number = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, std::string(line)});
    start = end + 1;
  }
  return lines;
}

ClassifiedLine classify_line(const RawLine& line) {
  ClassifiedLine out;
  out.line_number = line.line_number;
  const std::string& text = line.text;

  if (all_blank(text)) return out;

  if (text[0] == 'c' || text[0] == 'C' || text[0] == '*') {
    out.kind = LineKind::Comment;
    out.payload = text;
    std::replace(out.payload.begin(), out.payload.end(), '\t', ' ');
    return out;
  }

  // Label field: columns 1-5, cut short by a tab.
  std::string label_digits;
  std::size_t pos = 0;
  bool tab_form = false;
  for (; pos < 5 && pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '\t') {
      tab_form = true;
      break;
    }
    if (c == ' ') continue;
    if (c < '0' || c > '9') {
      throw LexError(line.line_number, static_cast<int>(pos) + 1,
                     std::string("invalid character '") + c +
                         "' in label field");
    }
    label_digits.push_back(c);
  }

  std::string payload;
  bool continuation = false;
  if (tab_form) {
    payload = text.substr(pos + 1);
  } else if (text.size() > 5) {
    char mark = text[5];
    if (mark == '\t') {
      payload = text.substr(6);
    } else {
      continuation = mark != ' ' && mark != '0';
      payload = text.substr(6);
    }
  }

  if (label_digits.empty() && all_blank(payload) && !continuation) return out;

  if (continuation) {
    if (!label_digits.empty()) {
      throw LexError(line.line_number, 1,
                     "continuation line may not carry a label");
    }
    out.kind = LineKind::Continuation;
  } else {
    out.kind = LineKind::Statement;
    if (!label_digits.empty()) out.label = std::stoi(label_digits);
  }
  out.payload = std::move(payload);
  return out;
}

std::vector<LogicalStatement> join_continuations(
    std::span<const ClassifiedLine> lines) {
  std::vector<LogicalStatement> out;
  // Index of the statement a continuation extends; comments may sit between.
  std::optional<std::size_t> open;
  for (const ClassifiedLine& line : lines) {
    switch (line.kind) {
      case LineKind::Blank:
        break;
      case LineKind::Comment:
        out.push_back({std::nullopt, line.payload, line.line_number,
                       StatementKind::Comment});
        break;
      case LineKind::Statement:
        out.push_back({line.label, line.payload, line.line_number,
                       StatementKind::Statement});
        open = out.size() - 1;
        break;
      case LineKind::Continuation:
        if (!open) {
          throw LexError(line.line_number, 6,
                         "continuation line with no preceding statement");
        }
        out[*open].body += line.payload;
        break;
    }
  }
  return out;
}

std::vector<LogicalStatement> read_source(std::string_view text) {
  std::vector<ClassifiedLine> classified;
  for (const RawLine& raw : split_lines(text)) {
    classified.push_back(classify_line(raw));
  }
  return join_continuations(classified);
}

}  // namespace f2sym
