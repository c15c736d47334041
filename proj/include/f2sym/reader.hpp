#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Fixed-form source reader: comment lines, labels in columns 1-5,
// continuation marks in column 6, statement text from column 7 on.

namespace f2sym {

struct RawLine {
  int line_number = 0;
  std::string text;
};

enum class LineKind { Blank, Comment, Statement, Continuation };

struct ClassifiedLine {
  LineKind kind = LineKind::Blank;
  std::optional<int> label;
  std::string payload;
  int line_number = 0;
};

enum class StatementKind { Comment, Statement };

struct LogicalStatement {
  std::optional<int> label;
  std::string body;
  int first_line = 0;
  StatementKind kind = StatementKind::Statement;

  bool is_comment() const { return kind == StatementKind::Comment; }
};

/// Splits text into lines, accepting LF and CRLF separators.
std::vector<RawLine> split_lines(std::string_view text);

/// Comment payloads are the line text with tabs widened to one blank.
ClassifiedLine classify_line(const RawLine& line);

std::vector<LogicalStatement> join_continuations(
    std::span<const ClassifiedLine> lines);

std::vector<LogicalStatement> read_source(std::string_view text);

}  // namespace f2sym
