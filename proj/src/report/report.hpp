#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bv::report {

/// Outcome classes; the numeric values double as process exit codes.
enum class Verdict : int { Pass = 0, Nonexistent = 1, Inconclusive = 2, Fail = 4 };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string const &text);

struct Section
{
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;

  Section &add(std::string key, std::string value);
  std::optional<std::string> get(std::string const &key) const;

  friend bool operator==(Section const &, Section const &) = default;
};

/// Result of one command. Sections named "row.N" form a table in text form.
struct Report
{
  std::string command;
  Verdict verdict = Verdict::Pass;
  std::vector<Section> sections;

  Section &section(std::string name);
  Section &row();
  Section const *find(std::string const &name) const;
  std::vector<Section const *> rows() const;

  friend bool operator==(Report const &, Report const &) = default;
};

/// INI form: a [report] header with command and verdict, then every section.
std::string to_structured(Report const &r);
/// Throws ParseError on malformed input.
Report parse_structured(std::string const &text);
/// Sections of an INI document, in order.
std::vector<Section> parse_sections(std::string const &text);

/// Human form: key/value blocks and one aligned table for the rows.
std::string to_text(Report const &r);

} // namespace bv::report
