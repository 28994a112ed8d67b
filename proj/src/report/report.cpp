#include "report/report.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "common/errors.hpp"

namespace bv::report {

namespace pt = boost::property_tree;

namespace {

constexpr char kHeader[] = "report";
constexpr char kRowPrefix[] = "row.";

bool is_row(std::string const &name) { return name.rfind(kRowPrefix, 0) == 0; }

} // namespace

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Nonexistent:
    return "nonexistent";
  case Verdict::Inconclusive:
    return "inconclusive";
  case Verdict::Fail:
    return "fail";
  }
  return "?";
}

Verdict parse_verdict(std::string const &text)
{
  for (Verdict v : {Verdict::Pass, Verdict::Nonexistent, Verdict::Inconclusive, Verdict::Fail})
    if (to_string(v) == text)
      return v;
  throw ParseError("report: unknown verdict '" + text + "'");
}

Section &Section::add(std::string key, std::string value)
{
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::optional<std::string> Section::get(std::string const &key) const
{
  for (auto const &[k, v] : fields)
    if (k == key)
      return v;
  return std::nullopt;
}

Section &Report::section(std::string name)
{
  sections.push_back({std::move(name), {}});
  return sections.back();
}

Section &Report::row() { return section(kRowPrefix + std::to_string(rows().size() + 1)); }

Section const *Report::find(std::string const &name) const
{
  for (auto const &s : sections)
    if (s.name == name)
      return &s;
  return nullptr;
}

std::vector<Section const *> Report::rows() const
{
  std::vector<Section const *> out;
  for (auto const &s : sections)
    if (is_row(s.name))
      out.push_back(&s);
  return out;
}

std::string to_structured(Report const &r)
{
  pt::ptree root, head;
  head.push_back({"command", pt::ptree(r.command)});
  head.push_back({"verdict", pt::ptree(to_string(r.verdict))});
  root.push_back({kHeader, head});
  for (auto const &s : r.sections) {
    // An INI section without keys cannot be told apart from a bare key.
    if (s.fields.empty())
      throw std::logic_error("report: section [" + s.name + "] is empty");
    pt::ptree sec;
    for (auto const &[k, v] : s.fields)
      sec.push_back({k, pt::ptree(v)});
    root.push_back({s.name, sec});
  }
  std::ostringstream os;
  pt::write_ini(os, root);
  return os.str();
}

std::vector<Section> parse_sections(std::string const &text)
{
  pt::ptree root;
  std::istringstream is(text);
  try {
    pt::read_ini(is, root);
  } catch (pt::ini_parser_error const &e) {
    throw ParseError("structured input: " + e.message() + " on line " + std::to_string(e.line()));
  }
  std::vector<Section> out;
  for (auto const &[name, sec] : root) {
    if (sec.empty() && !sec.data().empty())
      throw ParseError("structured input: key '" + name + "' outside any section");
    Section s{name, {}};
    for (auto const &[k, v] : sec)
      s.add(k, v.data());
    out.push_back(std::move(s));
  }
  return out;
}

Report parse_structured(std::string const &text)
{
  std::vector<Section> secs = parse_sections(text);
  if (secs.empty() || secs.front().name != kHeader)
    throw ParseError("structured input: missing [report] header");
  Report r;
  auto const cmd = secs.front().get("command");
  auto const verdict = secs.front().get("verdict");
  if (!cmd || !verdict)
    throw ParseError("structured input: [report] needs command and verdict");
  r.command = *cmd;
  r.verdict = parse_verdict(*verdict);
  r.sections.assign(std::make_move_iterator(secs.begin() + 1), std::make_move_iterator(secs.end()));
  return r;
}

std::string to_text(Report const &r)
{
  std::ostringstream os;
  for (auto const &s : r.sections) {
    if (is_row(s.name))
      continue;
    os << s.name << '\n';
    std::size_t w = 0;
    for (auto const &f : s.fields)
      w = std::max(w, f.first.size());
    for (auto const &[k, v] : s.fields)
      os << "  " << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  }

  auto const rows = r.rows();
  if (!rows.empty()) {
    std::vector<std::string> cols;
    for (auto const &f : rows.front()->fields)
      cols.push_back(f.first);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (auto const *row : rows)
        width[c] = std::max(width[c], row->get(cols[c]).value_or("").size());
    }
    auto line = [&](auto const &cell) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::string const v = cell(c);
        os << v << (c + 1 < cols.size() ? std::string(width[c] - v.size() + 2, ' ') : "");
      }
      os << '\n';
    };
    line([&](std::size_t c) { return cols[c]; });
    for (auto const *row : rows)
      line([&](std::size_t c) { return row->get(cols[c]).value_or(""); });
  }
  os << "verdict: " << to_string(r.verdict) << '\n';
  return os.str();
}

} // namespace bv::report
