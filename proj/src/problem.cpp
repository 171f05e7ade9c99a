#include "rr/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rr {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::size_t first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim(std::string_view s) {
  s.remove_prefix(first_non_space(s));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits `text` at commas, keeping each piece's column (1-based, relative to the line).
void split_elements(std::string_view text, std::size_t line, std::size_t column, std::vector<SourceText>& out) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view piece = text.substr(start, end - start);
    const std::size_t lead = first_non_space(piece);
    const std::string_view value = trim(piece);
    if (!value.empty()) out.push_back({std::string(value), line, column + start + lead});
    start = end + 1;
  }
}

}  // namespace

RingSpec parse_ring_selector(std::string_view selector) {
  const std::string s = lower(trim(selector));
  RingSpec ring;
  if (s == "q") {
    ring.kind = CoefficientKind::Rational;
  } else if (s == "z") {
    ring.kind = CoefficientKind::Integer;
  } else if (s.rfind("zmod", 0) == 0) {
    std::string rest(trim(std::string_view(s).substr(4)));
    if (!rest.empty() && rest.front() == ':') rest = std::string(trim(std::string_view(rest).substr(1)));
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw DomainError("zmod needs a positive integer modulus");
    }
    if (rest.size() > 18) throw DomainError("modulus too large");
    ring.kind = CoefficientKind::Modular;
    ring.modulus = std::stoll(rest);
    if (ring.modulus <= 0) throw DomainError("modulus must be positive");
  } else {
    throw DomainError("unknown ring '" + std::string(selector) + "' (expected q, z or zmod:N)");
  }
  return ring;
}

std::string render_ring_selector(const RingSpec& ring) {
  switch (ring.kind) {
    case CoefficientKind::Rational: return "q";
    case CoefficientKind::Integer: return "z";
    case CoefficientKind::Modular: return "zmod:" + std::to_string(ring.modulus);
  }
  return "?";
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      current += ch;
    } else {
      throw DomainError(std::string("invalid character '") + ch + "' in variable list");
    }
  }
  flush();
  return out;
}

ProblemFile parse_problem(std::string_view content) {
  ProblemFile problem;
  enum class Section { Header, Gens, Probes } section = Section::Header;
  bool order_given = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t indent = first_non_space(line);
    const std::string_view body = trim(line);
    if (body.empty()) {
      if (end == content.size()) break;
      continue;
    }

    auto fail = [&](const std::string& what, std::size_t column) -> ParseError {
      return ParseError(what, line_no, column);
    };

    // Section headers and directives are recognised in any section.
    const std::size_t word_end = body.find_first_of(" \t:");
    const std::string keyword = lower(body.substr(0, word_end));
    const std::string_view rest =
        word_end == std::string_view::npos ? std::string_view{} : body.substr(word_end);

    if ((keyword == "gens" || keyword == "probes") && !rest.empty() && trim(rest).front() == ':') {
      section = keyword == "gens" ? Section::Gens : Section::Probes;
      const std::size_t colon = body.find(':');
      split_elements(body.substr(colon + 1), line_no, indent + colon + 2,
                     section == Section::Gens ? problem.gens : problem.probes);
    } else if (section == Section::Header || keyword == "ring" || keyword == "vars" || keyword == "order") {
      const std::size_t value_column = indent + (body.size() - rest.size()) + first_non_space(rest) + 1;
      try {
        if (keyword == "ring") {
          auto vars = problem.ring.variables;
          auto order = problem.ring.order;
          problem.ring = parse_ring_selector(rest);
          problem.ring.variables = std::move(vars);
          problem.ring.order = order;
          problem.has_ring = true;
        } else if (keyword == "vars") {
          problem.ring.variables = parse_variable_list(rest);
          if (problem.ring.variables.empty()) throw DomainError("empty variable list");
        } else if (keyword == "order") {
          problem.ring.order = parse_term_order(trim(rest));
          order_given = true;
        } else {
          throw fail("unknown directive '" + std::string(body.substr(0, word_end)) + "'", indent + 1);
        }
      } catch (const DomainError& e) {
        throw fail(e.what(), value_column);
      }
    } else {
      split_elements(body, line_no, indent + 1, section == Section::Gens ? problem.gens : problem.probes);
    }
    if (end == content.size()) break;
  }
  (void)order_given;
  if (!problem.has_ring) throw ParseError("missing 'ring' directive", 1, 1);
  return problem;
}

std::string render_problem(const ProblemFile& problem) {
  std::ostringstream out;
  out << "ring " << render_ring_selector(problem.ring) << '\n';
  if (problem.ring.polynomial()) {
    out << "vars ";
    for (std::size_t k = 0; k < problem.ring.variables.size(); ++k) out << (k ? "," : "") << problem.ring.variables[k];
    out << '\n' << "order " << to_string(problem.ring.order) << '\n';
  }
  out << "gens:\n";
  for (const auto& g : problem.gens) out << g.text << '\n';
  if (!problem.probes.empty()) {
    out << "probes:\n";
    for (const auto& p : problem.probes) out << p.text << '\n';
  }
  return out.str();
}

}  // namespace rr
