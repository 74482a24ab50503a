#include "pafdp/paf_format.hpp"

#include "pafdp/errors.hpp"

#include <set>
#include <sstream>

namespace pafdp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message);
}

Rational parse_probability(const Token& tok, std::size_t line, const std::string& what) {
  std::optional<Rational> p = parse_decimal(tok.text);
  if (!p) {
    const auto slash = tok.text.find('/');
    if (slash != std::string_view::npos) {
      auto num = parse_decimal(tok.text.substr(0, slash));
      auto den = parse_decimal(tok.text.substr(slash + 1));
      if (num && den && num->get_den() == 1 && den->get_den() == 1 && *den != 0) {
        p = Rational(*num / *den);
      }
    }
  }
  if (!p) fail(line, tok.column, "malformed probability '" + std::string(tok.text) + "'");
  if (*p == 0) fail(line, tok.column, "zero-probability " + what + "; remove it");
  if (*p > 1) fail(line, tok.column, "probability of " + what + " outside (0,1]");
  return *p;
}

void check_name(const Token& tok, std::size_t line) {
  if (!is_valid_argument_name(tok.text)) {
    fail(line, tok.column, "invalid argument name '" + std::string(tok.text) + "'");
  }
}

}  // namespace

std::string probability_text(const Rational& p) {
  if (auto d = exact_decimal(p)) return *d;
  return fraction_string(p);
}

PafDocument parse_paf(std::string_view text) {
  PafDocument doc;
  Paf::Builder builder;
  std::set<std::string, std::less<>> declared;
  std::set<std::pair<std::string, std::string>> attacks;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.front().text.front() == '#') {
      doc.comments.emplace_back(line.substr(tokens.front().column - 1));
      continue;
    }
    const auto& head = tokens.front();
    if (head.text == "arg") {
      if (tokens.size() != 3) fail(line_no, head.column, "expected: arg <name> <prob>");
      check_name(tokens[1], line_no);
      std::string name(tokens[1].text);
      if (!declared.insert(name).second) {
        fail(line_no, tokens[1].column, "duplicate argument '" + name + "'");
      }
      builder.argument(name, parse_probability(tokens[2], line_no, "argument"));
    } else if (head.text == "att") {
      if (tokens.size() != 4) fail(line_no, head.column, "expected: att <source> <target> <prob>");
      for (std::size_t i = 1; i <= 2; ++i) {
        if (!declared.contains(tokens[i].text)) {
          fail(line_no, tokens[i].column,
               "undeclared argument '" + std::string(tokens[i].text) + "'");
        }
      }
      std::pair<std::string, std::string> key{tokens[1].text, tokens[2].text};
      if (!attacks.insert(key).second) {
        fail(line_no, head.column, "duplicate attack (" + key.first + "," + key.second + ")");
      }
      builder.attack(key.first, key.second, parse_probability(tokens[3], line_no, "attack"));
    } else if (head.text == "set") {
      if (doc.query_set) fail(line_no, head.column, "second set line");
      std::vector<std::string> members;
      std::set<std::string_view> seen;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!declared.contains(tokens[i].text)) {
          fail(line_no, tokens[i].column,
               "undeclared argument '" + std::string(tokens[i].text) + "'");
        }
        if (!seen.insert(tokens[i].text).second) {
          fail(line_no, tokens[i].column, "argument repeated in set");
        }
        members.emplace_back(tokens[i].text);
      }
      doc.query_set = std::move(members);
    } else if (head.text == "query") {
      if (tokens.size() != 2) fail(line_no, head.column, "expected: query <name>");
      if (doc.query_argument) fail(line_no, head.column, "second query line");
      if (!declared.contains(tokens[1].text)) {
        fail(line_no, tokens[1].column,
             "undeclared argument '" + std::string(tokens[1].text) + "'");
      }
      doc.query_argument = std::string(tokens[1].text);
    } else {
      fail(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  }
  doc.paf = builder.build();
  if (doc.query_set) {
    // canonical order
    const ArgSet S = doc.paf.framework().make_set(*doc.query_set);
    doc.query_set = doc.paf.framework().names_of(S);
  }
  return doc;
}

std::string serialize_paf(const PafDocument& doc) {
  std::ostringstream os;
  for (const auto& c : doc.comments) os << c << '\n';
  os << serialize_paf(doc.paf, doc.query_set, doc.query_argument);
  return os.str();
}

std::string serialize_paf(const Paf& paf, const std::optional<std::vector<std::string>>& query_set,
                          const std::optional<std::string>& query_argument) {
  const auto& af = paf.framework();
  std::ostringstream os;
  for (ArgIndex a = 0; a < af.num_arguments(); ++a) {
    os << "arg " << af.name(a) << ' ' << probability_text(paf.arg_probability(a)) << '\n';
  }
  for (AttackIndex r = 0; r < af.num_attacks(); ++r) {
    const auto& att = af.attack(r);
    os << "att " << af.name(att.source) << ' ' << af.name(att.target) << ' '
       << probability_text(paf.attack_probability(r)) << '\n';
  }
  if (query_set) {
    os << "set";
    for (const auto& name : af.names_of(af.make_set(*query_set))) os << ' ' << name;
    os << '\n';
  }
  if (query_argument) os << "query " << *query_argument << '\n';
  return os.str();
}

}  // namespace pafdp
