// Group presentations and words.  Letters are signed generator indices
// (1-based); upper-case input letters denote inverses.
#ifndef KNOTCERT_WORDS_HPP
#define KNOTCERT_WORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/fixture_io.hpp"

namespace knotcert {

struct GroupWord {
  std::vector<std::int8_t> letters;

  bool operator==(const GroupWord&) const = default;
  auto operator<=>(const GroupWord&) const = default;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GroupWord inverse() const {
    GroupWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back(static_cast<std::int8_t>(-*it));
    return r;
  }

  GroupWord concat(const GroupWord& o) const {
    GroupWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }

  // Cancel adjacent inverse pairs until none remain.
  GroupWord free_reduce() const {
    GroupWord r;
    for (std::int8_t l : letters) {
      if (!r.letters.empty() && r.letters.back() == -l)
        r.letters.pop_back();
      else
        r.letters.push_back(l);
    }
    return r;
  }

  // Freely reduce, then strip conjugating prefix/suffix pairs.
  GroupWord cyclic_reduce() const {
    GroupWord r = free_reduce();
    std::size_t a = 0, b = r.letters.size();
    while (b - a >= 2 && r.letters[a] == -r.letters[b - 1]) {
      ++a;
      --b;
    }
    GroupWord out;
    out.letters.assign(r.letters.begin() + static_cast<long>(a),
                       r.letters.begin() + static_cast<long>(b));
    return out;
  }

  GroupWord rotated(std::size_t k) const {
    GroupWord r;
    std::size_t n = letters.size();
    r.letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      r.letters.push_back(letters[(i + k) % n]);
    return r;
  }
};

struct Presentation {
  std::vector<std::string> generators;  // single-letter, lower case
  std::vector<GroupWord> relators;
  std::map<std::string, GroupWord> named_words;

  const GroupWord& word(const std::string& name) const {
    auto it = named_words.find(name);
    if (it == named_words.end())
      throw Error("presentation has no word named '" + name + "'");
    return it->second;
  }
};

// Parse a letter string against a generator list; upper case = inverse.
inline GroupWord parse_word(std::string_view text,
                            const std::vector<std::string>& generators) {
  GroupWord w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    char lower = static_cast<char>(
        std::tolower(static_cast<unsigned char>(ch)));
    int idx = -1;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].size() == 1 && generators[i][0] == lower)
        idx = static_cast<int>(i) + 1;
    if (idx < 0)
      throw ParseError(std::string("undeclared letter '") + ch + "'");
    bool inv = std::isupper(static_cast<unsigned char>(ch));
    w.letters.push_back(static_cast<std::int8_t>(inv ? -idx : idx));
  }
  return w;
}

inline std::string word_str(const GroupWord& w,
                            const std::vector<std::string>& generators) {
  std::string out;
  for (std::int8_t l : w.letters) {
    std::size_t i = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
    char c = generators.at(i)[0];
    out += (l < 0) ? static_cast<char>(std::toupper(c)) : c;
  }
  return out;
}

// Presentation fixture format:
//   presentation v1
//   gens: a b
//   rel: <letters>          (repeatable)
//   word <name>: <letters>  (repeatable)
inline Presentation parse_presentation(std::string_view text) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "presentation v1")
    throw FixtureError("missing 'presentation v1' header");
  Presentation p;
  p.generators = detail::split_ws(detail::expect_prefix(lines.at(1), "gens:"));
  for (const auto& g : p.generators) {
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
      throw FixtureError("generators must be single lower-case letters");
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].rfind("rel:", 0) == 0) {
      p.relators.push_back(
          parse_word(detail::expect_prefix(lines[i], "rel:"), p.generators));
    } else if (lines[i].rfind("word", 0) == 0) {
      std::string rest = detail::expect_prefix(lines[i], "word");
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw FixtureError("malformed word line '" + lines[i] + "'");
      std::string name = rest.substr(0, colon);
      name.erase(name.find_last_not_of(" \t") + 1);
      p.named_words[name] =
          parse_word(rest.substr(colon + 1), p.generators);
    } else {
      throw FixtureError("unexpected presentation line '" + lines[i] + "'");
    }
  }
  return p;
}

}  // namespace knotcert

#endif  // KNOTCERT_WORDS_HPP
