#pragma once

// Minimal XML well-formedness checker for the SVG output tests: balanced
// properly-nested tags, quoted attributes, no stray '<' or '&' in text.

#include <cctype>
#include <string>
#include <vector>

namespace xmlcheck {

struct Result {
  bool ok = true;
  std::string error;
};

inline Result fail(const std::string& message) { return {false, message}; }

inline bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
         c == '.';
}

inline Result check_document(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    char c = text[i];
    if (c == '<') {
      if (i + 1 >= n) return fail("dangling '<' at end");
      if (text.compare(i, 4, "<!--") == 0) {
        auto end = text.find("-->", i + 4);
        if (end == std::string::npos) return fail("unterminated comment");
        i = end + 3;
        continue;
      }
      if (text[i + 1] == '?') {
        auto end = text.find("?>", i + 2);
        if (end == std::string::npos) return fail("unterminated processing instruction");
        i = end + 2;
        continue;
      }
      if (text[i + 1] == '/') {
        std::size_t j = i + 2;
        std::string name;
        while (j < n && name_char(text[j])) name += text[j++];
        if (name.empty()) return fail("closing tag without a name");
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= n || text[j] != '>') return fail("malformed closing tag </" + name);
        if (stack.empty()) return fail("closing tag </" + name + "> with empty stack");
        if (stack.back() != name) {
          return fail("mismatched close: expected </" + stack.back() + ">, got </" + name +
                      ">");
        }
        stack.pop_back();
        i = j + 1;
        continue;
      }
      // opening tag
      std::size_t j = i + 1;
      std::string name;
      while (j < n && name_char(text[j])) name += text[j++];
      if (name.empty()) return fail("tag without a name");
      bool self_closing = false;
      while (j < n) {
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= n) return fail("unterminated tag <" + name);
        if (text[j] == '>') {
          ++j;
          break;
        }
        if (text[j] == '/') {
          if (j + 1 >= n || text[j + 1] != '>') return fail("bad self-close in <" + name);
          self_closing = true;
          j += 2;
          break;
        }
        // attribute
        std::string attr;
        while (j < n && name_char(text[j])) attr += text[j++];
        if (attr.empty()) return fail("bad attribute character in <" + name + ">");
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= n || text[j] != '=') return fail("attribute '" + attr + "' without '='");
        ++j;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j >= n || (text[j] != '"' && text[j] != '\'')) {
          return fail("attribute '" + attr + "' value not quoted");
        }
        char quote = text[j++];
        while (j < n && text[j] != quote) {
          if (text[j] == '<') return fail("'<' inside attribute value");
          ++j;
        }
        if (j >= n) return fail("unterminated attribute value for '" + attr + "'");
        ++j;
      }
      if (!self_closing) {
        stack.push_back(name);
      }
      i = j;
      continue;
    }
    if (c == '&') {
      auto end = text.find(';', i + 1);
      if (end == std::string::npos || end - i > 8) return fail("bare '&' in text");
      i = end + 1;
      continue;
    }
    ++i;
  }
  if (!stack.empty()) return fail("unclosed tag <" + stack.back() + ">");
  return {};
}

}  // namespace xmlcheck
