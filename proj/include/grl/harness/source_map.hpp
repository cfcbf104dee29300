#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace grl::harness {

/// Escapes a key for use as a JSON pointer token.
inline std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// Line (1-based) of every value in a JSON document, keyed by JSON pointer.
/// Only meant for well-formed input; used to attach line numbers to
/// validation errors after nlohmann::json has accepted the text.
class SourceMap {
 public:
  SourceMap() = default;
  explicit SourceMap(std::string_view text) { scan(text); }

  int line_of(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
      if (auto it = lines_.find(p); it != lines_.end()) return it->second;
      const auto cut = p.rfind('/');
      if (cut == std::string::npos) return 0;
      p.resize(cut);
    }
  }

 private:
  struct Frame {
    bool object = false;
    std::string prefix;
    int index = 0;
    std::string key;
    bool expect_key = false;
  };

  void scan(std::string_view text) {
    std::vector<Frame> stack;
    int line = 1;
    lines_[""] = 1;
    auto value_pointer = [&]() -> std::string {
      if (stack.empty()) return "";
      const auto& f = stack.back();
      return f.prefix + "/" + (f.object ? pointer_token(f.key) : std::to_string(f.index));
    };
    auto record = [&](const std::string& p) { lines_.emplace(p, line); };
    bool root_seen = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == ':') continue;
      if (c == ',') {
        if (!stack.empty()) {
          if (stack.back().object) stack.back().expect_key = true;
          else ++stack.back().index;
        }
        continue;
      }
      if (c == '}' || c == ']') {
        if (!stack.empty()) stack.pop_back();
        continue;
      }
      if (c == '"') {
        std::string s;
        std::size_t j = i + 1;
        for (; j < text.size() && text[j] != '"'; ++j) {
          if (text[j] == '\\' && j + 1 < text.size()) {
            s += text[++j];
          } else {
            if (text[j] == '\n') ++line;
            s += text[j];
          }
        }
        if (!stack.empty() && stack.back().object && stack.back().expect_key) {
          stack.back().key = s;
          stack.back().expect_key = false;
          record(value_pointer());
        } else if (!root_seen || !stack.empty()) {
          record(value_pointer());
        }
        root_seen = true;
        i = j;
        continue;
      }
      if (c == '{' || c == '[') {
        const auto p = value_pointer();
        record(p);
        root_seen = true;
        stack.push_back({c == '{', p, 0, {}, c == '{'});
        continue;
      }
      // scalar literal
      record(value_pointer());
      root_seen = true;
      while (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != '}' && text[i + 1] != ']' &&
             !std::isspace(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
      }
    }
  }

  std::map<std::string, int> lines_;
};

}  // namespace grl::harness
