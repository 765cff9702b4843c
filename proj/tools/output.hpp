#ifndef STOLARSKY_TOOLS_OUTPUT_HPP_
#define STOLARSKY_TOOLS_OUTPUT_HPP_

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace cli {

// Round-trip-exact decimal rendering: 17 significant digits.
inline std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Minimal ordered JSON emitter; insertion order is preserved so identical
// inputs produce byte-identical documents.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    comma();
    if (std::isfinite(v)) {
      out_ += fmt_real(v);
    } else {
      out_ += "null";
    }
    return *this;
  }
  JsonWriter& value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(std::string_view s) {
    comma();
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }

  std::string str() const { return out_ + "\n"; }

 private:
  JsonWriter& open(char c) {
    comma();
    out_ += c;
    stack_.push_back(false);
    return *this;
  }
  JsonWriter& close(char c) {
    out_ += c;
    stack_.pop_back();
    return *this;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!stack_.empty() && stack_.back()) out_ += ',';
    if (!stack_.empty()) stack_.back() = true;
  }

  std::string out_;
  std::vector<bool> stack_;
  bool pending_value_ = false;
};

// CSV assembly; callers provide already-formatted cells.
inline std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

}  // namespace cli

#endif  // STOLARSKY_TOOLS_OUTPUT_HPP_
