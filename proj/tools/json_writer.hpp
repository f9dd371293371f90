#pragma once

// Ordered JSON values for report output. Keys keep insertion order and finite
// doubles print with 17 significant digits, so identical runs give identical
// bytes. Non-finite doubles become the strings "inf", "-inf" and "nan".

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace zolo::cli {

class Json {
 public:
  Json() = default;  // null
  Json(std::nullptr_t) {}
  Json(bool b) : kind_(Kind::Bool), bool_(b) {}
  Json(int v) : kind_(Kind::Int), int_(v) {}
  Json(long v) : kind_(Kind::Int), int_(v) {}
  Json(long long v) : kind_(Kind::Int), int_(v) {}
  Json(unsigned long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
  Json(unsigned long long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
  Json(double v) : kind_(Kind::Double), double_(v) {}
  Json(const char* s) : kind_(Kind::String), string_(s) {}
  Json(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

  static Json array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
  }
  static Json object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
  }

  /// Appends to an array.
  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }
  /// Appends a key to an object. Keys are not deduplicated.
  Json& set(std::string key, Json v) {
    keys_.push_back(std::move(key));
    items_.push_back(std::move(v));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out += '\n';
    return out;
  }

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };

  static void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

  static void quote(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(c)));
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  static void number(std::string& out, double v) {
    if (std::isnan(v)) return quote(out, "nan");
    if (std::isinf(v)) return quote(out, v > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
    out += buf;
  }

  void write(std::string& out, int depth) const {
    switch (kind_) {
      case Kind::Null: out += "null"; return;
      case Kind::Bool: out += bool_ ? "true" : "false"; return;
      case Kind::Int: out += std::to_string(int_); return;
      case Kind::Double: number(out, double_); return;
      case Kind::String: quote(out, string_); return;
      case Kind::Array:
      case Kind::Object: break;
    }
    const bool obj = kind_ == Kind::Object;
    if (items_.empty()) {
      out += obj ? "{}" : "[]";
      return;
    }
    // Arrays of scalars stay on one line.
    bool flat = !obj;
    for (const Json& v : items_) flat = flat && v.kind_ != Kind::Array && v.kind_ != Kind::Object;
    out += obj ? '{' : '[';
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += flat ? ", " : ",";
      if (!flat) {
        out += '\n';
        indent(out, depth + 1);
      }
      if (obj) {
        quote(out, keys_[i]);
        out += ": ";
      }
      items_[i].write(out, depth + 1);
    }
    if (!flat) {
      out += '\n';
      indent(out, depth);
    }
    out += obj ? '}' : ']';
  }

  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<std::string> keys_;
  std::vector<Json> items_;
};

}  // namespace zolo::cli
