#pragma once

#include <cstdint>
#include <cstdio>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fillcert {

// Minimal streaming JSON writer with insertion-ordered keys and fixed float
// formatting (printf %.17g, enough digits for exact double round-trips).
// Reports must serialize to byte-identical output across runs and platforms,
// which rules out generic serializers with their own float-to-string ideas.
class JsonWriter {
public:
    void begin_object() { open('{', '}'); }
    void end_object() { close('}'); }
    void begin_array() { open('[', ']'); }
    void end_array() { close(']'); }

    void key(std::string_view k) {
        comma();
        quote(k);
        buf_ += ':';
        pending_value_ = true;
    }

    void value(double v) {
        if (!std::isfinite(v)) {
            throw std::logic_error("refusing to serialize non-finite number");
        }
        comma();
        char tmp[32];
        std::snprintf(tmp, sizeof(tmp), "%.17g", v);
        buf_ += tmp;
    }
    void value(std::int64_t v) {
        comma();
        buf_ += std::to_string(v);
    }
    void value(int v) { value(static_cast<std::int64_t>(v)); }
    void value(bool v) {
        comma();
        buf_ += v ? "true" : "false";
    }
    void value(std::string_view v) {
        comma();
        quote(v);
    }
    // String literals would otherwise decay to const char* and pick the bool
    // overload (pointer-to-bool is a standard conversion, string_view is not).
    void value(const char* v) { value(std::string_view(v)); }
    void null() {
        comma();
        buf_ += "null";
    }

    const std::string& str() const { return buf_; }

private:
    void open(char c, char) {
        comma();
        buf_ += c;
        depth_.push_back(c);
        first_in_scope_ = true;
    }
    void close(char c) {
        if (depth_.empty()) throw std::logic_error("unbalanced json writer scope");
        depth_.pop_back();
        buf_ += c;
        first_in_scope_ = false;
    }
    // Insert the separating comma unless this is the first element of the
    // current scope or the value directly follows its key.
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!depth_.empty() && !first_in_scope_) buf_ += ',';
        first_in_scope_ = false;
    }
    void quote(std::string_view s) {
        buf_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': buf_ += "\\\""; break;
                case '\\': buf_ += "\\\\"; break;
                case '\n': buf_ += "\\n"; break;
                case '\t': buf_ += "\\t"; break;
                case '\r': buf_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char tmp[8];
                        std::snprintf(tmp, sizeof(tmp), "\\u%04x", c);
                        buf_ += tmp;
                    } else {
                        buf_ += c;
                    }
            }
        }
        buf_ += '"';
    }

    std::string buf_;
    std::vector<char> depth_;
    bool first_in_scope_ = false;
    bool pending_value_ = false;
};

}  // namespace fillcert
