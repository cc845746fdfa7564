#include "json_out.hpp"

#include <cmath>
#include <cstdio>

#include "qaoa/optimize.hpp"

namespace qaoa::cli {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonOut::separate() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!first_.empty()) {
        if (!first_.back()) buf_ += ',';
        first_.back() = false;
    }
}

JsonOut& JsonOut::begin_object() {
    separate();
    buf_ += '{';
    first_.push_back(true);
    return *this;
}

JsonOut& JsonOut::end_object() {
    buf_ += '}';
    first_.pop_back();
    return *this;
}

JsonOut& JsonOut::begin_array() {
    separate();
    buf_ += '[';
    first_.push_back(true);
    return *this;
}

JsonOut& JsonOut::end_array() {
    buf_ += ']';
    first_.pop_back();
    return *this;
}

JsonOut& JsonOut::key(const std::string& k) {
    separate();
    buf_ += '"' + escape(k) + "\":";
    after_key_ = true;
    return *this;
}

JsonOut& JsonOut::value(double x) {
    separate();
    // JSON has no NaN or infinity.
    buf_ += std::isfinite(x) ? format_double(x) : std::string("null");
    return *this;
}

JsonOut& JsonOut::value(long long x) {
    separate();
    buf_ += std::to_string(x);
    return *this;
}

JsonOut& JsonOut::value(bool b) {
    separate();
    buf_ += b ? "true" : "false";
    return *this;
}

JsonOut& JsonOut::value(const std::string& s) {
    separate();
    buf_ += '"' + escape(s) + '"';
    return *this;
}

JsonOut& JsonOut::values(const std::vector<double>& xs) {
    begin_array();
    for (double x : xs) value(x);
    return end_array();
}

JsonOut& JsonOut::values(const std::vector<int>& xs) {
    begin_array();
    for (int x : xs) value(x);
    return end_array();
}

}  // namespace qaoa::cli
