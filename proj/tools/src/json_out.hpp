#pragma once

#include <string>
#include <vector>

namespace qaoa::cli {

// Minimal JSON writer with fixed "%.17g" numbers and insertion-ordered keys.
class JsonOut {
public:
    JsonOut& begin_object();
    JsonOut& end_object();
    JsonOut& begin_array();
    JsonOut& end_array();
    JsonOut& key(const std::string& k);
    JsonOut& value(double x);
    JsonOut& value(long long x);
    JsonOut& value(int x) { return value(static_cast<long long>(x)); }
    JsonOut& value(bool b);
    JsonOut& value(const std::string& s);
    JsonOut& value(const char* s) { return value(std::string(s)); }
    JsonOut& values(const std::vector<double>& xs);
    JsonOut& values(const std::vector<int>& xs);

    const std::string& str() const { return buf_; }

private:
    void separate();
    std::string buf_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

std::string escape(const std::string& s);

}  // namespace qaoa::cli
