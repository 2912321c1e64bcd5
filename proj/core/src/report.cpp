#include "stieltjes2d/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace stieltjes2d {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Report::Report(std::string command_echo) {
    fields_.emplace_back("command", std::move(command_echo));
}

void Report::put(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
}
void Report::put(const std::string& key, const char* value) {
    fields_.emplace_back(key, std::string(value));
}
void Report::put(const std::string& key, double value) {
    fields_.emplace_back(key, format_number(value));
}
void Report::put(const std::string& key, bool value) {
    fields_.emplace_back(key, value ? "true" : "false");
}
void Report::put(const std::string& key, long long value) {
    fields_.emplace_back(key, std::to_string(value));
}

void Report::stamp_timing(double seconds) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [k, v] : fields_)
        for (const std::string* s : {&k, &v})
            for (unsigned char ch : *s) {
                h ^= ch;
                h *= 1099511628211ull;
            }
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(h));
    fields_.emplace_back("digest", digest);
    char t[32];
    std::snprintf(t, sizeof t, "%.6f", seconds);
    fields_.emplace_back("seconds", t);
}

void Report::write_kv(std::ostream& out) const {
    for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
}

void Report::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < fields_.size(); ++i)
        out << fields_[i].first << (i + 1 < fields_.size() ? ',' : '\n');
    for (std::size_t i = 0; i < fields_.size(); ++i)
        out << fields_[i].second << (i + 1 < fields_.size() ? ',' : '\n');
}

const std::string& Report::get(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    throw std::out_of_range("Report: missing field " + key);
}

bool Report::has(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return true;
    return false;
}

} // namespace stieltjes2d
