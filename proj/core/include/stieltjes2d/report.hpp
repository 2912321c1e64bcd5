#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes2d {

// Flat key-value report. Fields are emitted in insertion order; the
// digest covers everything inserted before stamp_timing so repeated runs
// with identical inputs produce identical digests.
class Report {
public:
    explicit Report(std::string command_echo);

    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, const char* value);
    void put(const std::string& key, double value);
    void put(const std::string& key, bool value);
    void put(const std::string& key, long long value);

    // Appends digest (over all fields so far) and the wall time; timing
    // is outside the digest.
    void stamp_timing(double seconds);

    void write_kv(std::ostream& out) const;
    void write_csv(std::ostream& out) const;

    const std::string& get(const std::string& key) const;
    bool has(const std::string& key) const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string format_number(double v);

} // namespace stieltjes2d
