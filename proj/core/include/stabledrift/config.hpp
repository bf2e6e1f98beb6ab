#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabledrift {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat `key = value` configuration text. `#` starts a comment, blank lines
// are ignored, whitespace around keys and values is trimmed.
class ConfigMap {
public:
    static ConfigMap parse_file(const std::string& path);
    static ConfigMap parse_string(const std::string& text);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    // Throws ConfigError naming the key when it is absent.
    const std::string& get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& dflt) const;

    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double dflt) const;

    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long dflt) const;

    std::uint64_t get_u64(const std::string& key, std::uint64_t dflt) const;

    // Comma-separated list of reals.
    std::vector<double> get_double_list(const std::string& key) const;

private:
    std::map<std::string, std::string> entries_;
};

} // namespace stabledrift
