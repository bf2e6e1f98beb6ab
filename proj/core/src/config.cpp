#include "stabledrift/config.hpp"

#include <fstream>
#include <sstream>

namespace stabledrift {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

ConfigMap ConfigMap::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

ConfigMap ConfigMap::parse_string(const std::string& text) {
    ConfigMap cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected `key = value`, got: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key");
        cfg.entries_[key] = value;
    }
    return cfg;
}

const std::string& ConfigMap::get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw ConfigError("missing config key: " + key);
    return it->second;
}

std::string ConfigMap::get_string(const std::string& key,
                                  const std::string& dflt) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? dflt : it->second;
}

double ConfigMap::get_double(const std::string& key) const {
    const std::string& raw = get_string(key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (pos != raw.size())
            throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key `" + key + "`: not a real number: " + raw);
    }
}

double ConfigMap::get_double(const std::string& key, double dflt) const {
    return has(key) ? get_double(key) : dflt;
}

long long ConfigMap::get_int(const std::string& key) const {
    const std::string& raw = get_string(key);
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(raw, &pos);
        if (pos != raw.size())
            throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key `" + key + "`: not an integer: " + raw);
    }
}

long long ConfigMap::get_int(const std::string& key, long long dflt) const {
    return has(key) ? get_int(key) : dflt;
}

std::uint64_t ConfigMap::get_u64(const std::string& key, std::uint64_t dflt) const {
    if (!has(key))
        return dflt;
    const long long v = get_int(key);
    if (v < 0)
        throw ConfigError("config key `" + key + "`: must be non-negative");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> ConfigMap::get_double_list(const std::string& key) const {
    const std::string& raw = get_string(key);
    std::vector<double> out;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("config key `" + key + "`: bad list entry: " + item);
        }
    }
    if (out.empty())
        throw ConfigError("config key `" + key + "`: empty list");
    return out;
}

} // namespace stabledrift
