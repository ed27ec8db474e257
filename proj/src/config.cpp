#include "sllg/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sllg/errors.hpp"

namespace sllg {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return c;
}

void Config::apply_override(const std::string& kev) {
    const auto eq = kev.find('=');
    if (eq == std::string::npos) throw ConfigError("override must be key=value: " + kev);
    set(trim(kev.substr(0, eq)), trim(kev.substr(eq + 1)));
}

void Config::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw ConfigError("empty config key");
    kv_[key] = value;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = kv_.find(key);
    double val = fallback;
    if (it != kv_.end()) {
        try {
            std::size_t pos = 0;
            val = std::stod(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": not a number: " + it->second);
        }
    }
    seen_[key] = format_double(val);
    return val;
}

int Config::get_int(const std::string& key, int fallback) const {
    auto it = kv_.find(key);
    int val = fallback;
    if (it != kv_.end()) {
        try {
            std::size_t pos = 0;
            val = std::stoi(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": not an integer: " + it->second);
        }
    }
    seen_[key] = std::to_string(val);
    return val;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = kv_.find(key);
    std::uint64_t val = fallback;
    if (it != kv_.end()) {
        try {
            std::size_t pos = 0;
            val = std::stoull(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": not an unsigned integer: " + it->second);
        }
    }
    seen_[key] = std::to_string(val);
    return val;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = kv_.find(key);
    bool val = fallback;
    if (it != kv_.end()) {
        const std::string& s = it->second;
        if (s == "true" || s == "1" || s == "on")
            val = true;
        else if (s == "false" || s == "0" || s == "off")
            val = false;
        else
            throw ConfigError("config key " + key + ": not a boolean: " + s);
    }
    seen_[key] = val ? "true" : "false";
    return val;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    const std::string val = it != kv_.end() ? it->second : fallback;
    seen_[key] = val;
    return val;
}

std::map<std::string, std::string> Config::resolved() const {
    std::map<std::string, std::string> out = seen_;
    for (const auto& [k, v] : kv_) out.emplace(k, v);
    return out;
}

}  // namespace sllg
