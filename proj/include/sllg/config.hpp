#ifndef SLLG_CONFIG_HPP
#define SLLG_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

namespace sllg {

// Flat dotted-key configuration: `key = value` lines in a file, overridden
// by --set key=value on the command line.  Every lookup records the resolved
// value (explicit or default) so the manifest can echo the full effective
// configuration.
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    void apply_override(const std::string& key_equals_value);
    void set(const std::string& key, const std::string& value);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    // resolved (key, value) pairs seen so far, plus all explicit entries
    std::map<std::string, std::string> resolved() const;

private:
    std::map<std::string, std::string> kv_;
    mutable std::map<std::string, std::string> seen_;
};

}  // namespace sllg

#endif
