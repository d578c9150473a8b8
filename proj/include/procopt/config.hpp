#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace procopt {

/// One `[name]` block of a key/value config file, keys in file order.
/// Keys may repeat (e.g. several `scenario =` lines under [targets]).
struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(const std::string& key) const;
    std::string require(const std::string& key) const;
    std::vector<std::string> get_all(const std::string& key) const;
};

/// Plain-text config: `[section]` headers, `key = value` lines, `#` comments.
/// Sections may repeat ([variable] appears once per process variable).
struct ConfigFile {
    std::vector<ConfigSection> sections;

    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text,
                                   const std::string& origin = "<string>");

    std::vector<const ConfigSection*> all(const std::string& name) const;
    /// The single section of this name, or nullptr when absent.
    const ConfigSection* find(const std::string& name) const;
};

std::string trim(const std::string& s);
std::vector<std::string> split_list(const std::string& s, char sep = ',');
double parse_double(const std::string& s, const std::string& context);
long parse_long(const std::string& s, const std::string& context);
bool parse_bool(const std::string& s, const std::string& context);

}  // namespace procopt
