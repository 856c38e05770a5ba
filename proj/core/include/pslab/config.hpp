#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

/// Reader for the TOML-syntax subset used by algebra spec files and the
/// normalization / point-family configuration documents:
/// `[table]` and `[[array-of-tables]]` headers, and `key = value` entries
/// where value is a quoted string, an integer, or a homogeneous array of
/// those. Errors carry line/column positions.
struct ConfigValue {
    enum class Kind { String, Int, StringArray, IntArray };
    Kind kind = Kind::Int;
    std::string str;
    std::int64_t integer = 0;
    std::vector<std::string> strings;
    std::vector<std::int64_t> integers;
    int line = 0;
};

struct ConfigTable {
    std::map<std::string, ConfigValue> entries;
    int line = 0;

    bool has(const std::string& key) const { return entries.count(key) != 0; }
    const ConfigValue& get(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    std::vector<std::string> get_strings(const std::string& key) const;
    std::vector<std::int64_t> get_ints(const std::string& key) const;
};

struct ConfigDoc {
    ConfigTable root;
    std::map<std::string, ConfigTable> tables;
    std::map<std::string, std::vector<ConfigTable>> table_arrays;

    const ConfigTable* table(const std::string& name) const;
    const std::vector<ConfigTable>* array(const std::string& name) const;
};

ConfigDoc parse_config(const std::string& text);
ConfigDoc parse_config_file(const std::string& path);

} // namespace pslab
