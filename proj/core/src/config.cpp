#include "pslab/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pslab {

const ConfigValue& ConfigTable::get(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end())
        throw InputError("missing required key '" + key + "'");
    return it->second;
}

std::string ConfigTable::get_string(const std::string& key) const {
    const ConfigValue& v = get(key);
    if (v.kind != ConfigValue::Kind::String)
        throw InputError("key '" + key + "' must be a string");
    return v.str;
}

std::int64_t ConfigTable::get_int(const std::string& key) const {
    const ConfigValue& v = get(key);
    if (v.kind != ConfigValue::Kind::Int)
        throw InputError("key '" + key + "' must be an integer");
    return v.integer;
}

std::int64_t ConfigTable::get_int_or(const std::string& key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    return get_int(key);
}

std::vector<std::string> ConfigTable::get_strings(const std::string& key) const {
    const ConfigValue& v = get(key);
    if (v.kind == ConfigValue::Kind::StringArray) return v.strings;
    throw InputError("key '" + key + "' must be an array of strings");
}

std::vector<std::int64_t> ConfigTable::get_ints(const std::string& key) const {
    const ConfigValue& v = get(key);
    if (v.kind == ConfigValue::Kind::IntArray) return v.integers;
    if (v.kind == ConfigValue::Kind::StringArray && v.strings.empty()) return {};
    throw InputError("key '" + key + "' must be an array of integers");
}

const ConfigTable* ConfigDoc::table(const std::string& name) const {
    auto it = tables.find(name);
    return it == tables.end() ? nullptr : &it->second;
}

const std::vector<ConfigTable>* ConfigDoc::array(const std::string& name) const {
    auto it = table_arrays.find(name);
    return it == table_arrays.end() ? nullptr : &it->second;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_ws_inline() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string read_ident(Cursor& cur) {
    cur.skip_ws_inline();
    if (cur.eof() || !ident_char(cur.peek())) cur.fail("expected identifier");
    std::string out;
    while (!cur.eof() && ident_char(cur.peek())) out.push_back(cur.advance());
    return out;
}

std::string read_quoted(Cursor& cur) {
    if (cur.eof() || cur.peek() != '"') cur.fail("expected '\"'");
    cur.advance();
    std::string out;
    while (true) {
        if (cur.eof() || cur.peek() == '\n') cur.fail("unterminated string");
        char c = cur.advance();
        if (c == '"') break;
        if (c == '\\') {
            if (cur.eof()) cur.fail("unterminated escape");
            char e = cur.advance();
            switch (e) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                default: cur.fail("unsupported escape sequence");
            }
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::int64_t read_integer(Cursor& cur) {
    std::string digits;
    if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) digits.push_back(cur.advance());
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        digits.push_back(cur.advance());
    if (digits.empty() || digits == "-" || digits == "+") cur.fail("expected integer");
    return std::stoll(digits);
}

ConfigValue read_value(Cursor& cur) {
    cur.skip_ws_inline();
    if (cur.eof()) cur.fail("expected value");
    ConfigValue v;
    v.line = cur.line;
    char c = cur.peek();
    if (c == '"') {
        v.kind = ConfigValue::Kind::String;
        v.str = read_quoted(cur);
    } else if (c == '[') {
        cur.advance();
        bool first = true;
        bool is_string = false;
        while (true) {
            cur.skip_ws_inline();
            while (!cur.eof() && cur.peek() == '\n') {
                cur.advance();
                cur.skip_ws_inline();
            }
            if (cur.eof()) cur.fail("unterminated array");
            if (cur.peek() == ']') {
                cur.advance();
                break;
            }
            if (!first) {
                if (cur.peek() != ',') cur.fail("expected ',' in array");
                cur.advance();
                cur.skip_ws_inline();
                while (!cur.eof() && cur.peek() == '\n') {
                    cur.advance();
                    cur.skip_ws_inline();
                }
                if (!cur.eof() && cur.peek() == ']') {  // trailing comma
                    cur.advance();
                    break;
                }
            }
            if (cur.eof()) cur.fail("unterminated array");
            if (cur.peek() == '"') {
                if (!first && !is_string) cur.fail("mixed array element types");
                is_string = true;
                v.strings.push_back(read_quoted(cur));
            } else {
                if (!first && is_string) cur.fail("mixed array element types");
                v.integers.push_back(read_integer(cur));
            }
            first = false;
        }
        v.kind = is_string || v.integers.empty() ? ConfigValue::Kind::StringArray
                                                 : ConfigValue::Kind::IntArray;
    } else {
        v.kind = ConfigValue::Kind::Int;
        v.integer = read_integer(cur);
    }
    return v;
}

void end_of_line(Cursor& cur) {
    cur.skip_ws_inline();
    if (!cur.eof() && cur.peek() == '#')
        while (!cur.eof() && cur.peek() != '\n') cur.advance();
    if (!cur.eof()) {
        if (cur.peek() != '\n') cur.fail("unexpected trailing characters");
        cur.advance();
    }
}

} // namespace

ConfigDoc parse_config(const std::string& text) {
    ConfigDoc doc;
    Cursor cur{text};
    ConfigTable* current = &doc.root;
    while (!cur.eof()) {
        cur.skip_ws_inline();
        if (cur.eof()) break;
        char c = cur.peek();
        if (c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '#') {
            while (!cur.eof() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (c == '[') {
            cur.advance();
            bool is_array = false;
            if (!cur.eof() && cur.peek() == '[') {
                is_array = true;
                cur.advance();
            }
            std::string name = read_ident(cur);
            cur.skip_ws_inline();
            if (cur.eof() || cur.peek() != ']') cur.fail("expected ']'");
            cur.advance();
            if (is_array) {
                if (cur.eof() || cur.peek() != ']') cur.fail("expected ']]'");
                cur.advance();
                auto& vec = doc.table_arrays[name];
                vec.emplace_back();
                vec.back().line = cur.line;
                current = &vec.back();
            } else {
                if (doc.tables.count(name)) cur.fail("duplicate table [" + name + "]");
                doc.tables[name].line = cur.line;
                current = &doc.tables[name];
            }
            end_of_line(cur);
            continue;
        }
        int key_line = cur.line;
        std::string key = read_ident(cur);
        cur.skip_ws_inline();
        if (cur.eof() || cur.peek() != '=') cur.fail("expected '=' after key '" + key + "'");
        cur.advance();
        ConfigValue value = read_value(cur);
        value.line = key_line;
        if (current->entries.count(key)) cur.fail("duplicate key '" + key + "'");
        current->entries.emplace(key, std::move(value));
        end_of_line(cur);
    }
    return doc;
}

ConfigDoc parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace pslab
