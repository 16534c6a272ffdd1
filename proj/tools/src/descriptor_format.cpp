#include "descriptor_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace aginv::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string> kGroupKeys = {"kind", "label", "char",       "g",
                                          "r",    "u",     "rho",        "commutative"};
const std::set<std::string> kHomSpaceOnlyKeys = {"g_H", "r_H", "stabilizer_connected"};

bool parse_bool(const std::string& value, std::size_t line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw DescriptorParseError(line, "expected true or false, got '" + value + "'");
}

std::uint32_t parse_count(const std::string& value, std::size_t line) {
    if (value.empty() || !std::all_of(value.begin(), value.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
        throw DescriptorParseError(line, "expected a non-negative integer, got '" + value + "'");
    try {
        unsigned long v = std::stoul(value);
        if (v > 0xffffffffUL) throw std::out_of_range("count");
        return std::uint32_t(v);
    } catch (const std::out_of_range&) {
        throw DescriptorParseError(line, "count out of range: '" + value + "'");
    }
}

Int parse_int(const std::string& value, std::size_t line) {
    if (value.empty() ||
        !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw DescriptorParseError(line, "expected a non-negative integer, got '" + value + "'");
    return Int(value);
}

}  // namespace

ParsedDescriptor parse_descriptor(std::istream& in) {
    std::map<std::string, std::pair<std::string, std::size_t>> values;  // key -> (value, line)
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw DescriptorParseError(line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw DescriptorParseError(line_no, "missing key before '='");
        if (!kGroupKeys.contains(key) && !kHomSpaceOnlyKeys.contains(key))
            throw DescriptorParseError(line_no, "unknown key '" + key + "'");
        if (values.contains(key))
            throw DescriptorParseError(line_no, "duplicate key '" + key + "' (first on line " +
                                                    std::to_string(values[key].second) + ")");
        if (value.empty()) throw DescriptorParseError(line_no, "missing value for '" + key + "'");
        values[key] = {value, line_no};
    }

    auto kind_it = values.find("kind");
    if (kind_it == values.end())
        throw DescriptorParseError(line_no, "missing required key 'kind'");
    const std::string& kind = kind_it->second.first;
    if (kind != "group" && kind != "homspace")
        throw DescriptorParseError(kind_it->second.second,
                                   "kind must be 'group' or 'homspace', got '" + kind + "'");
    if (kind == "group")
        for (const auto& key : kHomSpaceOnlyKeys)
            if (values.contains(key))
                throw DescriptorParseError(values[key].second,
                                           "key '" + key + "' is only valid for kind = homspace");

    GroupDescriptor g;
    auto take = [&](const char* key) -> std::pair<std::string, std::size_t>* {
        auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };
    if (auto* v = take("label")) g.label = v->first;
    if (auto* v = take("char")) g.char_p = parse_int(v->first, v->second);
    if (auto* v = take("g")) g.g = parse_count(v->first, v->second);
    if (auto* v = take("r")) g.r = parse_count(v->first, v->second);
    if (auto* v = take("u")) g.u = parse_count(v->first, v->second);
    if (auto* v = take("rho")) g.rho = parse_count(v->first, v->second);
    if (auto* v = take("commutative")) g.commutative = parse_bool(v->first, v->second);

    if (kind == "group") return g;

    HomSpaceDescriptor h;
    h.group = g;
    if (auto* v = take("g_H")) h.g_h = parse_count(v->first, v->second);
    if (auto* v = take("r_H")) h.r_h = parse_count(v->first, v->second);
    if (auto* v = take("stabilizer_connected"))
        h.stabilizer_connected = parse_bool(v->first, v->second);
    return h;
}

ParsedDescriptor parse_descriptor_text(const std::string& text) {
    std::istringstream in(text);
    return parse_descriptor(in);
}

ParsedDescriptor parse_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open descriptor file: " + path);
    return parse_descriptor(in);
}

}  // namespace aginv::cli
