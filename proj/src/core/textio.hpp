#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace pod {

// Round-trip exact formatting ("%.17g") for data files; callers that want
// stable fixed-width tables use fmt_fixed instead. Both are locale-free.
inline std::string fmt_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt_fixed(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

inline std::string fmt_hex64(uint64_t x) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

inline double parse_double(const std::string& tok, const std::string& where) {
    try {
        size_t pos = 0;
        const double x = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return x;
    } catch (const std::exception&) {
        fail_io("expected a number in " + where + ", got '" + tok + "'");
    }
}

inline long long parse_int(const std::string& tok, const std::string& where) {
    try {
        size_t pos = 0;
        const long long x = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return x;
    } catch (const std::exception&) {
        fail_io("expected an integer in " + where + ", got '" + tok + "'");
    }
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_io("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail_io("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) fail_io("write to '" + path.string() + "' failed");
}

} // namespace pod
