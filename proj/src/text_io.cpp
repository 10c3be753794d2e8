#include "manhattan/text_io.hpp"

#include <limits>
#include <sstream>

namespace manhattan {

Skyline parse_skyline(std::string_view text) {
    std::vector<uint32_t> heights;
    size_t line = 1;
    size_t column = 1;
    size_t i = 0;
    const size_t n = text.size();
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < n) {
        const char c = text[i];
        if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            ++column;
            ++i;
            continue;
        }
        if (!is_digit(c)) throw ParseError(line, column, "expected a non-negative integer");
        const size_t start_column = column;
        uint64_t value = 0;
        while (i < n && is_digit(text[i])) {
            value = value * 10 + static_cast<uint64_t>(text[i] - '0');
            if (value > std::numeric_limits<uint32_t>::max())
                throw ParseError(line, start_column, "column height out of range");
            ++i;
            ++column;
        }
        heights.push_back(static_cast<uint32_t>(value));
    }
    return Skyline(std::move(heights));
}

std::string format_skyline(const Skyline& sk) {
    std::ostringstream out;
    for (size_t i = 0; i < sk.heights.size(); ++i) {
        if (i > 0) out << ' ';
        out << sk.heights[i];
    }
    out << '\n';
    return out.str();
}

}  // namespace manhattan
