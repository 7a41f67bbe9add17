/**
 * @file quadruple_io.cpp
 * @brief Quadruple file parsing and formatting.
 */

#include "qpl/cli/quadruple_io.hpp"

#include "qpl/util/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qpl::cli {

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t k = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (k == tok.size()) return false;
    for (; k < tok.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return false;
    return true;
}

}  // namespace

std::vector<QuadrupleRecord> parse_quadruple_text(const std::string& text) {
    std::vector<QuadrupleRecord> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<Int> values;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos == line.size()) break;
            const std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::string tok = line.substr(start, pos - start);
            if (!is_integer_token(tok)) throw ParseError("not an integer: '" + tok + "'", lineno, start + 1);
            if (tok[0] == '+') tok.erase(0, 1);
            values.emplace_back(tok);
        }
        if (values.empty()) continue;
        if (values.size() != 40) throw CountMismatch(lineno, values.size());
        std::array<Int, 40> coords;
        std::move(values.begin(), values.end(), coords.begin());
        out.push_back({lineno, Quadruple(std::move(coords))});
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<QuadrupleRecord> parse_quadruple_file(const std::filesystem::path& path) {
    return parse_quadruple_text(read_text_file(path));
}

std::string format_quadruples(const std::vector<Quadruple>& qs) {
    std::string out;
    for (const auto& q : qs) {
        out += q.to_line();
        out += '\n';
    }
    return out;
}

}  // namespace qpl::cli
