// Plain-text numeric interchange. Matrices are comma-separated decimal,
// one row per line, no header; vectors are one value per line. Doubles
// are written in shortest round-trip form, so write -> read is lossless.
//
// Parsing is strict: every token must be a complete finite decimal
// number, every matrix row must have the same width, and diagnostics
// carry file and line.
#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "binlsq/errors.hpp"
#include "binlsq/matrix.hpp"

namespace binlsq {

inline std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline double parse_double_token(std::string_view token, const std::string& path,
                                 std::size_t line_no) {
    const std::string_view t = trim(token);
    const std::string where = path + ":" + std::to_string(line_no);
    if (t.empty()) throw ParseError(where + ": empty numeric field");
    double value = 0.0;
    const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
    if (result.ec != std::errc{} || result.ptr != t.data() + t.size()) {
        throw ParseError(where + ": cannot parse '" + std::string(t) + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw ParseError(where + ": non-finite value '" + std::string(t) + "'");
    }
    return value;
}

inline std::vector<double> parse_csv_line(const std::string& line, const std::string& path,
                                          std::size_t line_no) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        const std::size_t end = comma == std::string::npos ? line.size() : comma;
        values.push_back(parse_double_token(
            std::string_view(line).substr(start, end - start), path, line_no));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

inline std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open for reading");
    return in;
}

inline std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open for writing");
    return out;
}

inline void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw Error(path + ": write failed");
}

}  // namespace detail

inline Matrix read_matrix_csv(const std::string& path) {
    std::ifstream in = detail::open_for_read(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": blank line");
        }
        rows.push_back(detail::parse_csv_line(line, path, line_no));
        if (rows.back().size() != rows.front().size()) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": row has " +
                             std::to_string(rows.back().size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        }
    }
    if (rows.empty()) throw ParseError(path + ": empty matrix file");
    Matrix a(rows.size(), rows.front().size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
    }
    return a;
}

inline Vector read_vector(const std::string& path) {
    std::ifstream in = detail::open_for_read(path);
    Vector values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": blank line");
        }
        values.push_back(detail::parse_double_token(line, path, line_no));
    }
    if (values.empty()) throw ParseError(path + ": empty vector file");
    return values;
}

inline void write_matrix_csv(const std::string& path, const Matrix& a) {
    std::ofstream out = detail::open_for_write(path);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_double(a(i, j));
        }
        out << '\n';
    }
    detail::finish_write(out, path);
}

inline void write_vector(const std::string& path, const Vector& v) {
    std::ofstream out = detail::open_for_write(path);
    for (double value : v) out << format_double(value) << '\n';
    detail::finish_write(out, path);
}

}  // namespace binlsq
