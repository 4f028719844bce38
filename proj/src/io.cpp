// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepscope/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "sepscope/error.hpp"

namespace sepscope {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct Token {
    std::size_t column;  // 1-based
    std::string_view text;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({start + 1, line.substr(start, i - start)});
    }
    return tokens;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::optional<double> to_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<std::size_t> to_count(std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
    return buf;
}

Complex parse_complex(std::string_view token) {
    auto bad = [&]() -> Complex {
        throw Error(ErrorKind::ParseError, "not a complex number: '" + std::string(token) + "'");
    };
    if (token.empty()) return bad();
    if (token.back() != 'j' && token.back() != 'J') {
        const auto re = to_double(token);
        return re ? Complex{*re, 0.0} : bad();
    }
    const auto body = token.substr(0, token.size() - 1);
    // The split is the last sign that does not belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = to_double(body);
        return im ? Complex{0.0, *im} : bad();
    }
    const auto re = to_double(body.substr(0, split));
    const auto im = to_double(body.substr(split));
    if (!re || !im) return bad();
    return {*re, *im};
}

MatrixFile parse_matrix_file(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    auto next_content = [&]() -> const Line* {
        while (i < lines.size() && is_blank_or_comment(lines[i].text)) ++i;
        return i < lines.size() ? &lines[i++] : nullptr;
    };

    const Line* header = next_content();
    if (!header) throw Error(ErrorKind::ParseError, "line 1, column 1: missing 'dA dB' header");
    const auto head = tokenize(header->text);
    if (head.size() != 2) fail_at(header->number, 1, "header must be exactly 'dA dB'");
    const auto da = to_count(head[0].text);
    const auto db = to_count(head[1].text);
    if (!da || *da == 0) fail_at(header->number, head[0].column, "dA must be a positive integer");
    if (!db || *db == 0) fail_at(header->number, head[1].column, "dB must be a positive integer");

    const BipartiteDims dims{*da, *db};
    const std::size_t n = dims.total();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
        const Line* line = next_content();
        if (!line) {
            const std::size_t last = lines.empty() ? 1 : lines.back().number;
            fail_at(last, 1, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(row));
        }
        const auto tokens = tokenize(line->text);
        if (tokens.size() != n) {
            fail_at(line->number, 1,
                    "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
        }
        for (const auto& tok : tokens) {
            try {
                entries.push_back(parse_complex(tok.text));
            } catch (const Error&) {
                fail_at(line->number, tok.column, "not a complex number: '" + std::string(tok.text) + "'");
            }
        }
    }
    if (const Line* extra = next_content()) fail_at(extra->number, 1, "unexpected content after the matrix");
    return {ComplexMatrix(n, n, std::move(entries)), dims};
}

std::string emit_matrix_file(const ComplexMatrix& m, BipartiteDims dims) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix side does not match dA*dB");
    }
    std::string out = std::to_string(dims.dA) + " " + std::to_string(dims.dB) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += format_complex(m(r, c));
        }
        out += '\n';
    }
    return out;
}

DensityMatrix parse_density_matrix(std::string_view text) {
    auto file = parse_matrix_file(text);
    return DensityMatrix::from_matrix(file.matrix, file.dims);
}

StateSpec parse_state_spec(std::string_view text) {
    std::optional<Family> family;
    std::optional<std::size_t> dim;
    std::map<std::string, double> params;
    for (const auto& line : split_lines(text)) {
        if (is_blank_or_comment(line.text)) continue;
        const auto eq = line.text.find('=');
        if (eq == std::string_view::npos) fail_at(line.number, 1, "expected key=value");
        const auto key = trim(line.text.substr(0, eq));
        const auto value = trim(line.text.substr(eq + 1));
        const std::size_t value_column = eq + 2;
        if (key.empty()) fail_at(line.number, 1, "empty key");
        if (key == "family") {
            family = parse_family(value);
            if (!family) fail_at(line.number, value_column, "unknown family '" + std::string(value) + "'");
        } else if (key == "dim") {
            dim = to_count(value);
            if (!dim || *dim == 0) fail_at(line.number, value_column, "dim must be a positive integer");
        } else {
            const auto v = to_double(value);
            if (!v) fail_at(line.number, value_column, "'" + std::string(value) + "' is not a number");
            if (!params.emplace(std::string(key), *v).second) {
                fail_at(line.number, 1, "duplicate key '" + std::string(key) + "'");
            }
        }
    }
    if (!family) throw Error(ErrorKind::ParseError, "line 1, column 1: state spec has no family");
    return {*family, std::move(params), dim.value_or(default_dimension(*family))};
}

std::string emit_state_spec(const StateSpec& spec) {
    std::string out = "family=" + std::string(family_name(spec.family)) + "\n";
    out += "dim=" + std::to_string(spec.truncation_dim) + "\n";
    for (const auto& [key, value] : spec.params) out += key + "=" + format_number(value, 17) + "\n";
    return out;
}

std::string format_number(double value, int significant_digits) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

std::string format_params(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ';';
        out += key + "=" + format_number(value);
    }
    return out;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string emit_report_csv(const std::vector<ReportRow>& rows) {
    std::string out(kReportCsvHeader);
    out += '\n';
    for (const auto& row : rows) {
        out += csv_escape(row.family) + ',' + csv_escape(row.params) + ',' + std::to_string(row.dim) + ',';
        if (row.report) {
            const auto& r = *row.report;
            out += format_number(r.realignment_trace_norm) + ',' + format_number(r.ccn) + ',' +
                   format_number(r.ppt_min_eigenvalue) + ',' + (r.is_symmetric ? "true" : "false") + ',' +
                   std::string(to_string(r.rccn_verdict)) + ',' + std::string(to_string(r.ppt_verdict));
        } else {
            out += "nan,nan,nan,,error,error";
        }
        out += '\n';
    }
    return out;
}

std::vector<ReportRow> report_rows(const SweepResult& result) {
    std::vector<ReportRow> rows;
    rows.reserve(result.rows.size());
    for (const auto& r : result.rows) {
        rows.push_back({std::string(family_name(result.family)), format_params(r.params), r.dim, r.report});
    }
    return rows;
}

}  // namespace sepscope
