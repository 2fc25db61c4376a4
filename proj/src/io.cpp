#include "specktral/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <vector>

namespace specktral {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::uint64_t parse_uint(const std::string& tok, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw ParseError(std::string(what) + " out of range");
    }
}

std::vector<Elem> parse_row(const std::vector<std::string>& toks, std::size_t n, std::uint32_t q) {
    std::vector<std::string> entries = toks;
    if (toks.size() == 1 && n > 1 && toks[0].size() == n && q <= 10) {
        entries.clear();
        for (char ch : toks[0]) entries.emplace_back(1, ch);
    }
    if (entries.size() != n) throw ParseError("row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
    std::vector<Elem> row(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto v = parse_uint(entries[j], "matrix entry");
        if (v >= q) throw ParseError("entry " + entries[j] + " not in [0, q)");
        row[j] = static_cast<Elem>(v);
    }
    return row;
}

struct ParsedCode {
    FqMatrix matrix;
    std::optional<FqVector> offset;
};

ParsedCode parse_code(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty input, expected header 'q n k'");
    const auto head = tokens(line);
    if (head.size() != 3) throw ParseError("header must be 'q n k'");
    const auto q = parse_uint(head[0], "q");
    const auto n = static_cast<std::size_t>(parse_uint(head[1], "n"));
    const auto k = static_cast<std::size_t>(parse_uint(head[2], "k"));
    if (q > 0xFFFFFFFFull) throw ParseError("q out of range");
    FieldOrder field = [&] {
        try {
            return FieldOrder(static_cast<std::uint32_t>(q));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    if (n == 0) throw ParseError("n must be positive");

    FqMatrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (!next_content_line(in, line)) throw ParseError("expected " + std::to_string(k) + " rows");
        const auto row = parse_row(tokens(line), n, field.value());
        for (std::size_t j = 0; j < n; ++j) m.set(r, j, row[j]);
    }
    ParsedCode parsed{std::move(m), std::nullopt};
    if (next_content_line(in, line)) {
        auto toks = tokens(line);
        if (toks.empty() || toks[0] != "+") throw ParseError("unexpected trailing line: " + line);
        toks.erase(toks.begin());
        parsed.offset = FqVector(field, parse_row(toks, n, field.value()));
        if (next_content_line(in, line)) throw ParseError("unexpected trailing line: " + line);
    }
    return parsed;
}

}  // namespace

FqMatrix read_matrix(std::istream& in) {
    auto parsed = parse_code(in);
    if (parsed.offset) throw ParseError("offset line not allowed in a plain matrix");
    return std::move(parsed.matrix);
}

AffineCode read_code(std::istream& in) {
    auto parsed = parse_code(in);
    auto linear = LinearCode::from_matrix(parsed.matrix);
    if (!parsed.offset) return AffineCode(std::move(linear));
    return AffineCode(*parsed.offset, std::move(linear));
}

void write_matrix(std::ostream& out, const FqMatrix& m) {
    out << m.field().value() << ' ' << m.cols() << ' ' << m.rows() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(r, j);
        out << '\n';
    }
}

void write_code(std::ostream& out, const LinearCode& c) { write_matrix(out, c.generator()); }

void write_code(std::ostream& out, const AffineCode& c) {
    write_matrix(out, c.linear().generator());
    if (c.is_linear()) return;
    out << '+';
    for (Elem e : c.offset().coords()) out << ' ' << e;
    out << '\n';
}

DenseFunction read_function(std::istream& in, std::optional<Domain> fallback, const Limits& limits) {
    std::string line;
    std::vector<std::vector<std::string>> entries;
    std::optional<Domain> domain;
    bool first = true;
    while (next_content_line(in, line)) {
        auto toks = tokens(line);
        if (first && toks.size() == 2) {
            domain = Domain{static_cast<std::uint32_t>(parse_uint(toks[0], "q")),
                            static_cast<std::size_t>(parse_uint(toks[1], "n"))};
        } else if (toks.size() == 3) {
            entries.push_back(std::move(toks));
        } else {
            throw ParseError("expected 'index re im', got: " + line);
        }
        first = false;
    }
    if (!domain) domain = fallback;
    if (!domain) throw ParseError("function domain unknown: add a 'q n' header or pass --q/--n");

    auto f = [&] {
        try {
            return DenseFunction::zero(FieldOrder(domain->q), domain->n, limits);
        } catch (const GuardExceeded&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    std::vector<std::complex<double>> values = f.values();
    for (const auto& e : entries) {
        const auto index = parse_uint(e[0], "index");
        if (index >= values.size()) throw ParseError("index " + e[0] + " outside q^n");
        try {
            values[index] = {std::stod(e[1]), std::stod(e[2])};
        } catch (const std::exception&) {
            throw ParseError("bad number in: " + e[1] + " " + e[2]);
        }
    }
    return f.with_values(std::move(values));
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

void write_function(std::ostream& out, const DenseFunction& f, double tol) {
    out << f.field().value() << ' ' << f.length() << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f[i]) <= tol) continue;
        out << i << ' ' << format_double(f[i].real()) << ' ' << format_double(f[i].imag()) << '\n';
    }
}

}  // namespace specktral
