#include "kgd/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "kgd/error.hpp"

namespace kgd::csv {

namespace {

bool parse_plain(std::string_view s, double& v) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool try_number(std::string_view s, double& v) {
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        double p = 0.0;
        double q = 0.0;
        if (!parse_plain(s.substr(0, slash), p) || !parse_plain(s.substr(slash + 1), q)) return false;
        if (q == 0.0) return false;
        v = p / q;
        return std::isfinite(v);
    }
    return parse_plain(s, v);
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(std::string_view text) {
    double v = 0.0;
    if (!try_number(text, v)) {
        throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
    }
    return v;
}

Document read(std::istream& in) {
    Document doc;
    std::string text;
    while (std::getline(in, text)) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        Line line;
        if (text.empty()) {
            line.kind = Line::Kind::Blank;
        } else if (text.front() == '#') {
            line.kind = Line::Kind::Comment;
            line.comment = text.substr(1);
        } else {
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = text.find(',', start);
                const std::string_view tok =
                    std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos
                                                                                    : comma - start);
                double v = 0.0;
                // Fractions stay text on the way back in; only plain numbers round-trip as doubles.
                if (tok.find('/') == std::string_view::npos && parse_plain(tok, v)) {
                    line.fields.emplace_back(v);
                } else {
                    line.fields.emplace_back(std::string(tok));
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        doc.lines.push_back(std::move(line));
    }
    return doc;
}

void write(std::ostream& out, const Document& doc) {
    for (const Line& line : doc.lines) {
        switch (line.kind) {
            case Line::Kind::Blank:
                break;
            case Line::Kind::Comment:
                out << '#' << line.comment;
                break;
            case Line::Kind::Record:
                for (std::size_t i = 0; i < line.fields.size(); ++i) {
                    if (i > 0) out << ',';
                    if (const auto* d = std::get_if<double>(&line.fields[i])) {
                        out << format_number(*d);
                    } else {
                        out << std::get<std::string>(line.fields[i]);
                    }
                }
                break;
        }
        out << '\n';
    }
}

}  // namespace kgd::csv
