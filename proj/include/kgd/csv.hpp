#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kgd::csv {

/// 17 significant digits, '.' separator, no locale: round-trips every double.
std::string format_number(double v);

/// Parses a whole field as a double (optionally "p/q"). Throws InvalidArgument.
double parse_number(std::string_view text);

using Field = std::variant<double, std::string>;

/// One line of an output file. Comment lines keep their text after "#",
/// blank lines have neither comment nor fields.
struct Line {
    enum class Kind { Comment, Blank, Record } kind = Kind::Record;
    std::string comment;
    std::vector<Field> fields;
};

struct Document {
    std::vector<Line> lines;
};

/// Splits on ',' (no quoting: every field this tool writes is a bare token).
/// Fields that parse fully as numbers become doubles.
Document read(std::istream& in);
void write(std::ostream& out, const Document& doc);

}  // namespace kgd::csv
