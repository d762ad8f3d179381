#include "bintrans/sequence_io.hpp"

#include <istream>
#include <ostream>

namespace bintrans {

Rational parse_rational_literal(const std::string& text)
{
    return Rational{text};  // the constructor enforces the literal grammar
}

std::vector<Rational> read_sequence_file(std::istream& in)
{
    std::vector<Rational> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t");
        const std::string term = line.substr(first, last - first + 1);
        if (term[0] == '#') {
            continue;
        }
        try {
            values.push_back(parse_rational_literal(term));
        } catch (const std::invalid_argument& e) {
            throw SequenceParseError(line_no, e.what());
        }
    }
    if (values.empty()) {
        throw SequenceParseError(line_no == 0 ? 1 : line_no, "no data lines in sequence file");
    }
    return values;
}

void write_sequence_lines(std::ostream& out, const Sequence& s, bool machine)
{
    const char* placeholder = machine ? "_" : "·";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i < s.valid_from()) {
            out << placeholder << '\n';
        } else {
            out << s.at(i) << '\n';
        }
    }
}

}  // namespace bintrans
