#include "bintrans/sequence.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace bintrans {

Sequence::Sequence(std::vector<Rational> values, std::size_t valid_from)
    : values_(std::move(values)), valid_from_(valid_from)
{
    if (values_.empty()) {
        throw std::invalid_argument("sequence must hold at least one term");
    }
    if (valid_from_ >= values_.size()) {
        throw std::invalid_argument("valid_from " + std::to_string(valid_from_) +
                                    " leaves no defined entry in a sequence of length " +
                                    std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < valid_from_; ++i) {
        values_[i] = Rational{};
    }
}

Sequence Sequence::zeros(std::size_t n, std::size_t valid_from)
{
    return Sequence(std::vector<Rational>(n), valid_from);
}

const Rational& Sequence::at(std::size_t i) const
{
    if (i >= values_.size()) {
        throw std::out_of_range("sequence index " + std::to_string(i) +
                                " past end (length " + std::to_string(values_.size()) + ")");
    }
    if (i < valid_from_) {
        throw std::domain_error("sequence entry " + std::to_string(i) +
                                " is below valid_from " + std::to_string(valid_from_));
    }
    return values_[i];
}

std::ostream& operator<<(std::ostream& os, const Sequence& s)
{
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        if (i < s.valid_from()) {
            os << "_";
        } else {
            os << s.at(i);
        }
    }
    return os << ')';
}

}  // namespace bintrans
