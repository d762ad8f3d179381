#include "bintrans/integer.hpp"

#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace bintrans {

Integer::Integer(std::string_view text)
{
    bool ok = !text.empty();
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    ok = ok && i < text.size();
    for (std::size_t j = i; j < text.size(); ++j) {
        ok = ok && text[j] >= '0' && text[j] <= '9';
    }
    if (!ok) {
        throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
    }
    // mpz_set_str does not accept a leading '+'.
    const std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    mpz_init(z_);
    if (mpz_set_str(z_, digits.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
    }
}

Integer& Integer::divide_exact(const Integer& divisor)
{
    if (divisor.is_zero()) {
        throw std::domain_error("integer division by zero");
    }
    mpz_divexact(z_, z_, divisor.z_);
    return *this;
}

long Integer::to_long() const
{
    if (!mpz_fits_slong_p(z_)) {
        throw std::overflow_error("integer does not fit a machine long: " + str());
    }
    return mpz_get_si(z_);
}

std::string Integer::str() const
{
    const std::unique_ptr<char, decltype(&std::free)> buf(mpz_get_str(nullptr, 10, z_),
                                                          &std::free);
    return std::string(buf.get());
}

std::ostream& operator<<(std::ostream& os, const Integer& v)
{
    return os << v.str();
}

}  // namespace bintrans
