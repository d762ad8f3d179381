#pragma once

#include <cstddef>
#include <iosfwd>
#include <initializer_list>
#include <vector>

#include "bintrans/rational.hpp"

namespace bintrans {

/// Finite prefix s_0 .. s_{N-1} of a sequence. Entries at indices below
/// valid_from are placeholders (stored as 0) standing for terms the defining
/// formula does not cover -- for example the output of (n nabla)^p at n < p.
/// Reading a placeholder throws; operations only consume defined entries.
///
/// A Sequence is an immutable value: it can be shared or moved between
/// threads freely.
class Sequence {
  public:
    /// Throws std::invalid_argument when values is empty or valid_from
    /// leaves no defined entry. Entries below valid_from are zeroed.
    explicit Sequence(std::vector<Rational> values, std::size_t valid_from = 0);
    Sequence(std::initializer_list<Rational> values)
        : Sequence(std::vector<Rational>(values), 0)
    {
    }

    static Sequence zeros(std::size_t n, std::size_t valid_from = 0);

    std::size_t size() const { return values_.size(); }
    std::size_t valid_from() const { return valid_from_; }

    /// Defined entry at index i. Throws std::out_of_range past the end and
    /// std::domain_error below valid_from.
    const Rational& at(std::size_t i) const;

    friend bool operator==(const Sequence& a, const Sequence& b) = default;
    friend std::ostream& operator<<(std::ostream& os, const Sequence& s);

  private:
    std::vector<Rational> values_;
    std::size_t valid_from_;
};

}  // namespace bintrans
