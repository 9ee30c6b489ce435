#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace confpair {

using Coeff = boost::multiprecision::cpp_int;

// Every sign in the system depends only on d mod 2.
enum class Parity { even, odd };

constexpr Parity parity_of(int d) { return d % 2 == 0 ? Parity::even : Parity::odd; }
constexpr bool is_even(Parity p) { return p == Parity::even; }
inline const char* to_string(Parity p) { return is_even(p) ? "even" : "odd"; }

constexpr int sign_of(bool odd) { return odd ? -1 : 1; }

// Malformed text. pos is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Well-formed input that violates a precondition (labels, arities, ranges).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// True when the permutation given as a sequence of distinct integers is odd.
template <class T>
bool odd_permutation(const std::vector<T>& seq) {
    bool odd = false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i]) odd = !odd;
    return odd;
}

} // namespace confpair
