#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "braid3/error.hpp"

namespace braid3 {

// GMP keeps mpq_class canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using BigRational = mpq_class;

inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional leading sign.
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError(0, "invalid rational literal '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    std::size_t slash = s.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(i, s.size())) throw bad();
    } else if (!digits(i, slash) || !digits(slash + 1, s.size())) {
        throw bad();
    }
    if (s[0] == '+') s.erase(0, 1);
    BigRational q;
    q.set_str(s, 10);
    if (q.get_den() == 0) throw DomainError("division by zero in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace braid3
