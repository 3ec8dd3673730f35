#include "holoprove/rational.hpp"

#include "holoprove/error.hpp"

#include <algorithm>
#include <cctype>

namespace holoprove {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Usage: return "usage error";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Format: return "format error";
        case ErrorKind::NonUnit: return "non-unit error";
        case ErrorKind::Branch: return "branch error";
        case ErrorKind::NotARoot: return "not-a-root error";
        case ErrorKind::RamifiedBranch: return "ramified-branch error";
        case ErrorKind::SingularRecurrence: return "singular-recurrence error";
        case ErrorKind::Integrality: return "integrality-violation error";
        case ErrorKind::DegenerateOde: return "degenerate-ode error";
        case ErrorKind::Internal: return "internal error";
    }
    return "error";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, bool allow_sign) {
    s = trim(s);
    std::string digits;
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') digits.push_back('-');
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError(0, "not an integer: '" + std::string(s) + "'");
    }
    digits.append(s);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto body = trim(text);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(body, true));
    }
    Integer num = parse_integer(body.substr(0, slash), true);
    Integer den = parse_integer(body.substr(slash + 1), false);
    if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(body) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& i) { return i.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::size_t decimal_digits(const Integer& i) {
    Integer a = abs(i);
    return a.get_str(10).size();
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

Integer gcd_of_numerators(const std::vector<Rational>& values) {
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    return g;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw Error(ErrorKind::Usage, "divisors of zero requested");
    Integer a = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            Integer other = a / d;
            if (other != d) large.push_back(other);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace holoprove
