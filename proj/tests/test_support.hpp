#pragma once

// Shared fixtures, random generators and independent oracles for the test suites.

#include "holoprove/bipoly.hpp"
#include "holoprove/ode_prover.hpp"
#include "holoprove/poly_format.hpp"
#include "holoprove/sequence.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef HOLOPROVE_FIXTURE_DIR
#error "HOLOPROVE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace holoprove::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HOLOPROVE_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline UPoly zp(const char* text) { return parse_upoly(text, 'z'); }
inline UPoly np(const char* text) { return parse_upoly(text, 'n'); }

// P(z, w) = z(1-z) w^2 - (1-z) w + (1 - z - z^2), built coefficient by coefficient.
inline BiPoly paper_p() {
    return BiPoly(std::vector<UPoly>{UPoly{1, -1, -1}, UPoly{-1, 1}, UPoly{0, 1, -1}});
}

inline LinearOde paper_ode() {
    return LinearOde{UPoly{1, -4, 5, -4}, UPoly{0, 1, -6, 9, 0, -4}, UPoly{1, -2, -2, 2}};
}

inline UPoly paper_q() { return UPoly{1, -1, -4, -4, 8}; }

inline Certificate paper_certificate() { return Certificate{paper_p(), paper_ode(), paper_q(), false}; }

// The values printed alongside the defining recurrence.
inline std::vector<Rational> paper_first_values() {
    return {1, 1, 1, 2, 5, 14, 41, 123, 375, 1158, 3615, 11393, 36209, 115940, 373709};
}

// Independent term oracle: evaluates the defining recurrence literally with
// mpz integers, a(n+1) = sum_{p=0}^{n} a(p) a(n-p) + k(n+1) + l.
inline std::vector<Integer> brute_force_terms(long a0, long a1, long k, long l, std::size_t count) {
    std::vector<Integer> a{a0, a1};
    for (std::size_t n = 1; a.size() < count; ++n) {
        Integer s = 0;
        for (std::size_t p = 0; p <= n; ++p) s += a[p] * a[n - p];
        a.push_back(s + k * static_cast<long>(n + 1) + l);
    }
    return a;
}

class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long range = 5) {
        Rational r(integer(-range, range), integer(1, 4));
        r.canonicalize();
        return r;
    }

    UPoly upoly(int max_degree, char var = 'z') {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree + 1)));
        for (auto& x : c) x = rational();
        return UPoly(std::move(c), var);
    }

    BiPoly bipoly(int max_w, int max_z) {
        std::vector<UPoly> c(static_cast<std::size_t>(integer(0, max_w + 1)));
        for (auto& x : c) x = upoly(max_z);
        return BiPoly(std::move(c));
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

}  // namespace holoprove::testing
