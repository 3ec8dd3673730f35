#include "holoprove/error.hpp"
#include "holoprove/ode_prover.hpp"
#include "holoprove/recurrence.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace holoprove;
using namespace holoprove::testing;

namespace {

// sum_j c_j(n) a(n-j) with a(m) = 0 for m < 0.
Rational residual_at(const PRecurrence& rec, const std::vector<Rational>& a, long n) {
    Rational acc = 0;
    for (int j = 0; j <= rec.order(); ++j) {
        const long m = n - j;
        if (m < 0) continue;
        acc += rec.coefficients[static_cast<std::size_t>(j)].eval(Rational(n)) * a[static_cast<std::size_t>(m)];
    }
    return acc;
}

}  // namespace

TEST_CASE("extract_recurrence") {
    SUBCASE("A176677") {
        const PRecurrence rec = extract_recurrence(paper_ode());
        REQUIRE(rec.order() == 4);
        CHECK(rec.coefficients[0] == np("n + 1"));
        CHECK(rec.coefficients[1] == np("-6*n + 2"));
        CHECK(rec.coefficients[2] == np("9*n - 13"));
        CHECK(rec.coefficients[3] == np("-4"));
        CHECK(rec.coefficients[4] == np("-4*n + 16"));
        CHECK(rec.valid_from == 4);
    }
    SUBCASE("q1(0) != 0 renumbers: G' = 1 gives n a(n) = 0 from n = 2") {
        const PRecurrence rec = extract_recurrence(LinearOde{UPoly(), UPoly{1}, UPoly{1}});
        REQUIRE(rec.order() == 1);
        CHECK(rec.coefficients[0] == np("n"));
        CHECK(rec.coefficients[1].is_zero());
        CHECK(rec.valid_from == 2);
        CHECK(verify_recurrence(rec, {1, 1, 0, 0, 0}).ok);
    }
    SUBCASE("z G' - G = 0 gives (n - 1) a(n) = 0") {
        const PRecurrence rec = extract_recurrence(LinearOde{UPoly{-1}, UPoly{0, 1}, UPoly()});
        REQUIRE(rec.order() == 1);
        CHECK(rec.coefficients[0] == np("n - 1"));
        CHECK(rec.valid_from == 1);
        CHECK(verify_recurrence(rec, {0, 5, 0, 0}).ok);
        CHECK_FALSE(verify_recurrence(rec, {0, 5, 1, 0}).ok);
    }
}

TEST_CASE("verify_recurrence") {
    const PRecurrence rec = extract_recurrence(paper_ode());
    auto terms = conv_terms(a176677_spec(), 251);
    const RecurrenceCheck ok = verify_recurrence(rec, terms);
    CHECK(ok.ok);
    CHECK(ok.checked == 247);

    terms[100] += 1;
    const RecurrenceCheck bad = verify_recurrence(rec, terms);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure == 100);
    CHECK(bad.residual == 101);  // c_0(100) * 1
}

TEST_CASE("homogeneity starts exactly past deg R") {
    const PRecurrence rec = extract_recurrence(paper_ode());
    const auto a = conv_terms(a176677_spec(), 10);
    // Below the threshold the sum equals the coefficient of z^n in R = 1 - 2z - 2z^2 + 2z^3.
    CHECK(residual_at(rec, a, 0) == 1);
    CHECK(residual_at(rec, a, 1) == -2);
    CHECK(residual_at(rec, a, 2) == -2);
    CHECK(residual_at(rec, a, 3) == 2);
    for (long n = 4; n < 10; ++n) CHECK(residual_at(rec, a, n) == 0);
}

TEST_CASE("property: extracted recurrences reproduce R coefficientwise") {
    Rng rng(2718);
    int proved = 0;
    for (int trial = 0; trial < 15; ++trial) {
        const ChouletSpec spec{rng.integer(1, 2), rng.integer(1, 2), rng.integer(-2, 2), rng.integer(-2, 2)};
        const auto cert = find_first_order_ode(derive_algebraic(spec), 6);
        if (!cert) continue;
        ++proved;
        const PRecurrence rec = extract_recurrence(cert->ode);
        const auto a = conv_terms(spec, 60);
        CHECK(verify_recurrence(rec, a).ok);
        // The leading coefficient never vanishes past the seed, so prec_eval rebuilds the terms.
        const int seed = required_seed_length(rec);
        const std::vector<Rational> head(a.begin(), a.begin() + seed);
        CHECK(prec_eval(rec, head, 60) == a);
    }
    CHECK(proved >= 10);
}

TEST_CASE("recurrence text round trip") {
    const PRecurrence rec = extract_recurrence(paper_ode());
    const std::string canonical = format_recurrence(rec);
    CHECK(canonical ==
          "(n+1)*a(n) + (-6*n+2)*a(n-1) + (9*n-13)*a(n-2) + (-4)*a(n-3) + (-4*n+16)*a(n-4) = 0  [n >= 4]");
    const std::string factored = format_recurrence_factored(rec);
    CHECK(factored == "(n+1)*a(n) + 2*(-3*n+1)*a(n-1) + (9*n-13)*a(n-2) - 4*a(n-3) + 4*(-n+4)*a(n-4) = 0  [n >= 4]");

    for (const std::string& text : {canonical, factored}) {
        const PRecurrence back = parse_recurrence(text);
        CHECK(back.valid_from == 4);
        CHECK(back.coefficients == rec.coefficients);
    }
    const PRecurrence unguarded = parse_recurrence("(n+1)*a(n) + (-6*n+2)*a(n-1) + (9*n-13)*a(n-2) - 4*a(n-3) + (-4*n+16)*a(n-4) = 0");
    CHECK(unguarded.valid_from == 4);
    CHECK(unguarded.coefficients == rec.coefficients);

    CHECK_THROWS_AS(parse_recurrence("a(n) + = 0"), Error);
    CHECK_THROWS_AS(parse_recurrence("(n+1)*b(n) = 0"), Error);
}
