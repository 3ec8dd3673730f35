#include "holoprove/cli.hpp"
#include "holoprove/error.hpp"
#include "holoprove/file_formats.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

using namespace holoprove;
using namespace holoprove::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Fresh scratch directory per test case, removed on exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("holoprove_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    void write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name), std::ios::binary) << text;
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path(name), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("spec files") {
    CHECK(parse_spec_file(read_fixture("a176677.spec")) == a176677_spec());
    CHECK(parse_spec_file("a0: 1/2\na1 3\nk = -1\nl = 0\n") == ChouletSpec{Rational(1, 2), 3, -1, 0});
    CHECK(parse_spec_file(format_spec_file(ChouletSpec{2, Rational(-1, 3), 1, 1})) ==
          ChouletSpec{2, Rational(-1, 3), 1, 1});

    try {
        (void)parse_spec_file(read_fixture("bad.spec"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() > 0);
    }
    CHECK_THROWS_AS(parse_spec_file("a0 = 1\na1 = 1\nk = 0\n"), Error);
    CHECK_THROWS_AS(parse_spec_file("a0 = 1\na0 = 1\na1 = 1\nk = 0\nl = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_spec_file("a0 = 1\na1 = 1\nk = 0\nl = 0\nm = 2\n"), ParseError);
}

TEST_CASE("certificate files") {
    const CertificateFile paper = parse_certificate_file(read_fixture("paper.cert"));
    REQUIRE_FALSE(paper.is_stub());
    CHECK(paper.eq.p == paper_p());
    CHECK(paper.eq.branch_value == 1);
    CHECK(*paper.ode == paper_ode());
    CHECK(*paper.q == paper_q());
    CHECK(format_certificate_file(paper) == read_fixture("paper.cert"));

    const CertificateFile stub{AlgebraicEq{paper_p(), 1}, std::nullopt, std::nullopt, {" stub"}};
    const CertificateFile back = parse_certificate_file(format_certificate_file(stub));
    CHECK(back.is_stub());
    CHECK(back == stub);
    CHECK_THROWS_AS((void)back.certificate(), Error);

    // value on the following line
    const std::string split = "holoprove-certificate v1\nP:\n  w - 1\nbranch:\n1\n";
    CHECK(parse_certificate_file(split).eq.p == parse_bipoly("w - 1"));

    CHECK_THROWS_AS(parse_certificate_file("not a certificate\n"), Error);
}

TEST_CASE("cli derive") {
    Scratch s;
    const Run r = run({"derive", fixture_path("a176677.spec"), "--out", s.path("stub.cert")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "(z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)\n");
    CHECK(contains(r.err, "residual P(z, G) mod z^30: zero"));
    CHECK(parse_certificate_file(s.read("stub.cert")).is_stub());

    CHECK(run({"derive", fixture_path("bad.spec")}).code == kExitInputError);
    CHECK(run({"derive", s.path("missing.spec")}).code == kExitInputError);
    CHECK(run({"derive"}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);

    // a stub is not verifiable
    CHECK(run({"verify", s.path("stub.cert")}).code == kExitInputError);
}

TEST_CASE("cli prove and verify") {
    Scratch s;
    const Run proved = run({"prove", fixture_path("a176677.spec"), "--out", s.path("a.cert")});
    REQUIRE(proved.code == kExitOk);
    CHECK(contains(proved.out, "level: 3"));
    CHECK(contains(proved.out,
                   "recurrence: (n+1)*a(n) + (-6*n+2)*a(n-1) + (9*n-13)*a(n-2) + (-4)*a(n-3) + (-4*n+16)*a(n-4) = 0  [n >= 4]"));
    const std::string cert = s.read("a.cert");
    CHECK(contains(cert, "q: 8*z^4 - 4*z^3 - 4*z^2 - z + 1\n"));
    const CertificateFile file = parse_certificate_file(cert);
    CHECK(*file.ode == paper_ode());

    SUBCASE("stdout mode prints the same certificate") {
        const Run to_stdout = run({"prove", fixture_path("a176677.spec")});
        CHECK(to_stdout.code == kExitOk);
        CHECK(to_stdout.out.rfind(cert, 0) == 0);
    }
    SUBCASE("verify passes on 251 terms") {
        const Run v = run({"verify", s.path("a.cert")});
        CHECK(v.code == kExitOk);
        CHECK(contains(v.out, "a(250) digits: 134"));
        CHECK(contains(v.out, "overall: PASS"));
        CHECK_FALSE(contains(v.out, "[FAIL]"));
    }
    SUBCASE("verify against the b-file and an explicit recurrence") {
        const Run v = run({"verify", s.path("a.cert"), "--bfile", fixture_path("b176677.txt"), "--recurrence",
                           "(n+1)*a(n) + 2*(-3*n+1)*a(n-1) + (9*n-13)*a(n-2) - 4*a(n-3) + 4*(-n+4)*a(n-4) = 0"});
        CHECK(v.code == kExitOk);
        CHECK(contains(v.out, "[PASS] bfile"));
        CHECK(contains(v.out, "[PASS] given-recurrence"));
    }
    SUBCASE("a wrong recurrence fails verification") {
        const Run v = run({"verify", s.path("a.cert"), "--recurrence", "(n+1)*a(n) - a(n-1) = 0"});
        CHECK(v.code == kExitVerificationFailed);
    }
    SUBCASE("tampered cofactor fails the identity") {
        std::string tampered = cert;
        const std::string good = "q: 8*z^4 - 4*z^3 - 4*z^2 - z + 1";
        tampered.replace(tampered.find(good), good.size(), "q: 8*z^4 - 4*z^3 - 4*z^2 - z + 2");
        s.write("bad.cert", tampered);
        const Run v = run({"verify", s.path("bad.cert")});
        CHECK(v.code == kExitVerificationFailed);
        CHECK(contains(v.out, "[FAIL] identity"));
        CHECK(contains(v.out, "overall: FAIL"));
    }
    SUBCASE("machine output") {
        const Run v = run({"verify", s.path("a.cert"), "--machine", "--terms", "60"});
        CHECK(v.code == kExitOk);
        CHECK(contains(v.out, "identity=PASS\n"));
        CHECK(contains(v.out, "terms=60\n"));
        CHECK(contains(v.out, "overall=PASS\n"));
    }
    SUBCASE("mismatching b-file") {
        s.write("wrong.txt", "0 1\n1 1\n2 1\n3 3\n");
        const Run v = run({"verify", s.path("a.cert"), "--bfile", s.path("wrong.txt")});
        CHECK(v.code == kExitVerificationFailed);
        CHECK(contains(v.out, "[FAIL] bfile"));
    }
    SUBCASE("terms below the floor are a usage error") {
        CHECK(run({"verify", s.path("a.cert"), "--terms", "5"}).code == kExitInputError);
    }
}

TEST_CASE("cli search exhaustion and determinism") {
    Scratch s;
    CHECK(run({"prove", fixture_path("a176677.spec"), "--max-degree", "2"}).code == kExitSearchExhausted);

    const Run first = run({"prove", fixture_path("catalan.spec"), "--out", s.path("c1.cert")});
    const Run second = run({"prove", fixture_path("catalan.spec"), "--out", s.path("c2.cert")});
    REQUIRE(first.code == kExitOk);
    CHECK(first.out == second.out);
    CHECK(s.read("c1.cert") == s.read("c2.cert"));
    CHECK(run({"verify", s.path("c1.cert")}).code == kExitOk);
}
