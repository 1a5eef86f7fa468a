#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "linecong/bracket.hpp"

using namespace linecong;

namespace {
const std::uint64_t kP = 10007;
const Fp kEx(0, kP);
}  // namespace

TEST_CASE("evaluation is bilinear and alternating") {
    Rng rng(1);
    for (int n : {2, 3, 5}) {
        Bracket<Fp> w = random_bracket(n, kEx, rng.next());
        Vec<Fp> a = random_vector(n + 2, kEx, rng);
        Vec<Fp> b = random_vector(n + 2, kEx, rng);
        CHECK(vec_is_zero(w(a, a)));
        CHECK(vec_is_zero(vec_add(w(a, b), w(b, a))));
        Fp s(rng.below(kP), kP);
        CHECK(w(vec_scale(a, s), b) == vec_scale(w(a, b), s));
    }
}

TEST_CASE("single-entry bracket reads off directly") {
    Bracket<Fp> w(2, kEx);
    w.coeff(0, 1, 2) = Fp(1, kP);
    Vec<Fp> e0(4, kEx), e1(4, kEx), e2(4, kEx);
    e0[0] = e1[1] = e2[2] = Fp(1, kP);
    CHECK(w(e0, e1) == e2);
    CHECK(w(e1, e0) == vec_scale(e2, Fp::from_signed(-1, kP)));
}

TEST_CASE("contraction: zero, pure covector type, projected tensors") {
    Bracket<Fp> zero(3, kEx);
    CHECK(vec_is_zero(contraction(zero)));

    Rng rng(2);
    for (int n : {2, 3, 4}) {
        Vec<Fp> u = random_vector(n + 2, kEx, rng);
        Vec<Fp> theta = contraction(covector_bracket(n, u));
        // trace computation gives (n+2)u - u = (n+1)u
        CHECK(theta == vec_scale(u, Fp(n + 1, kP)));
    }
    for (int n : {2, 3, 4}) {
        Bracket<Fp> w = random_trace_free(n, kEx, rng.next());
        CHECK(vec_is_zero(contraction(w)));
    }
}

TEST_CASE("the projection constant is re-derived: contraction after embed is n+1") {
    Rng rng(3);
    for (int n = 2; n <= 6; ++n) {
        Vec<Fp> u = random_vector(n + 2, kEx, rng);
        CHECK(contraction(covector_bracket(n, u)) == vec_scale(u, Fp(n + 1, kP)));
        Vec<Rational> uq(n + 2, Rational(0));
        for (auto& x : uq) x = Rational(rng.signed_band(9));
        CHECK(contraction(covector_bracket(n, uq)) == vec_scale(uq, Rational(n + 1)));
    }
}

TEST_CASE("trace-free projection: idempotent, kills covector part") {
    Rng rng(4);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            Bracket<Fp> w = random_bracket(n, kEx, rng.next());
            Bracket<Fp> p = trace_free_part(w);
            CHECK(vec_is_zero(contraction(p)));
            CHECK(trace_free_part(p) == p);
        }
        Vec<Fp> u = random_vector(n + 2, kEx, rng);
        CHECK(trace_free_part(covector_bracket(n, u)).is_zero());
    }
    // idempotence over Q as well
    Bracket<Rational> wq = random_bracket(3, Rational(0), 77);
    CHECK(trace_free_part(trace_free_part(wq)) == trace_free_part(wq));
}

TEST_CASE("projection requires the characteristic not to divide n+1") {
    Bracket<Fp> w = random_bracket(2, Fp(0, 3), 5);  // n+1 = 3 = char
    CHECK_THROWS_AS(trace_free_part(w), field_error);
}

TEST_CASE("trace-free dimension matches the closed form over both fields") {
    for (int n = 2; n <= 8; ++n) {
        std::size_t expect = static_cast<std::size_t>(n) * (n + 2) * (n + 3) / 2;
        CHECK(trace_free_dimension(n, kEx) == expect);
        CHECK(trace_free_dimension(n, Rational(0)) == expect);
    }
}

TEST_CASE("random generation: deterministic in the seed, distinct across seeds") {
    for (int n : {2, 4}) {
        CHECK(random_trace_free(n, kEx, 11) == random_trace_free(n, kEx, 11));
        for (std::uint64_t s = 0; s < 10; ++s)
            CHECK(random_trace_free(n, kEx, 2 * s) != random_trace_free(n, kEx, 2 * s + 1));
        CHECK(vec_is_zero(contraction(random_trace_free(n, kEx, 123))));
    }
}

TEST_CASE("omega file round trip over F_p and Q") {
    Bracket<Fp> w = random_trace_free(3, kEx, 42);
    std::ostringstream os;
    write_omega_header(os, 3, false, kP, 42);
    write_omega_entries(os, w);
    std::istringstream in(os.str());
    std::string header;
    std::getline(in, header);
    OmegaHeader h = parse_omega_header(header);
    CHECK(h.n == 3);
    CHECK_FALSE(h.rational);
    CHECK(h.p == kP);
    REQUIRE(h.seed.has_value());
    CHECK(*h.seed == 42);
    CHECK(read_omega_entries(in, h.n, Fp(0, h.p)) == w);

    Bracket<Rational> wq = random_trace_free(2, Rational(0), 9);
    std::ostringstream qs;
    write_omega_header(qs, 2, true, 0, std::nullopt);
    write_omega_entries(qs, wq);
    std::istringstream qin(qs.str());
    std::getline(qin, header);
    OmegaHeader hq = parse_omega_header(header);
    CHECK(hq.rational);
    CHECK_FALSE(hq.seed.has_value());
    CHECK(read_omega_entries(qin, hq.n, Rational(0)) == wq);

    // writes are canonical: a second serialization is byte-identical
    std::ostringstream os2;
    write_omega_header(os2, 3, false, kP, 42);
    write_omega_entries(os2, w);
    CHECK(os.str() == os2.str());
}

TEST_CASE("omega parser rejects malformed input") {
    CHECK_THROWS_AS(parse_omega_header("nope n=2 field=q"), parse_error);
    CHECK_THROWS_AS(parse_omega_header("omega n=2"), parse_error);
    CHECK_THROWS_AS(parse_omega_header("omega n=1 field=q"), parse_error);
    CHECK_THROWS_AS(parse_omega_header("omega n=2 field=p:9"), field_error);
    CHECK_THROWS_AS(parse_omega_header("omega n=2 field=z:7"), parse_error);
    CHECK_THROWS_AS(parse_omega_header("omega n=2 field=q junk=1"), parse_error);

    auto body = [](const std::string& lines, int n) {
        std::istringstream in(lines);
        return read_omega_entries(in, n, Fp(0, kP));
    };
    CHECK_THROWS_AS(body("1 0 0 5\n", 2), parse_error);   // i >= j
    CHECK_THROWS_AS(body("0 0 0 5\n", 2), parse_error);   // i == j
    CHECK_THROWS_AS(body("0 4 0 5\n", 2), parse_error);   // j out of range
    CHECK_THROWS_AS(body("0 1 9 5\n", 2), parse_error);   // k out of range
    CHECK_THROWS_AS(body("0 1 0 5 9\n", 2), parse_error); // trailing token
    CHECK_THROWS_AS(body("0 1 0 5\n0 1 0 6\n", 2), parse_error);  // duplicate slot
    CHECK_THROWS_AS(body("0 1 0\n", 2), parse_error);     // short line

    auto qbody = [](const std::string& lines, int n) {
        std::istringstream in(lines);
        return read_omega_entries(in, n, Rational(0));
    };
    CHECK_THROWS_AS(qbody("0 1 0 2/4\n", 2), parse_error);   // non-reduced
    CHECK_THROWS_AS(qbody("0 1 0 1/-2\n", 2), parse_error);  // negative denominator
    CHECK(qbody("0 1 0 -3/4\n", 2).coeff(0, 1, 0) == Rational(-3, 4));
}

TEST_CASE("bracket linear algebra helpers") {
    Bracket<Fp> a = random_bracket(2, kEx, 1);
    Bracket<Fp> b = random_bracket(2, kEx, 2);
    CHECK((a + b) - b == a);
    CHECK(a.scaled(Fp(1, kP)) == a);
    CHECK_THROWS_AS(a + random_bracket(3, kEx, 3), dimension_error);
}
