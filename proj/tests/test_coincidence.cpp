#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "linecong/coincidence.hpp"

using namespace linecong;
using testutil::all_planes;
using testutil::plane_key;

namespace {
const std::uint64_t kP = 10007;
const Fp kEx(0, kP);

Bivector<Fp> random_bivector(std::size_t dim, std::uint64_t p, Rng& rng) {
    Bivector<Fp> t(dim, Fp(0, p));
    for (auto& c : t.coords) c = Fp(rng.below(p), p);
    return t;
}
}  // namespace

TEST_CASE("forms of the zero bracket are pure wedge covectors") {
    Bracket<Fp> zero(3, kEx);
    LinearSystem<Fp> sys = linear_section_forms(zero);
    REQUIRE(sys.forms.size() == 5);
    const std::size_t d = 5, dd = 6;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t a = 0; a + 1 < dd; ++a)
            for (std::size_t b = a + 1; b < dd; ++b) {
                Fp got = sys.forms[i][pair_index(dd, a, b)];
                if (a == i && b == d)
                    CHECK(got == Fp::from_signed(-1, kP));
                else
                    CHECK(got.is_zero());
            }
    }
}

TEST_CASE("the n+2 forms are linearly independent for random brackets") {
    Rng rng(5);
    for (int n : {2, 3, 5}) {
        Bracket<Fp> w = random_trace_free(n, kEx, rng.next());
        LinearSystem<Fp> sys = linear_section_forms(w);
        Matrix<Fp> m(sys.forms.size(), sys.forms[0].size(), kEx);
        for (std::size_t i = 0; i < sys.forms.size(); ++i)
            for (std::size_t j = 0; j < sys.forms[i].size(); ++j)
                m.at(i, j) = sys.forms[i][j];
        CHECK(rank(m) == static_cast<std::size_t>(n) + 2);
    }
}

TEST_CASE("every form annihilates every lifted bivector") {
    Rng rng(6);
    for (int n = 2; n <= 6; ++n) {
        Bracket<Fp> w = random_bracket(n, kEx, rng.next());
        LinearSystem<Fp> sys = linear_section_forms(w);
        for (int rep = 0; rep < 200; ++rep) {
            Bivector<Fp> t = random_bivector(n + 2, kP, rng);
            Bivector<Fp> up = lift(w, t);
            for (const auto& f : sys.forms) CHECK(evaluate_form(f, up).is_zero());
        }
    }
}

TEST_CASE("stable-plane membership basics") {
    Rng rng(7);
    Bracket<Fp> w = random_trace_free(3, kEx, 4);
    // an abelian plane is stable: the zero bracket makes every plane abelian
    Bracket<Fp> zero(3, kEx);
    Vec<Fp> a = random_vector(5, kEx, rng), b = random_vector(5, kEx, rng);
    Plane<Fp> pl(a, b);
    CHECK(is_abelian_plane(zero, pl));
    CHECK(is_stable_plane(zero, pl));
    // membership is independent of the chosen spanning pair
    Plane<Fp> same(vec_add(a, b), b);
    CHECK(is_stable_plane(w, pl) == is_stable_plane(w, same));
    CHECK_THROWS_AS(Plane<Fp>(a, vec_scale(a, Fp(2, kP))), std::invalid_argument);
}

TEST_CASE("lift: padding, linearity, and the decomposability criterion") {
    Rng rng(8);
    const int n = 3;
    Bracket<Fp> zero(n, kEx);
    Bivector<Fp> t = random_bivector(n + 2, kP, rng);
    Bivector<Fp> up = lift(zero, t);
    CHECK(project_down(up) == t);
    for (std::size_t i = 0; i < up.dim_v - 1; ++i) CHECK(up.at(i, up.dim_v - 1).is_zero());

    Bracket<Fp> w = random_trace_free(n, kEx, 77);
    for (int rep = 0; rep < 25; ++rep) {
        Bivector<Fp> t1 = random_bivector(n + 2, kP, rng);
        Bivector<Fp> t2 = random_bivector(n + 2, kP, rng);
        Fp al(rng.below(kP), kP), be(rng.below(kP), kP);
        CHECK(lift(w, t1.scaled(al) + t2.scaled(be)) ==
              lift(w, t1).scaled(al) + lift(w, t2).scaled(be));
    }
}

TEST_CASE("exhaustive F_3 check: lift decomposable iff the plane is stable") {
    const std::uint64_t q = 3;
    Bracket<Fp> w = random_bracket(2, Fp(0, q), 2718);
    auto planes = all_planes(q, 4);
    // (3^4-1)(3^4-3)/((3^2-1)(3^2-3)) = 130
    CHECK(planes.size() == (81u - 1) * (81u - 3) / ((9u - 1) * (9u - 3)));
    CHECK(planes.size() == 130);
    std::size_t stable_count = 0;
    for (const auto& [key, pl] : planes) {
        bool stable = is_stable_plane(w, pl);
        Bivector<Fp> up = lift(w, pl.plucker());
        CHECK(is_decomposable(up) == stable);
        if (stable) ++stable_count;
        if (is_abelian_plane(w, pl)) CHECK(stable);
    }
    CHECK(stable_count > 0);
}

TEST_CASE("projection drops the added direction and inverts the lift") {
    Rng rng(9);
    const int n = 4;
    Bracket<Fp> w = random_trace_free(n, kEx, 5);
    for (int rep = 0; rep < 50; ++rep) {
        Bivector<Fp> t = random_bivector(n + 2, kP, rng);
        CHECK(project_down(lift(w, t)) == t);
    }
    // the projection center: e_0 ^ v maps to zero
    Bivector<Fp> center(n + 3, kEx);
    center.at(0, n + 2) = Fp(1, kP);
    CHECK(project_down(center).is_zero());
    // on sampled section points the lift inverts the projection
    for (const Plane<Fp>& pl : sample_stable_planes(w, 20, 31).planes) {
        Bivector<Fp> up = lift(w, pl.plucker());
        CHECK(in_linear_section(w, up));
        CHECK(lift(w, project_down(up)) == up);
    }
}

TEST_CASE("section membership") {
    const int n = 3;
    Bracket<Fp> w = random_trace_free(n, kEx, 12);
    // lifts of stable planes lie in the section
    for (const Plane<Fp>& pl : sample_stable_planes(w, 10, 3).planes)
        CHECK(in_linear_section(w, lift(w, pl.plucker())));
    // a point of the smaller Grassmannian embedded by zero padding lies in
    // the section only when the plane is abelian; a non-stable plane fails
    Rng rng(10);
    for (int tries = 0; tries < 50; ++tries) {
        Vec<Fp> a = random_vector(n + 2, kEx, rng), b = random_vector(n + 2, kEx, rng);
        Plane<Fp> pl(a, b);
        if (is_stable_plane(w, pl)) continue;
        Bivector<Fp> padded(n + 3, kEx);
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n) + 2; ++i)
            for (std::size_t j = i + 1; j < static_cast<std::size_t>(n) + 2; ++j)
                padded.at(i, j) = pl.plucker().at(i, j);
        CHECK_FALSE(in_linear_section(w, padded));
        break;
    }
    // the lift of a non-stable plane also fails membership (not decomposable)
    for (int tries = 0; tries < 50; ++tries) {
        Vec<Fp> a = random_vector(n + 2, kEx, rng), b = random_vector(n + 2, kEx, rng);
        Plane<Fp> pl(a, b);
        if (is_stable_plane(w, pl)) continue;
        CHECK_FALSE(in_linear_section(w, lift(w, pl.plucker())));
        break;
    }
    Bivector<Fp> zero(n + 3, kEx);
    CHECK_THROWS_AS(in_linear_section(w, zero), std::invalid_argument);
}

TEST_CASE("pointwise equivalence verification") {
    Bracket<Fp> w2 = random_trace_free(2, kEx, 1001);
    EquivalenceReport r2 = verify_equivalence(w2, 100, 42);
    CHECK(r2.samples == 100);
    CHECK(r2.passes == 100);
    CHECK(r2.failures == 0);
    CHECK_FALSE(r2.first_failure.has_value());

    Bracket<Fp> w5 = random_trace_free(5, kEx, 1002);
    EquivalenceReport r5 = verify_equivalence(w5, 50, 43);
    CHECK(r5.passes == 50);

    Bracket<Fp> zero(3, kEx);
    CHECK_THROWS_AS(verify_equivalence(zero, 5, 1), genericity_error);
}

TEST_CASE("verification reports are deterministic in the seed") {
    Bracket<Fp> w = random_trace_free(3, kEx, 2024);
    EquivalenceReport a = verify_equivalence(w, 25, 7);
    EquivalenceReport b = verify_equivalence(w, 25, 7);
    CHECK(a.passes == b.passes);
    CHECK(a.draws == b.draws);
    CHECK(a.rootless_draws == b.rootless_draws);
    CHECK(a.degenerate_draws == b.degenerate_draws);
}

TEST_CASE("exhaustive F_3 bijection between stable planes and section points") {
    const std::uint64_t q = 3;
    Bracket<Fp> w = random_bracket(2, Fp(0, q), 31415);
    std::size_t stable = 0;
    for (const auto& [key, pl] : all_planes(q, 4))
        if (is_stable_plane(w, pl)) ++stable;

    LinearSystem<Fp> sys = linear_section_forms(w);
    std::size_t section_points = 0;
    const std::size_t nc = pair_count(5);
    std::vector<std::uint64_t> digits(nc, 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < nc && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == nc) break;
        Bivector<Fp> t(5, Fp(0, q));
        for (std::size_t i = 0; i < nc; ++i) t.coords[i] = Fp(digits[i], q);
        std::size_t first = nc;
        for (std::size_t i = 0; i < nc; ++i)
            if (!t.coords[i].is_zero()) {
                first = i;
                break;
            }
        if (t.coords[first].value() != 1) continue;  // one representative per point
        bool member = is_decomposable(t);
        for (const auto& f : sys.forms)
            if (member && !evaluate_form(f, t).is_zero()) member = false;
        if (member) ++section_points;
    }
    CHECK(stable == section_points);
}

TEST_CASE("hyperplane change fixes the trace-free class") {
    Rng rng(11);
    for (int n : {2, 3, 4}) {
        Bracket<Fp> w = random_trace_free(n, kEx, rng.next());
        Vec<Fp> zero_cov(n + 2, kEx);
        CHECK(change_hyperplane(w, zero_cov) == w);
        Vec<Fp> u = random_vector(n + 2, kEx, rng);
        Bracket<Fp> moved = change_hyperplane(w, u);
        CHECK(moved != w);
        CHECK(trace_free_part(moved) == trace_free_part(w));
        Vec<Fp> minus_u = vec_scale(u, Fp::from_signed(-1, kP));
        CHECK(change_hyperplane(moved, minus_u) == w);
    }
}

TEST_CASE("line change: trivial center is the identity, generic centers move the class") {
    Bracket<Fp> w = random_trace_free(2, kEx, 555);
    Vec<Fp> trivial(5, kEx);
    trivial[4] = Fp(1, kP);
    ChangeLineReport triv = change_line(w, trivial, 20, 9);
    CHECK_FALSE(triv.classes_differ);
    CHECK(triv.passes == 20);

    Rng rng(12);
    for (int n : {2, 3}) {
        Bracket<Fp> wn = random_trace_free(n, kEx, 556 + n);
        Vec<Fp> center = random_vector(n + 3, kEx, rng);
        center[n + 2] = Fp(1, kP);
        ChangeLineReport rep = change_line(wn, center, 50, 10);
        CHECK(rep.classes_differ);
        CHECK(rep.samples == 50);
        CHECK(rep.passes == 50);
        CHECK(rep.failures == 0);
    }
    // a center inside the hyperplane cannot split the space
    Vec<Fp> bad(5, kEx);
    bad[0] = Fp(1, kP);
    CHECK_THROWS_AS(change_line(w, bad, 5, 1), center_error);
}
