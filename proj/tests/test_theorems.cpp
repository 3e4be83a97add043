#include <stdexcept>

#include "doctest.h"
#include "gnp/narayana.hpp"
#include "gnp/theorems.hpp"

using gnp::FamilyIndex;
using gnp::Int;
using gnp::Poly;
using gnp::Rational;
using gnp::RootInterval;
using gnp::Verdict;

namespace {

// both roots of 1 - 5x - 10x^2 satisfy (20x + 5)^2 = 65; the map is increasing
// across the positive root and decreasing across the negative one
void check_encloses_sqrt65_root(const RootInterval& iv) {
    const Rational lo_img = (Rational(20) * iv.lo + 5) * (Rational(20) * iv.lo + 5);
    const Rational hi_img = (Rational(20) * iv.hi + 5) * (Rational(20) * iv.hi + 5);
    CHECK(lo_img <= Rational(65));
    CHECK(hi_img >= Rational(65));
}

void check_encloses_negative_sqrt65_root(const RootInterval& iv) {
    const Rational lo_img = (Rational(20) * iv.lo + 5) * (Rational(20) * iv.lo + 5);
    const Rational hi_img = (Rational(20) * iv.hi + 5) * (Rational(20) * iv.hi + 5);
    CHECK(lo_img >= Rational(65));
    CHECK(hi_img <= Rational(65));
}

}  // namespace

TEST_CASE("positive zero bounds") {
    const auto b30 = gnp::positive_zero_bounds({3, 0});
    CHECK(b30.lower == Rational(4, 13));
    CHECK(b30.upper == Rational(1, 3));

    const auto b51 = gnp::positive_zero_bounds({5, 1});
    CHECK(b51.lower == Rational(1, 7));
    CHECK(b51.upper == Rational(1, 6));

    for (long n = 3; n <= 20; ++n)
        CHECK(gnp::positive_zero_bounds({n, 0}).upper == Rational(2, n * (n - 1)));

    for (long m = 0; m <= 10; ++m)
        for (long n = m + 3; n <= m + 20; ++n) {
            const auto b = gnp::positive_zero_bounds({n, m});
            CHECK(Rational(0) < b.lower);
            CHECK(b.lower < b.upper);
            CHECK(b.upper <= Rational(1, 3));
        }

    CHECK_THROWS_AS(gnp::positive_zero_bounds({4, 2}), std::invalid_argument);
}

TEST_CASE("certified positive zero: exact families") {
    for (long m = 0; m <= 10; ++m) {
        const auto iv = gnp::certified_positive_zero({m + 2, m});
        CHECK(iv.exact == Rational(1));
    }
    for (long n = 3; n <= 20; ++n) {
        const auto iv = gnp::certified_positive_zero({n, 0});
        CHECK(iv.exact == Rational(2, n * (n - 1)));
    }
}

TEST_CASE("certified positive zero: bracketed quadratic") {
    const auto iv = gnp::certified_positive_zero({5, 1}, 20);
    REQUIRE(!iv.is_exact());
    CHECK(Rational(1, 7) <= iv.lo);
    CHECK(iv.hi <= Rational(1, 6));
    CHECK(iv.width() <= Rational(1, 42).div_pow2(20));
    check_encloses_sqrt65_root(iv);
}

TEST_CASE("certified positive zero stays inside its bracket") {
    for (long m = 0; m <= 8; ++m)
        for (long n = m + 3; n <= m + 15; ++n) {
            const auto b = gnp::positive_zero_bounds({n, m});
            const auto iv = gnp::certified_positive_zero({n, m}, 32);
            CHECK(b.lower <= iv.lo);
            CHECK(iv.hi <= b.upper);
        }
    CHECK_THROWS_AS(gnp::certified_positive_zero({2, 1}), std::invalid_argument);
}

TEST_CASE("bound evaluations match the m=1 closed forms") {
    // N_{n,1}(2/((n-1)(n-2))) = -2(n-3) / (3(n-1)(n-2)) for n >= 4
    for (long n = 4; n <= 40; ++n) {
        const Rational upper = gnp::positive_zero_bounds({n, 1}).upper;
        CHECK(upper == Rational(2, (n - 1) * (n - 2)));
        CHECK(gnp::gn_poly({n, 1}).eval(upper) ==
              Rational(Int(-2) * (n - 3), Int(3) * (n - 1) * (n - 2)));
    }

    // N_{n,1} at its own lower bound: 2(n-3)[(n-1)(2n^2+n-25)+24] / (3(n-2)(n^2+2n-7)^2)
    for (long n = 4; n <= 40; ++n) {
        const Rational x1 = gnp::positive_zero_bounds({n, 1}).lower;
        CHECK(x1 == Rational(Int(2) * (n + 1), Int(n - 2) * ((n + 1) * (n + 1) - 8)));
        const Int q = Int(n) * n + 2 * n - 7;
        const Rational expected(Int(2) * (n - 3) * (Int(n - 1) * (2 * n * n + n - 25) + 24),
                                Int(3) * (n - 2) * q * q);
        CHECK(gnp::gn_poly({n, 1}).eval(x1) == expected);
        CHECK(expected.sign() > 0);
    }

    // N_{n,1} at the lower bound of (n,2):
    // (n^5 - 52n^4 + 123n^3 + 1018n^2 - 4666n + 5292) / (3(n-3)^2 (n^2+2n-14)^2)
    for (long n = 5; n <= 50; ++n) {
        const Rational x1 = gnp::positive_zero_bounds({n, 2}).lower;
        const Int nn(n);
        const Int numer = nn * nn * nn * nn * nn - 52 * nn * nn * nn * nn +
                          123 * nn * nn * nn + 1018 * nn * nn - 4666 * nn + 5292;
        const Int q = nn * nn + 2 * nn - 14;
        const Rational expected(numer, Int(3) * (nn - 3) * (nn - 3) * q * q);
        CHECK(gnp::gn_poly({n, 1}).eval(x1) == expected);
    }
    CHECK(gnp::gn_poly({5, 1}).eval(gnp::positive_zero_bounds({5, 2}).lower) == Rational(-61, 49));
    CHECK(gnp::gn_poly({50, 1}).eval(gnp::positive_zero_bounds({50, 2}).lower) ==
          Rational(48074, 410346049));
}

TEST_CASE("recurrence coefficient identities at the shifted bracket") {
    for (long m = 0; m <= 6; ++m)
        for (long n = m + 4; n <= m + 14; ++n) {
            const auto rc = gnp::recurrence_coeffs({n, m});
            const auto shifted = gnp::positive_zero_bounds({n, m + 1});
            const Rational x1 = shifted.lower;
            const Rational x2 = shifted.upper;

            // b vanishes at the shifted upper bound
            CHECK(rc.b.eval(x2) == Rational(0));

            // a at the shifted lower bound
            const Int denom = Int(n + m + 4) * (n - m - 2) + 1;
            CHECK(rc.a.eval(x1) == Rational(Int(-2) * (n - m - 3) * (n - m - 1), denom));

            // the inner factor of b at x1
            CHECK(Rational(Int(m + 2 - n) * (m + 1 - n)) * x1 - Rational(2) ==
                  Rational(Int(-2) * (m + 2) * (n - m - 3), denom));

            // a + b at x1 is positive with the stated closed form
            const Rational sum = rc.a.eval(x1) + rc.b.eval(x1);
            const Rational expected(
                Int(2) * (n + 1) * (n - m - 3) * (n - m - 1) *
                    (Int(n - m - 3) * (m + 1) * (n + m + 4) - 2),
                denom * denom * (n - m - 2));
            CHECK(sum == expected);
            CHECK(sum.sign() > 0);
        }
}

TEST_CASE("verify_bounds") {
    CHECK(gnp::verify_bounds({3, 0}).verdict == Verdict::pass);
    CHECK(gnp::verify_bounds({5, 1}).verdict == Verdict::pass);
    CHECK(gnp::verify_bounds({5, 2}).verdict == Verdict::pass);
    CHECK(gnp::gn_poly({5, 2}).eval(Rational(2, 7)) == Rational(23, 343));

    const auto r = gnp::verify_bounds({5, 1});
    CHECK(r.witness.find("N(lower)=") != std::string::npos);

    for (long m = 0; m <= 8; ++m)
        for (long n = m + 3; n <= m + 15; ++n)
            CHECK(gnp::verify_bounds({n, m}).verdict == Verdict::pass);

    CHECK_THROWS_AS(gnp::verify_bounds({4, 2}), std::invalid_argument);
}

TEST_CASE("verify_sign_lemma") {
    // hand values: N_{5,1}(1/10) = 2/5 > 0, N_{5,1}(1) = -14 < 0
    CHECK(gnp::gn_poly({5, 1}).eval(Rational(1, 10)) == Rational(2, 5));
    CHECK(gnp::gn_poly({5, 1}).eval(Rational(1)) == Rational(-14));
    const std::vector<Rational> samples{Rational(1, 10), Rational(1)};
    CHECK(gnp::verify_sign_lemma({5, 1}, samples).verdict == Verdict::pass);

    // the exact zero classifies as sign 0
    for (long n = 3; n <= 10; ++n) {
        const std::vector<Rational> with_root{Rational(1, 1000), Rational(2, n * (n - 1)),
                                              Rational(1)};
        const auto r = gnp::verify_sign_lemma({n, 0}, with_root);
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.witness.find(":0") != std::string::npos);
    }

    // samples inside the enclosure force refinement and still classify
    const auto zero = gnp::certified_positive_zero({7, 2}, 8);
    CHECK(gnp::verify_sign_lemma({7, 2}, gnp::default_sign_samples(zero), 8).verdict ==
          Verdict::pass);

    const std::vector<Rational> bad{Rational(-1)};
    CHECK_THROWS_AS(gnp::verify_sign_lemma({5, 1}, bad), std::invalid_argument);
}

TEST_CASE("verify_monotonicity hand cases") {
    // r(4,0) = 1/6 < r(3,0) = 1/3
    const auto at30 = gnp::verify_monotonicity(0, 3);
    CHECK(at30.decrease_in_n.verdict == Verdict::pass);
    CHECK(at30.diagonal.verdict == Verdict::pass);
    CHECK(!at30.increase_applicable);
    CHECK(at30.overall() == Verdict::pass);

    // n=4, m=0 exercises all three: r(5,0) < r(4,0), r(5,1) < r(4,0), r(4,0) < r(4,1)
    const auto at40 = gnp::verify_monotonicity(0, 4);
    CHECK(at40.increase_applicable);
    CHECK(at40.overall() == Verdict::pass);
    CHECK(at40.witness().find(" < ") != std::string::npos);

    CHECK_THROWS_AS(gnp::verify_monotonicity(2, 4), std::invalid_argument);
}

TEST_CASE("negative zero set") {
    CHECK(gnp::negative_zero_set({6, 0}).empty());

    // single negative zero of N_{5,1} is (-5 - sqrt(65))/20: same certificate
    const auto neg51 = gnp::negative_zero_set({5, 1}, 20);
    REQUIRE(neg51.size() == 1);
    CHECK(neg51[0].hi.sign() < 0);
    check_encloses_negative_sqrt65_root(neg51[0]);

    const auto neg62 = gnp::negative_zero_set({6, 2}, 16);
    REQUIRE(neg62.size() == 2);
    CHECK(neg62[0].hi <= neg62[1].lo);
    CHECK(neg62[1].hi.sign() < 0);

    CHECK_THROWS_AS(gnp::negative_zero_set({3, 2}), std::invalid_argument);
}

TEST_CASE("verify_interlacing") {
    CHECK(gnp::verify_interlacing({5, 1}).verdict == Verdict::pass);
    for (long n = 3; n <= 12; ++n) CHECK(gnp::verify_interlacing({n, 0}).verdict == Verdict::pass);

    for (long m = 0; m <= 5; ++m)
        for (long n = m + 2; n <= m + 10; ++n)
            CHECK(gnp::verify_interlacing({n, m}).verdict == Verdict::pass);
}

TEST_CASE("verify_census") {
    for (long m = 0; m <= 6; ++m)
        for (long n = m + 2; n <= m + 12; ++n) {
            const auto r = gnp::verify_census({n, m});
            CHECK(r.verdict == Verdict::pass);
        }
    CHECK(gnp::verify_census({5, 1}).witness == "deg=2;positive=1;negative=1;total=2;isolated_negative=1");
}

TEST_CASE("verify_proposition") {
    CHECK(gnp::verify_proposition(0, 10).verdict == Verdict::pass);
    CHECK(gnp::certified_positive_zero({3, 0}).exact == Rational(1, 3));
    CHECK(gnp::certified_positive_zero({4, 0}).exact == Rational(1, 6));

    // m=2, n_max=100: final upper bound is 2/(98*97) = 1/4753 < 1/1000
    CHECK(gnp::positive_zero_bounds({100, 2}).upper == Rational(1, 4753));
    CHECK(gnp::verify_proposition(2, 100, 64, Rational(1, 1000)).verdict == Verdict::pass);
    // and a decay target it does not reach yet
    CHECK(gnp::verify_proposition(2, 100, 64, Rational(1, 1000000)).verdict == Verdict::fail);

    CHECK_THROWS_AS(gnp::verify_proposition(2, 4), std::invalid_argument);
}

TEST_CASE("zero report") {
    const auto rep60 = gnp::build_zero_report({6, 0});
    CHECK(rep60.positive_zero.exact == Rational(1, 15));
    CHECK(rep60.negative_zeros.empty());
    CHECK(rep60.all_pass());
    CHECK(rep60.checks.count("bounds_signs") == 1);

    const auto rep42 = gnp::build_zero_report({4, 2});
    CHECK(rep42.positive_zero.exact == Rational(1));
    CHECK(rep42.bracket.lower == Rational(1));
    CHECK(rep42.negative_zeros.size() == 2);
    CHECK(rep42.all_pass());
    CHECK(rep42.checks.count("bounds_signs") == 0);

    const auto rep51 = gnp::build_zero_report({5, 1});
    CHECK(rep51.bracket.lower == Rational(1, 7));
    CHECK(rep51.bracket.upper == Rational(1, 6));
    CHECK(rep51.negative_zeros.size() == 1);
    CHECK(rep51.all_pass());

    CHECK_THROWS_AS(gnp::build_zero_report({2, 1}), std::invalid_argument);
}
