#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatsaf/knum.hpp"

#include <gmpxx.h>
#include <random>

using namespace flatsaf;

namespace {

QuadField F5(5);

KNum k5(long a, long b) { return KNum(Rat(a), Rat(b), F5); }

Rat rnd_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    return make_rat(Int(num(rng)), Int(den(rng)));
}

KNum rnd_k(std::mt19937_64& rng, QuadField F) {
    return KNum(rnd_rat(rng), rnd_rat(rng), F);
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("-3/6") == make_rat(-1, 2));
    CHECK(rat_str(make_rat(4, -6)) == "-2/3");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("field construction") {
    CHECK_THROWS_AS(QuadField(12), std::domain_error);
    CHECK_NOTHROW(QuadField(17));
    auto [f, c] = QuadField::squarefree_kernel(121);
    CHECK(f == 1);
    CHECK(c == 11);
    auto [f2, c2] = QuadField::squarefree_kernel(8 * 17);
    CHECK(f2 == 34);
    CHECK(c2 == 2);
}

TEST_CASE("KNum arithmetic, conjugation, norm") {
    KNum x = k5(2, 1); // 2 + sqrt5
    CHECK(x.conj() == k5(2, -1));
    CHECK(x.norm() == Rat(-1)); // (2+sqrt5)(2-sqrt5) = -1
    CHECK(x.conj().conj() == x);
    CHECK(KNum(Rat(3)).conj() == KNum(Rat(3)));
    KNum y = k5(7, -1);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x / x == KNum(Rat(1), Rat(0), F5));
    // conj is a field automorphism
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
}

TEST_CASE("signK examples") {
    CHECK(k5(2, -1).sign() == -1); // 2 - sqrt5 < 0
    CHECK(KNum(Rat(0), Rat(0), F5).sign() == 0);
    QuadField F17(17);
    CHECK(KNum(make_rat(-1, 2), make_rat(1, 2), F17).sign() == +1); // (-1+sqrt17)/2
}

TEST_CASE("signK agrees with 100-digit evaluation on 1000 random inputs") {
    std::mt19937_64 rng(20250811);
    mpf_set_default_prec(400);
    QuadField F(17);
    mpf_class root;
    mpf_sqrt_ui(root.get_mpf_t(), 17);
    for (int i = 0; i < 1000; ++i) {
        KNum x = rnd_k(rng, F);
        mpf_class v = mpf_class(x.a()) + mpf_class(x.b()) * root;
        int s = sgn(v);
        // Values built from small rationals are never so tiny that 400 bits
        // would mask their sign.
        CHECK(x.sign() == s);
    }
}

TEST_CASE("wedgeK examples and bilinearity") {
    CHECK(wedgeK(KNum(Rat(1), Rat(0), F5), k5(0, 1)) == WedgeNum(Rat(1), F5));
    KNum x = k5(3, 2);
    CHECK(wedgeK(x, x).is_zero());
    CHECK(wedgeK(k5(2, 3), k5(7, -1)) == WedgeNum(Rat(-23), F5));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        KNum a = rnd_k(rng, F5), b = rnd_k(rng, F5);
        CHECK(wedgeK(a, b) == -wedgeK(b, a));
        Rat q = rnd_rat(rng);
        CHECK(wedgeK(KNum(q) * a, b) == q * wedgeK(a, b));
        // zero iff Q-linearly dependent
        bool dep = (a.a() * b.b() - a.b() * b.a()) == 0;
        CHECK(wedgeK(a, b).is_zero() == dep);
    }
}

TEST_CASE("wedge vanishes identically over Q") {
    QuadField Q(1);
    CHECK(wedgeK(KNum(Rat(2)), KNum(Rat(3))).is_zero());
    CHECK(WedgeNum(Rat(5), Q).is_zero());
}

TEST_CASE("jWedge and jxx") {
    KNum one(Rat(1)), zero(Rat(0));
    Vec2K e1{promote(one, F5), promote(zero, F5)};
    Vec2K e2{promote(zero, F5), promote(one, F5)};
    JNum J = jWedge(e1, e2);
    std::array<Rat, 6> want{};
    want[1] = 1; // u1^u3
    CHECK(J == JNum(want, F5));

    // all rational coordinates project to 0
    CHECK(jxx(jWedge(Vec2K{promote(KNum(Rat(2)), F5), promote(KNum(Rat(5)), F5)},
                     Vec2K{promote(KNum(make_rat(1, 3)), F5), promote(KNum(Rat(7)), F5)}))
              .is_zero());

    // sqrt5 ^ 1 = -(1 ^ sqrt5)
    Vec2K v{k5(0, 1), k5(0, 0)};
    Vec2K w{k5(1, 0), k5(0, 0)};
    CHECK(jxx(jWedge(v, w)) == WedgeNum(Rat(-1), F5));

    // jxx(jWedge(v,w)) = wedgeK(v1, w1)
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Vec2K a{rnd_k(rng, F5), rnd_k(rng, F5)}, b{rnd_k(rng, F5), rnd_k(rng, F5)};
        CHECK(jxx(jWedge(a, b)) == wedgeK(a.x, b.x));
    }
}

TEST_CASE("KMat2 inverse and J equivariance under composition") {
    KMat2 A(k5(1, 1), k5(0, 2), k5(1, 0), k5(3, -1));
    CHECK(!A.det().is_zero());
    KMat2 B = A.inverse();
    KMat2 I = A * B;
    CHECK(I.m[0][0] == promote(KNum(Rat(1)), F5));
    CHECK(I.m[0][1].is_zero());
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        Vec2K v{rnd_k(rng, F5), rnd_k(rng, F5)}, w{rnd_k(rng, F5), rnd_k(rng, F5)};
        JNum J = jWedge(v, w);
        CHECK(transform(A, J) == jWedge(A.apply(v), A.apply(w)));
    }
}

TEST_CASE("field mismatch is an error") {
    KNum a(Rat(1), Rat(1), QuadField(5));
    KNum b(Rat(1), Rat(1), QuadField(17));
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(wedgeK(a, b), std::domain_error);
    // rationals promote silently
    CHECK_NOTHROW(a + KNum(Rat(3)));
}

TEST_CASE("KNum text round trip") {
    for (const char* s : {"2", "-3/4", "0+1*sqrt(5)", "2-3/2*sqrt(17)", "1/6+1/6*sqrt(17)"}) {
        KNum x = KNum::parse(s);
        CHECK(KNum::parse(x.str()) == x);
    }
    KNum t = KNum::parse("(-1+1*sqrt(17))/6");
    CHECK(t == KNum(make_rat(-1, 6), make_rat(1, 6), QuadField(17)));
    // JSON form
    KNum y = KNum::parse("2-3/2*sqrt(17)");
    CHECK(KNum::from_json(y.to_json()) == y);
}

TEST_CASE("KiNum basics") {
    QuadField F(5);
    KiNum z(KNum(Rat(1), Rat(1), F), KNum(Rat(2), Rat(-1), F));
    CHECK(z.conj_complex().im == -z.im);
    CHECK(z.conj_galois().re == z.re.conj());
    KiNum w = z * z.conj_complex();
    CHECK(w.im.is_zero());
}
