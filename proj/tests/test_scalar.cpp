// Coefficient arithmetic: the quadratic extension, Laurent u-powers, h-powers
// with truncation, and the derivative/restriction helpers.

#include "doctest.h"
#include "gaudin/scalar.hpp"

using namespace gaudin;

TEST_CASE("rat canonicalizes and rejects zero denominators") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(0, 5) == 0);
    CHECK_THROWS_AS(rat(1, 0), argument_error);
}

TEST_CASE("QExt implements s^2 = -2") {
    QExt s = QExt::s();
    CHECK(s * s == QExt(-2));
    QExt q(rat(3, 2), rat(-1, 3));
    CHECK(q * QExt(1) == q);
    CHECK((q + (-q)).is_zero());
    // (a+bs)(c+ds) cross check
    QExt p(rat(1), rat(2));
    CHECK(q * p == QExt(rat(3, 2) + 2 * rat(2, 3), rat(3) - rat(1, 3)));
}

TEST_CASE("QExt inverse") {
    QExt q(rat(3), rat(-2));
    CHECK(q * q.inverse() == QExt(1));
    CHECK(QExt::s() * QExt::s().inverse() == QExt(1));
    CHECK_THROWS_AS(QExt().inverse(), argument_error);
}

TEST_CASE("Scalar monomial arithmetic") {
    Scalar a(QExt(2), 1, 0);
    Scalar b(QExt(3), 2, 0);
    CHECK(a * b == Scalar(QExt(6), 3, 0));
    CHECK((a + Scalar(QExt(-2), 1, 0)).is_zero());
    CHECK(-a == Scalar(QExt(-2), 1, 0));
    CHECK(a.scaled(QExt(rat(1, 2))) == Scalar(QExt(1), 1, 0));
    CHECK(a.shifted(-1, 2) == Scalar(QExt(2), 0, 2));
    CHECK(a.is_monomial());
    CHECK_FALSE((a + b).is_monomial());
}

TEST_CASE("Scalar cutoff drops high h-powers at insertion") {
    CHECK(Scalar(QExt(1), 0, 5, 3).is_zero());
    CHECK_FALSE(Scalar(QExt(1), 0, 2, 3).is_zero());
    // product crossing the cutoff vanishes
    Scalar h2(QExt(1), 0, 2, 3);
    CHECK((h2 * h2).is_zero());
    // shifting across the cutoff also drops
    CHECK(Scalar(QExt(1), 0, 2, 3).shifted(0, 1).is_zero());
    // re-truncation
    CHECK(Scalar(QExt(1), 0, 2).with_cutoff(2).is_zero());
    CHECK_FALSE(Scalar(QExt(1), 0, 2).with_cutoff(3).is_zero());
}

TEST_CASE("Scalar cutoff merging") {
    Scalar a(QExt(1), 0, 0, 3);
    Scalar b(QExt(1), 0, 0, 2);
    CHECK_THROWS_AS(a + b, config_error);
    CHECK_THROWS_AS(a * b, config_error);
    // an empty scalar adopts the other operand's cutoff
    Scalar z = Scalar::zero();
    CHECK((z + a).cutoff() == 3);
    CHECK((Scalar::zero(3) + Scalar(QExt(1))).cutoff() == Scalar::kNoCutoff);
    CHECK((a + Scalar::zero()).cutoff() == 3);
}

TEST_CASE("Scalar h_part restricts to one layer") {
    Scalar v = Scalar(QExt(1), 0, 0, 3) + Scalar(QExt(2), 1, 1, 3) + Scalar(QExt(3), 0, 2, 3);
    CHECK(v.h_part(1) == Scalar(QExt(2), 1, 1, 3));
    CHECK(v.h_part(2) == Scalar(QExt(3), 0, 2, 3));
    CHECK(v.h_part(5).is_zero());
    CHECK(v.h_part(1).cutoff() == 3);
}

TEST_CASE("Scalar u-derivatives") {
    Scalar u3(QExt(1), 3, 0);
    CHECK(u3.d_du_z() == Scalar(QExt(3), 2, 0));
    CHECK(u3.d_du_w() == Scalar(QExt(-3), 2, 0));
    CHECK(Scalar(QExt(5)).d_du_z().is_zero());
    CHECK(Scalar(QExt(1), -1, 0).d_du_z() == Scalar(QExt(-1), -2, 0));
}

TEST_CASE("Scalar max_u_pole") {
    CHECK(Scalar(QExt(1), -2, 0).max_u_pole() == 2);
    CHECK(Scalar(QExt(1), 3, 0).max_u_pole() == 0);
    CHECK((Scalar(QExt(1), -1, 0) + Scalar(QExt(1), -4, 0)).max_u_pole() == 4);
    CHECK(Scalar().max_u_pole() == 0);
}
