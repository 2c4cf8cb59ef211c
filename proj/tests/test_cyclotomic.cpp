#include <doctest.h>

#include <pstkit/cyclotomic.hpp>

#include <complex>
#include <random>

using namespace pstkit;

namespace {

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
    CycPoly c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

CycInt random_cycint(long N, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    CycInt acc(N);
    for (long e = 0; e < N; ++e)
        acc = acc + CycInt::root_power(N, e) * BigInt(coeff(rng));
    return acc;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == CycPoly{-1, 1});
    CHECK(cyclotomic_poly(2) == CycPoly{1, 1});
    CHECK(cyclotomic_poly(12) == CycPoly{1, 0, -1, 0, 1});
}

TEST_CASE("product of cyclotomic polynomials is x^N - 1") {
    for (long N = 1; N <= 64; ++N) {
        CycPoly prod{1};
        for (long d = 1; d <= N; ++d)
            if (N % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
        CycPoly expect(static_cast<std::size_t>(N) + 1, BigInt(0));
        expect[0] = -1;
        expect[static_cast<std::size_t>(N)] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("ring operations") {
    CycInt one4 = CycInt::integer(4, 1);
    CycInt z4 = CycInt::root_power(4, 1);
    CHECK(((one4 + z4) + (one4 - z4)).as_integer() == BigInt(2));
    CHECK(((z4 * z4) + one4).is_zero());  // zeta_4^2 = -1
    CHECK((CycInt::root_power(8, 3).conj() - CycInt::root_power(8, 5)).is_zero());
}

TEST_CASE("is_zero decides equality mod Phi_N") {
    CHECK((CycInt::integer(2, 1) + CycInt::root_power(2, 1)).is_zero());
    CHECK((CycInt::integer(3, 1) + CycInt::root_power(3, 1) +
           CycInt::root_power(3, 2))
              .is_zero());
    CHECK_FALSE((CycInt::integer(4, 1) + CycInt::root_power(4, 1)).is_zero());
}

TEST_CASE("as_integer") {
    CHECK((CycInt::integer(2, 2) + CycInt::integer(2, 1) +
           CycInt::root_power(2, 1))
              .as_integer() == BigInt(2));
    CHECK_FALSE((CycInt::root_power(8, 1) + CycInt::root_power(8, 7))
                    .as_integer()
                    .has_value());  // sqrt(2)
    CHECK((CycInt::root_power(4, 1) + CycInt::root_power(4, 3)).as_integer() ==
          BigInt(0));
}

TEST_CASE("numeric evaluation") {
    CHECK(std::abs((CycInt::integer(2, 1) + CycInt::root_power(2, 1))
                       .numeric_eval()) < 1e-12);
    auto i = CycInt::root_power(4, 1).numeric_eval();
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
    CycInt orbit(8);
    for (long e = 0; e < 8; ++e) orbit = orbit + CycInt::root_power(8, e);
    CHECK(std::abs(orbit.numeric_eval()) < 1e-12);
}

TEST_CASE("multiplication agrees with numeric evaluation") {
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<long> pick_n(1, 24);
    for (int trial = 0; trial < 200; ++trial) {
        long N = pick_n(rng);
        CycInt a = random_cycint(N, rng), b = random_cycint(N, rng);
        auto lhs = (a * b).numeric_eval();
        auto rhs = a.numeric_eval() * b.numeric_eval();
        CHECK(std::abs(lhs - rhs) < 1e-9);

        CycInt diff = a - b;
        if (diff.is_zero()) CHECK(std::abs(diff.numeric_eval()) < 1e-9);
        if (auto v = a.as_integer())
            CHECK((a - CycInt::integer(N, *v)).is_zero());
    }
}

TEST_CASE("real-valuedness test") {
    CHECK(CycInt::integer(8, 5).is_real());
    CHECK((CycInt::root_power(8, 1) + CycInt::root_power(8, 7)).is_real());
    CHECK_FALSE(CycInt::root_power(8, 1).is_real());
}

TEST_CASE("modulus mismatch is rejected") {
    CHECK_THROWS(CycInt::integer(4, 1) + CycInt::integer(8, 1));
}
