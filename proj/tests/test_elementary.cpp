#include "doctest.h"
#include "zetaform/elementary.hpp"
#include "zetaform/oracle.hpp"

using namespace zetaform;

TEST_CASE("partial fraction pair matches hand-computed cases") {
  // 1/((x)^2 (x+1)) = 1/x^2 - 1/x + 1/(x+1).
  auto [a, b] = partial_fraction_pair(2, 1, 0, 1);
  CHECK(a == std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(b == std::vector<Rat>{Rat(1)});
  // 1/((x)(x+2)) = (1/2)/x - (1/2)/(x+2).
  auto [c, d] = partial_fraction_pair(1, 1, 0, 2);
  CHECK(c == std::vector<Rat>{Rat(1, 2)});
  CHECK(d == std::vector<Rat>{Rat(-1, 2)});
  CHECK_THROWS(partial_fraction_pair(1, 1, 3, 3));
}

TEST_CASE("partial fractions reconstruct the original rational function") {
  const int u1 = 3, u2 = 2, p1 = 1, p2 = 4;
  auto [a, b] = partial_fraction_pair(u1, u2, p1, p2);
  for (long x = 0; x <= 8; ++x) {
    Rat lhs = 1 / (pow_rat(Rat(x + p1), u1) * pow_rat(Rat(x + p2), u2));
    Rat rhs(0);
    for (int k = 1; k <= u1; ++k) rhs += a[k - 1] / pow_rat(Rat(x + p1), k);
    for (int k = 1; k <= u2; ++k) rhs += b[k - 1] / pow_rat(Rat(x + p2), k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("base case decomposition is a single polylog") {
  LinearForm f = decompose(ElementarySum({2, 1}, {0, 0}));
  CHECK(f.terms().size() == 1);
  CHECK(f.coefficient(MultiIndex({2, 1})) == Polynomial::monomial(Rat(1), 1));
  CHECK(f.free_term().is_zero());
}

TEST_CASE("depth one with shift matches the telescoped closed form") {
  // sum z^{n-1}/(n+1) = w^2 Le_1(z) - w, with w = 1/z.
  LinearForm f = decompose(ElementarySum({1}, {1}));
  CHECK(f.coefficient(MultiIndex({1})) == Polynomial::monomial(Rat(1), 2));
  CHECK(f.free_term() == Polynomial::monomial(Rat(-1), 1));
}

TEST_CASE("verify_lemma1 on a corpus of small sums") {
  for (const ElementarySum& e :
       {ElementarySum({1}, {2}), ElementarySum({2}, {3}),
        ElementarySum({1, 1}, {0, 1}), ElementarySum({2, 1}, {1, 1}),
        ElementarySum({1, 2}, {2, 1}), ElementarySum({2, 2}, {0, 2}),
        ElementarySum({1, 1, 1}, {1, 0, 2}), ElementarySum({3, 1}, {2, 2})}) {
    auto report = verify_lemma1(e, 40);
    INFO(e.to_string(), " first mismatch at z^", report.first_series_mismatch);
    CHECK(report.denominators_ok);
    CHECK(report.height_ok);
    CHECK(report.series_ok);
  }
}

TEST_CASE("decomposition weight profile stays within the source weight") {
  ElementarySum e({2, 1, 1}, {1, 2, 0});
  LinearForm f = decompose(e);
  for (const auto& [s, poly] : f.terms()) {
    CHECK(s.weight() <= e.weight());
    CHECK(poly.degree() >= 1);  // every polylog coefficient is divisible by w
  }
}
