#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "zetaform/cache.hpp"
#include "zetaform/corpus.hpp"
#include "zetaform/json_io.hpp"
#include "zetaform/oracle.hpp"

using namespace zetaform;

TEST_CASE("random elementary sums are valid and deterministic") {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    ElementarySum ea = random_elementary_sum(a);
    ElementarySum eb = random_elementary_sum(b);
    CHECK(ea.u == eb.u);
    CHECK(ea.p == eb.p);
    CHECK(ea.depth() >= 1);
    CHECK(ea.depth() <= 3);
    for (int u : ea.u) {
      CHECK(u >= 1);
      CHECK(u <= 3);
    }
    for (int p : ea.p) {
      CHECK(p >= 0);
      CHECK(p <= 4);
    }
  }
}

TEST_CASE("random nested sums satisfy the reduction preconditions") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    NestedSum s = random_nested_sum(rng);
    CHECK(s.factors.front().index() < 0);
    CHECK_FALSE(check_indices_condition(s).has_value());
    for (const auto& f : s.factors) CHECK(f.check_contract());
    // And they actually reduce, preserving the series.
    auto terms = reduce(s);
    SeriesWindow direct = nested_sum_series(s, 25);
    SeriesWindow combined;
    combined.add_coeff(0, Rat(0));
    for (const ReducedTerm& t : terms)
      combined += nested_sum_series(t.sum, 25).scaled(t.lambda);
    auto [equal, mismatch] = series_equal(direct, combined);
    INFO("corpus item ", i, ", first mismatch at z^", mismatch);
    CHECK(equal);
  }
}

TEST_CASE("linear form JSON round-trips exactly") {
  LinearForm f = decompose(ElementarySum({2, 1}, {1, 1}));
  nlohmann::json j = linear_form_to_json(f, {{"m", 3}, {"P", 1}});
  LinearForm back = linear_form_from_json(j);
  CHECK(back == f);
  CHECK(j.at("meta").at("m") == 3);
}

TEST_CASE("integral params JSON round-trips") {
  auto [p, d] = vasilyev_params(2, 1);
  nlohmann::json j = integral_params_to_json(p, d);
  auto [p2, d2] = integral_params_from_json(j);
  CHECK(p2 == p);
  CHECK(d2.d == d.d);
}

TEST_CASE("decompose cache hit equals the fresh result") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "zetaform-cache-test";
  fs::remove_all(dir);
  setenv("ZETAFORM_CACHE_DIR", dir.c_str(), 1);

  auto [p, d] = vasilyev_params(1, 1);
  CHECK_FALSE(cache_lookup(p, d).has_value());
  LinearForm fresh = cached_decompose_integral(p, d);
  REQUIRE(cache_lookup(p, d).has_value());
  LinearForm cached = cached_decompose_integral(p, d);
  CHECK(cached == fresh);
  auto [equal, mismatch] =
      series_equal(linear_form_series(cached, 20), integral_series(p, 20));
  INFO("first mismatch at z^", mismatch);
  CHECK(equal);

  unsetenv("ZETAFORM_CACHE_DIR");
  fs::remove_all(dir);
}
