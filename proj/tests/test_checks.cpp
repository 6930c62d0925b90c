#include "novikov/checks.hpp"
#include "novikov/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

using namespace novikov;

namespace {

const CheckResult& find_check(const std::vector<CheckResult>& results, const std::string& name) {
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const CheckResult& r) { return r.name == name; });
    REQUIRE(it != results.end());
    return *it;
}

} // namespace

TEST_CASE("the fixed identity list passes in full") {
    auto results = paper_checks();
    CHECK(results.size() == 19);
    CHECK(all_pass(results));
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("the corrupted derivation makes the downstream identities fail") {
    auto results = paper_checks(true);
    CHECK(results.size() == 19);
    CHECK_FALSE(all_pass(results));
    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass) {
            ++failures;
        }
    }
    CHECK(failures == 10);
    // The corruption bends only the middle image, so the x-image identity
    // still holds while everything through y breaks.
    CHECK(find_check(results, "D1(x) = y*w''").pass);
    CHECK(find_check(results, "D1(z) = 0").pass);
    CHECK_FALSE(find_check(results, "D1(y) = 1/2*z*w''").pass);
    CHECK_FALSE(find_check(results, "D1(w) = 0").pass);
    CHECK_FALSE(find_check(results, "induced derivation of D1 = (2*y*w, z*w, 0)").pass);
    // Failure details say what was seen.
    CHECK_FALSE(find_check(results, "D1(y) = 1/2*z*w''").detail.empty());
}

TEST_CASE("randomized properties pass on a reduced budget") {
    PropertyOptions opts;
    opts.cases = 40;
    auto results = property_checks(opts);
    CHECK(results.size() == 23);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("property runs are deterministic in the seed") {
    PropertyOptions opts;
    opts.cases = 10;
    auto first = property_checks(opts);
    auto second = property_checks(opts);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].pass == second[i].pass);
        CHECK(first[i].detail == second[i].detail);
    }

    PropertyOptions other = opts;
    other.seed = 43;
    auto shifted = property_checks(other);
    REQUIRE(shifted.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == shifted[i].name);
        CHECK(shifted[i].pass);
    }
}

TEST_CASE("all_pass summarizes result vectors") {
    CHECK(all_pass({}));
    CHECK(all_pass({{"a", true, ""}, {"b", true, ""}}));
    CHECK_FALSE(all_pass({{"a", true, ""}, {"b", false, "boom"}}));
}

TEST_CASE("values serialize to stable json shapes") {
    auto R = standard_ring();
    auto j = json_of(builtin_w0(R));
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][0]["factors"][0]["var"] == "y");
    CHECK(j["terms"][0]["factors"][0]["order"] == 0);
    CHECK(j["terms"][0]["factors"][0]["power"] == 1);
    CHECK(j["terms"][0]["factors"][1]["order"] == 1);
    CHECK(j["terms"][1]["coeff"] == "-1/2");

    auto jd = json_of(builtin_partial1(R));
    REQUIRE(jd["images"].size() == 3);
    CHECK(jd["images"][0]["generator"] == "x");
    CHECK(jd["images"][0]["image"] == "2*y");
    CHECK(jd["images"][2]["image"] == "0");

    auto jp = json_of(builtin_psi(R));
    CHECK(jp["novikov"] == true);
    CHECK(jp["images"][2]["image"] == "z");

    auto je = json_of(NovikovElement(R, Rational(3), DiffPolynomial::generator(R, 1)));
    CHECK(je["unit"] == "3");
    CHECK(je["terms"][0]["factors"][0]["var"] == "y");

    auto R2 = make_ring({"x", "y"}, 2);
    auto f2 = DiffPolynomial::generator(R2, 0).derivative({1, 2});
    auto j2 = json_of(f2);
    CHECK(j2["terms"][0]["factors"][0]["order"] == std::vector<int>{1, 2});

    auto jc = json_of(comm_w(R));
    CHECK(jc["terms"][0]["coeff"] == "1");
    CHECK(jc["terms"][0]["factors"][0]["var"] == "y");
    CHECK(jc["terms"][0]["factors"][0]["power"] == 2);

    CHECK(json_report("it holds", true, "") ==
          Json({{"name", "it holds"}, {"status", "pass"}, {"detail", ""}}));
    CHECK(json_report("it fails", false, "got 1")["status"] == "fail");
}
