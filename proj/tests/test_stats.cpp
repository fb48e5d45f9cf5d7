#include "ans/stats/finner.hpp"
#include "ans/stats/summary.hpp"
#include "ans/stats/wilcoxon.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace ans::stats;
using ans::testing::finner_oracle;
using ans::testing::rank_sum_oracle;
using ans::testing::signed_rank_oracle;

namespace {

std::vector<std::optional<std::uint64_t>> nfe_list(std::initializer_list<std::optional<std::uint64_t>> v)
{
    return v;
}

} // namespace

TEST_CASE("summarize: examples")
{
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    const auto nfe = nfe_list({100, 120, 80});
    auto s = summarize(zeros, nfe);
    CHECK(s.mean == 0.0);
    CHECK(s.std == 0.0);
    CHECK(s.success_rate == 1.0);
    CHECK(s.mean_nfe == 100.0);

    const std::vector<double> pair{1.0, 3.0};
    const auto none = nfe_list({std::nullopt, std::nullopt});
    s = summarize(pair, none);
    CHECK(s.mean == 2.0);
    CHECK(s.std == doctest::Approx(std::sqrt(2.0)));
    CHECK(s.success_rate == 0.0);
    CHECK_FALSE(s.mean_nfe.has_value());

    const std::vector<double> mixed{0.0, 5.0, 0.0, 2.0};
    const auto some = nfe_list({10, std::nullopt, 30, std::nullopt});
    s = summarize(mixed, some);
    CHECK(s.success_rate == 0.5);
    CHECK(s.successes == 2);
    CHECK(s.mean_nfe == 20.0);

    CHECK_THROWS_AS(summarize(std::vector<double>{}, nfe_list({})), std::invalid_argument);
    CHECK_THROWS_AS(summarize(pair, nfe_list({1})), std::invalid_argument);
}

TEST_CASE("summarize: tiny values keep a non-zero spread")
{
    const std::vector<double> tiny{1e-250, 3e-250};
    const auto s = summarize(tiny, nfe_list({1, 1}));
    CHECK(s.std == doctest::Approx(std::sqrt(2.0) * 1e-250));
}

TEST_CASE("rank_algorithms: ties share the smallest rank")
{
    CHECK(rank_algorithms(std::vector{0.0, 0.0, 0.0}) == std::vector{1, 1, 1});
    CHECK(rank_algorithms(std::vector{3.0, 1.0, 2.0}) == std::vector{3, 1, 2});
    CHECK(rank_algorithms(std::vector{0.0, 0.0, 5.0}) == std::vector{1, 1, 3});
}

TEST_CASE("rank-sum: examples")
{
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{10, 11, 12, 13, 14};
    const auto r = rank_sum_test(a, b);
    CHECK(r.exact);
    CHECK(r.p_value == doctest::Approx(2.0 / 252.0).epsilon(1e-12));
    CHECK(wilcoxon_rank_sum(a, b).symbol == Verdict::minus);
    CHECK(wilcoxon_rank_sum(b, a).symbol == Verdict::plus);

    CHECK(wilcoxon_rank_sum(a, a).symbol == Verdict::approx);

    const std::vector<double> zeros(5, 0.0);
    const std::vector<double> ones(5, 1.0);
    const auto v = wilcoxon_rank_sum(zeros, ones);
    CHECK(v.symbol == Verdict::minus);
    CHECK(v.p_value == doctest::Approx(rank_sum_oracle(zeros, ones)));

    const auto tied = rank_sum_test(ones, ones);
    CHECK(tied.p_value == 1.0);
    CHECK_THROWS_AS(rank_sum_test(std::vector{1.0}, b), std::invalid_argument);
}

TEST_CASE("rank-sum: exact route matches enumeration and is symmetric")
{
    std::mt19937 gen(77);
    std::uniform_int_distribution<int> size(2, 7);
    std::uniform_int_distribution<int> value(0, 6);
    for (int t = 0; t < 300; ++t) {
        std::vector<double> a(size(gen));
        std::vector<double> b(size(gen));
        for (auto& x : a) {
            x = value(gen);
        }
        for (auto& x : b) {
            x = value(gen);
        }
        const double p = rank_sum_test(a, b, TestMethod::exact).p_value;
        REQUIRE(p == doctest::Approx(rank_sum_oracle(a, b)).epsilon(1e-12));
        REQUIRE(rank_sum_test(b, a, TestMethod::exact).p_value == p);
        const auto ab = wilcoxon_rank_sum(a, b, 0.2);
        const auto ba = wilcoxon_rank_sum(b, a, 0.2);
        REQUIRE(ab.p_value == ba.p_value);
        if (ab.symbol == Verdict::approx) {
            REQUIRE(ba.symbol == Verdict::approx);
        } else {
            REQUIRE(ba.symbol != ab.symbol);
            REQUIRE(ba.symbol != Verdict::approx);
        }
    }
}

TEST_CASE("rank-sum: normal route is close to exact for moderate samples")
{
    std::mt19937 gen(5);
    std::normal_distribution<double> norm;
    std::vector<double> a(15);
    std::vector<double> b(15);
    for (auto& x : a) {
        x = norm(gen);
    }
    for (auto& x : b) {
        x = norm(gen) + 0.8;
    }
    const double exact = rank_sum_test(a, b, TestMethod::exact).p_value;
    const double normal = rank_sum_test(a, b, TestMethod::normal).p_value;
    CHECK(std::abs(exact - normal) < 0.01);

    std::vector<double> big_a(25);
    std::vector<double> big_b(25);
    for (auto& x : big_a) {
        x = norm(gen);
    }
    for (auto& x : big_b) {
        x = norm(gen);
    }
    CHECK_FALSE(rank_sum_test(big_a, big_b).exact);
}

TEST_CASE("signed-rank: examples")
{
    CHECK(wilcoxon_signed_rank(std::vector{0.0, 0.0, 0.0}) == 1.0);
    CHECK(wilcoxon_signed_rank(std::vector{0.0, 2.5, 0.0}) == 1.0);
    const std::vector<double> same_sign(18, 1.5);
    std::vector<double> ranked(18);
    for (std::size_t i = 0; i < 18; ++i) {
        ranked[i] = static_cast<double>(i + 1);
    }
    CHECK(wilcoxon_signed_rank(ranked) == doctest::Approx(2.0 / std::ldexp(1.0, 18)).epsilon(1e-12));
    CHECK(wilcoxon_signed_rank(same_sign) == doctest::Approx(2.0 / std::ldexp(1.0, 18)).epsilon(1e-12));
}

TEST_CASE("signed-rank: exact route matches enumeration up to twelve differences")
{
    std::mt19937 gen(91);
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_int_distribution<int> value(-5, 5);
    for (int t = 0; t < 300; ++t) {
        std::vector<double> d(size(gen));
        for (auto& x : d) {
            x = value(gen);
        }
        REQUIRE(signed_rank_test(d, TestMethod::exact).p_value ==
                doctest::Approx(signed_rank_oracle(d)).epsilon(1e-12));
        std::vector<double> flipped = d;
        for (auto& x : flipped) {
            x = -x;
        }
        REQUIRE(wilcoxon_signed_rank(flipped) == wilcoxon_signed_rank(d));
    }
}

TEST_CASE("signed-rank: normal route without continuity correction")
{
    std::vector<double> d(30);
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (i % 3 == 0 ? -1.0 : 1.0) * static_cast<double>(i + 1);
    }
    const auto r = signed_rank_test(d);
    CHECK_FALSE(r.exact);
    const double n = 30.0;
    const double z = (r.t_plus - n * (n + 1) / 4.0) / std::sqrt(n * (n + 1) * (2 * n + 1) / 24.0);
    CHECK(r.p_value == doctest::Approx(std::erfc(std::abs(z) / std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("finner: published regression in paper_compat mode")
{
    const std::vector<double> p{2.9248e-4, 2.9305e-4, 2.9305e-4, 7.1601e-3, 3.5278e-2, 3.7573e-1, 8.0078e-1};
    const std::vector<double> expected{2.0456e-3, 2.0496e-3, 2.0496e-3, 4.9057e-2, 2.2230e-1, 9.6305e-1, 9.9999e-1};
    const auto adj = finner_adjust(p, FinnerMode::paper_compat);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(adj[i] == doctest::Approx(expected[i]).epsilon(5e-5));
    }
    CHECK(finner_adjust(std::vector{0.0, 0.2}, FinnerMode::paper_compat)[0] == 0.0);
    CHECK(finner_adjust(std::vector{0.0, 0.2}, FinnerMode::step_down)[0] == 0.0);
}

TEST_CASE("finner: step-down matches the direct formula and is monotone")
{
    const auto apv = finner_adjust(std::vector{0.01, 0.02, 0.03}, FinnerMode::step_down);
    CHECK(apv[0] == doctest::Approx(1.0 - std::pow(0.99, 3.0)));
    CHECK(apv[1] == doctest::Approx(1.0 - std::pow(0.98, 1.5)));
    CHECK(apv[2] == doctest::Approx(0.03));

    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> p(1 + t % 9);
        for (auto& x : p) {
            x = u(gen) * u(gen);
        }
        const auto adj = finner_adjust(p, FinnerMode::step_down);
        const auto ref = finner_oracle(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            REQUIRE(adj[i] == doctest::Approx(ref[i]).epsilon(1e-12));
            REQUIRE(adj[i] >= p[i]);
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (p[j] < p[i]) {
                    REQUIRE(adj[j] <= adj[i]);
                }
            }
        }
    }
    CHECK_THROWS_AS(finner_adjust(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(finner_adjust(std::vector{1.5}), std::invalid_argument);
    CHECK(parse_finner_mode("paper_compat") == FinnerMode::paper_compat);
}
