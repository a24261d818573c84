#include "mdeg/polymatroid.hpp"

#include "mdeg/arrangement.hpp"
#include "mdeg/flag.hpp"
#include "support/generators.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace mdeg;

namespace {

const RankFunction kExampleRank(3, {0, 3, 2, 4, 3, 4, 3, 4});

LatticePointSet points_of(int n, std::initializer_list<std::vector<int>> pts) {
    LatticePointSet s;
    s.n = n;
    for (const auto& p : pts) {
        s.insert(p);
    }
    return s;
}

} // namespace

TEST_CASE("polymatroid axioms", "[polymatroid]") {
    const RankFunction free3 = testgen::uniform_matroid(3, 3);
    CHECK(check_polymatroid(free3).ok);

    RankFunction bad_r1(2, {1, 1, 1, 2});
    const CheckResult r1 = check_polymatroid(bad_r1);
    REQUIRE(!r1.ok);
    CHECK(r1.violations[0].kind == AxiomViolation::NormalizationR1);

    // f{1}=f{2}=0 but f{1,2}=1: submodularity fails on the disjoint pair
    RankFunction bad_r3(2, {0, 0, 0, 1});
    const CheckResult r3 = check_polymatroid(bad_r3);
    REQUIRE(!r3.ok);
    CHECK(r3.violations[0].kind == AxiomViolation::SubmodularR3);
    CHECK((r3.violations[0].i | r3.violations[0].j) == 3u);

    RankFunction bad_r2(2, {0, 2, 1, 1});
    const CheckResult r2 = check_polymatroid(bad_r2);
    REQUIRE(!r2.ok);
    CHECK(std::any_of(r2.violations.begin(), r2.violations.end(), [](const AxiomViolation& v) {
        return v.kind == AxiomViolation::MonotoneR2;
    }));

    CHECK(check_polymatroid(kExampleRank).ok);
}

TEST_CASE("matroid axioms", "[polymatroid]") {
    CHECK(check_matroid(testgen::uniform_matroid(2, 4)).ok);

    // the example projection-rank function is a polymatroid but not a matroid
    const CheckResult res = check_matroid(kExampleRank);
    CHECK(check_polymatroid(kExampleRank).ok);
    REQUIRE(!res.ok);
    CHECK(res.violations[0].kind == AxiomViolation::RangeR4);
    CHECK(res.violations[0].i == 1u); // f{1} = 3 > 1

    CHECK(check_matroid(testgen::vamos_rank_function()).ok);
}

TEST_CASE("vamos fixture file matches the builder", "[polymatroid][fixture]") {
    std::ifstream in(std::string(MDEG_FIXTURE_DIR) + "/vamos.rankfn");
    REQUIRE(in.good());
    CHECK(parse_rankfn(in) == testgen::vamos_rank_function());
}

TEST_CASE("base polytope lattice points", "[polymatroid]") {
    CHECK(base_polytope_points(testgen::uniform_matroid(3, 3)) ==
          points_of(3, {{1, 1, 1}}));

    CHECK(base_polytope_points(kExampleRank) ==
          points_of(3, {{3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1},
                        {2, 0, 2}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3}}));

    const RankFunction zero(2, {0, 0, 0, 0});
    CHECK(base_polytope_points(zero) == points_of(2, {{0, 0}}));

    const RankFunction invalid(2, {0, 0, 0, 1});
    CHECK_THROWS_AS(base_polytope_points(invalid), std::invalid_argument);
}

TEST_CASE("base polytope contains the greedy point and matches the naive filter",
          "[polymatroid][property]") {
    std::mt19937_64 eng(777);
    for (int it = 0; it < 50; ++it) {
        const int n = testgen::rand_int(eng, 1, 5);
        const RankFunction f = testgen::random_valid_polymatroid(eng, n);
        const LatticePointSet pts = base_polytope_points(f);

        REQUIRE(!pts.points.empty());
        const LatticePoint greedy = greedy_base_point(f);
        CHECK(pts.contains(greedy));
        for (const auto& p : pts.points) {
            for (int v : p) {
                CHECK(v >= 0);
            }
        }
        CHECK(pts == testgen::naive_points_under(n, f.values));
    }
}

TEST_CASE("u-profile of a base polytope recovers the rank function",
          "[polymatroid][property]") {
    std::mt19937_64 eng(31337);
    for (int it = 0; it < 25; ++it) {
        const int n = testgen::rand_int(eng, 1, 4);
        const std::size_t ambient = static_cast<std::size_t>(testgen::rand_int(eng, 1, 5));
        const RankFunction f = rank_function(testgen::random_arrangement(eng, n, ambient, false));
        const LatticePointSet pts = base_polytope_points(f);
        const SupportProfile profile = u_profile(pts);
        CHECK(profile.u == f.values);
    }
    // and for synthetic valid polymatroids as well
    for (int it = 0; it < 25; ++it) {
        const int n = testgen::rand_int(eng, 1, 5);
        const RankFunction f = testgen::random_valid_polymatroid(eng, n);
        CHECK(u_profile(base_polytope_points(f)).u == f.values);
    }
}

TEST_CASE("codimension form", "[polymatroid]") {
    const std::vector<int> dims{3, 3, 3};
    const LatticePointSet a = points_of(3, {{3, 1, 0}, {0, 0, 0}});
    const LatticePointSet t = codim_form(a, dims);
    CHECK(t == points_of(3, {{0, 2, 3}, {3, 3, 3}}));
    CHECK(codim_form(t, dims) == a);

    CHECK_THROWS_AS(codim_form(points_of(2, {{4, 0}}), std::vector<int>{3, 3}),
                    std::domain_error);
}

TEST_CASE("u-profile values", "[polymatroid]") {
    SECTION("single point concentrated on one factor") {
        const SupportProfile p = u_profile(points_of(3, {{4, 0, 0}}));
        CHECK(p.d == 4);
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            CHECK(p.u[mask] == ((mask & 1u) ? 4 : 0));
        }
    }

    SECTION("example fourfold support in dimension form") {
        const SupportProfile p = u_profile(base_polytope_points(kExampleRank));
        CHECK(p.u == kExampleRank.values);
    }

    SECTION("full flag threefold support") {
        const SupportProfile p = u_profile(flag_support(3).support);
        CHECK(p.u == std::vector<long long>{0, 3, 4, 5, 3, 5, 5, 6});
    }

    SECTION("errors") {
        CHECK_THROWS_AS(u_profile(LatticePointSet{3, {}}), std::invalid_argument);
        CHECK_THROWS_AS(u_profile(points_of(2, {{1, 0}, {1, 1}})), std::invalid_argument);
    }
}

TEST_CASE("outer polytope Q and the support theorem check", "[polymatroid]") {
    SECTION("singleton support") {
        const LatticePointSet s = points_of(2, {{2, 1}});
        CHECK(q_points(u_profile(s)) == s);
        CHECK(verify_support_theorem(s).holds);
    }

    SECTION("example fourfold support is exactly its polytope") {
        const LatticePointSet s = base_polytope_points(kExampleRank);
        const SupportTheoremResult res = verify_support_theorem(s);
        CHECK(res.holds);
        CHECK(!res.witness.has_value());
        CHECK(res.q == s);
    }

    SECTION("a gappy support is detected with a witness") {
        const LatticePointSet s = points_of(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
        const LatticePointSet q = q_points(u_profile(s));
        CHECK(q.contains({1, 1, 0}));
        CHECK(q.points.size() == 6);

        const SupportTheoremResult res = verify_support_theorem(s);
        REQUIRE(!res.holds);
        REQUIRE(res.witness.has_value());
        CHECK(*res.witness == LatticePoint{0, 1, 1}); // lex-least missing point
    }
}

TEST_CASE("ingleton checks", "[polymatroid][ingleton]") {
    const RankFunction u24 = testgen::uniform_matroid(2, 4);
    CHECK(ingleton_check(u24, IngletonMode::Elements).empty());
    CHECK(ingleton_check(u24, IngletonMode::Subsets).empty());

    const RankFunction vamos = testgen::vamos_rank_function();
    CHECK(ingleton_check(vamos, IngletonMode::Elements).empty());

    const auto violations = ingleton_check(vamos, IngletonMode::Subsets);
    REQUIRE(!violations.empty());
    // the canonical violating tuple: the four pairs, with {1,2},{3,4} in the
    // first slots
    const auto canonical = std::find_if(violations.begin(), violations.end(),
                                        [](const IngletonViolation& v) {
                                            return v.slots == std::array<std::uint32_t, 4>{
                                                       0x3, 0xC, 0x30, 0xC0};
                                        });
    REQUIRE(canonical != violations.end());
    CHECK(canonical->lhs == 16);
    CHECK(canonical->rhs == 15);

    CHECK(ingleton_check(testgen::uniform_matroid(2, 3)).empty()); // n < 4 is vacuous
    RankFunction big = RankFunction::from_fn(9, [](std::uint32_t m) {
        return std::popcount(m);
    });
    CHECK_THROWS_AS(ingleton_check(big, IngletonMode::Subsets), std::invalid_argument);
}

TEST_CASE("elements-mode ingleton is relabeling invariant", "[polymatroid][ingleton]") {
    std::mt19937_64 eng(4242);
    for (int it = 0; it < 10; ++it) {
        const int n = testgen::rand_int(eng, 4, 6);
        const RankFunction f = testgen::random_valid_polymatroid(eng, n);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), eng);
        const RankFunction g = RankFunction::from_fn(n, [&](std::uint32_t mask) {
            std::uint32_t pre = 0;
            for (int i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) {
                    pre |= std::uint32_t{1} << perm[i];
                }
            }
            return f[pre];
        });
        CHECK(ingleton_check(f, IngletonMode::Elements).size() ==
              ingleton_check(g, IngletonMode::Elements).size());
    }
}

TEST_CASE("representability frontier", "[polymatroid][frontier]") {
    std::mt19937_64 eng(11);
    for (int it = 0; it < 10; ++it) {
        const int n = testgen::rand_int(eng, 1, 3);
        CHECK(representability_frontier(testgen::random_valid_polymatroid(eng, n)) ==
              Frontier::ConsistentRepresentable);
    }

    CHECK(representability_frontier(testgen::uniform_matroid(2, 4)) ==
          Frontier::ConsistentRepresentable);
    CHECK(representability_frontier(testgen::vamos_rank_function()) ==
          Frontier::NecessaryConditionsFail);
    CHECK(representability_frontier(testgen::uniform_matroid(3, 5)) ==
          Frontier::Inconclusive);

    const RankFunction invalid(4, std::vector<long long>(16, 1));
    CHECK_THROWS_AS(representability_frontier(invalid), std::invalid_argument);
}

TEST_CASE("rankfn text format", "[polymatroid][format]") {
    for (const char* name : {"/vamos.rankfn", "/u24.rankfn", "/example_p3p3p3.rankfn"}) {
        std::ifstream in(std::string(MDEG_FIXTURE_DIR) + name);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::istringstream parse_in(buffer.str());
        CHECK(rankfn_to_string(parse_rankfn(parse_in)) == buffer.str());
    }

    std::istringstream bad_order("rankfn 1\n1 0\n0 0\n");
    CHECK_THROWS_AS(parse_rankfn(bad_order), ParseError);
    std::istringstream bad_n("rankfn 17\n");
    CHECK_THROWS_AS(parse_rankfn(bad_n), ParseError);
}

TEST_CASE("points text format", "[polymatroid][format]") {
    const LatticePointSet s = base_polytope_points(kExampleRank);
    std::istringstream in(points_to_string(s));
    CHECK(parse_points(in) == s);

    std::istringstream wrong_sum("points 2 3 1\n1 1\n");
    CHECK_THROWS_AS(parse_points(wrong_sum), ParseError);
    std::istringstream dup("points 2 2 2\n1 1\n1 1\n");
    CHECK_THROWS_AS(parse_points(dup), ParseError);

    // mixed-sum sets use d = -1 and skip the per-row sum check
    std::istringstream mixed("points 2 -1 2\n1 0\n1 1\n");
    CHECK(parse_points(mixed).points.size() == 2);
}
