#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "popmatch/instance.hpp"
#include "popmatch/io.hpp"
#include "popmatch/matching.hpp"
#include "popmatch/vote.hpp"
#include "testutil.hpp"

using namespace popmatch;
using testutil::Rng;

namespace {

PreferenceInstance parse(const std::string& s) { return parse_instance(s); }

const char* kOneTieFixture =
    "model two-sided-one-tie\n"
    "agents a1 a2\n"
    "jobs b1 b2\n"
    "a1 : b1 > b2\n"
    "a2 : b1 > b2\n";

}  // namespace

TEST_CASE("vote: jobs abstain entirely in the one-sided model") {
    auto inst = parse(
        "model one-sided\nagents a1\njobs b1 b2\n"
        "a1 : b1 > b2\n");
    auto b1 = *inst.find_vertex("b1");
    CHECK(vote(inst, b1, *inst.find_vertex("a1"), std::nullopt) == 0);
    CHECK(vote(inst, b1, std::nullopt, *inst.find_vertex("a1")) == 0);
}

TEST_CASE("vote: one-tie jobs prefer being saturated") {
    auto inst = parse(kOneTieFixture);
    auto b1 = *inst.find_vertex("b1");
    auto a1 = *inst.find_vertex("a1");
    auto a2 = *inst.find_vertex("a2");
    CHECK(vote(inst, b1, a1, std::nullopt) == 1);
    CHECK(vote(inst, b1, std::nullopt, a2) == -1);
    CHECK(vote(inst, b1, a1, a2) == 0);
}

TEST_CASE("vote: strict agent order, unmatched worst") {
    auto inst = parse("model one-sided\nagents a1\njobs b1 b2\na1 : b1 > b2\n");
    auto a1 = *inst.find_vertex("a1");
    auto b1 = *inst.find_vertex("b1");
    auto b2 = *inst.find_vertex("b2");
    CHECK(vote(inst, a1, b2, b1) == -1);
    CHECK(vote(inst, a1, b1, b2) == 1);
    CHECK(vote(inst, a1, b2, std::nullopt) == 1);
    CHECK(vote(inst, a1, std::nullopt, b2) == -1);
    CHECK(vote(inst, a1, b1, b1) == 0);
}

TEST_CASE("vote: non-neighbour arguments are rejected") {
    auto inst = parse(
        "model one-sided\nagents a1 a2\njobs b1 b2\n"
        "a1 : b1\na2 : b1 > b2\n");
    auto a1 = *inst.find_vertex("a1");
    CHECK_THROWS_AS((void)vote(inst, a1, *inst.find_vertex("b2"), std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)vote(inst, a1, *inst.find_vertex("a2"), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("vote antisymmetry over random instances") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        ModelTag model = trial % 3 == 0   ? ModelTag{Model::OneSided, 1}
                         : trial % 3 == 1 ? ModelTag{Model::TwoSidedOneTie, 1}
                                          : ModelTag{Model::TwoSidedTies, 2};
        auto inst = testutil::random_instance(rng, model, 4, 4);
        for (int a = 0; a < inst.n_agents(); ++a) {
            const auto& nbrs = inst.neighbors(agent_id(a));
            for (int x : nbrs)
                for (int y : nbrs) {
                    int v1 = vote(inst, agent_id(a), job_id(x), job_id(y));
                    int v2 = vote(inst, agent_id(a), job_id(y), job_id(x));
                    CHECK(v1 == -v2);
                }
            for (int x : nbrs)
                CHECK(vote(inst, agent_id(a), job_id(x), std::nullopt) ==
                      -vote(inst, agent_id(a), std::nullopt, job_id(x)));
        }
    }
}

TEST_CASE("popularity_margin: identity and frozen examples") {
    auto inst = parse(
        "model two-sided-one-tie\nagents a1\njobs b1 b2\n"
        "a1 : b1 > b2\n");
    auto m = testutil::parse_pairs(inst, {{"a1", "b1"}});
    auto mp = testutil::parse_pairs(inst, {{"a1", "b2"}});
    CHECK(popularity_margin(inst, m, m) == 0);
    // a1 votes +1, b1 +1 (loses saturation otherwise), b2 -1.
    CHECK(popularity_margin(inst, m, mp) == 1);
    CHECK(popularity_margin(inst, mp, m) == -1);

    auto one = testutil::one_sided({{0, 1}, {0, 1}}, 2);
    auto m1 = testutil::parse_pairs(one, {{"a0", "b0"}, {"a1", "b1"}});
    auto m2 = testutil::parse_pairs(one, {{"a1", "b0"}, {"a0", "b1"}});
    CHECK(popularity_margin(one, m1, m2) == 0);
}

TEST_CASE("popularity_margin antisymmetry and job-abstention over random instances") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = testutil::random_instance(rng, {Model::OneSided, 1}, 4, 4);
        std::vector<Matching> ms;
        testutil::all_matchings(inst, [&](const Matching& m) {
            if (ms.size() < 12) ms.push_back(m);
        });
        for (const auto& x : ms)
            for (const auto& y : ms) {
                int d = popularity_margin(inst, x, y);
                CHECK(d == -popularity_margin(inst, y, x));
                // one-sided margins are agent-only
                int agents_only = 0;
                for (int a = 0; a < inst.n_agents(); ++a)
                    agents_only +=
                        vote(inst, agent_id(a),
                             x.job_of(a) < 0 ? std::nullopt
                                             : std::optional<VertexId>(job_id(x.job_of(a))),
                             y.job_of(a) < 0 ? std::nullopt
                                             : std::optional<VertexId>(job_id(y.job_of(a))));
                CHECK(d == agents_only);
            }
    }
}

TEST_CASE("parse: minimal one-sided file") {
    auto inst = parse("model one-sided\nagents a1\njobs b1\na1 : b1\n");
    CHECK(inst.n_agents() == 1);
    CHECK(inst.n_jobs() == 1);
    CHECK(inst.n_edges() == 1);
    CHECK(inst.model().model == Model::OneSided);
}

TEST_CASE("parse: job line is rejected outside two-sided-ties") {
    CHECK_THROWS_AS(parse("model one-sided\nagents a1\njobs b1\na1 : b1\nb1 : a1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse("model two-sided-one-tie\nagents a1\njobs b1\na1 : b1\nb1 : a1\n"),
                    ParseError);
}

TEST_CASE("parse: ties map to groups and respect the declared bound") {
    auto inst = parse(
        "model two-sided-ties k=2\nagents a1\njobs b1 b2\n"
        "a1 : [b1 b2]\nb1 : a1\nb2 : a1\n");
    const auto& prefs = inst.prefs(*inst.find_vertex("a1"));
    REQUIRE(prefs.groups.size() == 1);
    CHECK(prefs.groups[0].size() == 2);

    CHECK_THROWS_AS(parse("model two-sided-ties k=2\nagents a1\njobs b1 b2 b3\n"
                          "a1 : [b1 b2 b3]\nb1 : a1\nb2 : a1\nb3 : a1\n"),
                    ParseError);
    // comma continues the current group
    auto inst2 = parse(
        "model two-sided-ties k=2\nagents a1\njobs b1 b2 b3\n"
        "a1 : b1 > b2, b3\nb1 : a1\nb2 : a1\nb3 : a1\n");
    const auto& p2 = inst2.prefs(*inst2.find_vertex("a1"));
    REQUIRE(p2.groups.size() == 2);
    CHECK(p2.groups[1].size() == 2);
}

TEST_CASE("parse: diagnostics carry line numbers") {
    try {
        parse("model one-sided\nagents a1\njobs b1\na1 : b9\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse("model one-sided\nagents a1 a1\njobs b1\na1 : b1\n"), ParseError);
    CHECK_THROWS_AS(parse("model one-sided\nagents a1\njobs b1\n"), ParseError);
    CHECK_THROWS_AS(parse("model one-sided\nagents a1\njobs b1 b2\na1 : [b1 b2]\n"),
                    ParseError);
    // a singleton bracket is still a strict rank
    CHECK(parse("model one-sided\nagents a1\njobs b1\na1 : [b1]\n").n_edges() == 1);
    CHECK_THROWS_AS(parse("model bogus\nagents a1\njobs b1\na1 : b1\n"), ParseError);
}

TEST_CASE("serialize round-trips fixture files") {
    const char* fixtures[] = {
        "model one-sided\nagents a1 a2\njobs b1 b2 b3\na1 : b1 > b2\na2 : b3\n",
        kOneTieFixture,
        "model two-sided-ties k=3\nagents a1 a2\njobs b1 b2\n"
        "a1 : [b1 b2]\na2 : b2\nb1 : a1\nb2 : [a1 a2]\n",
    };
    for (const char* f : fixtures) {
        auto inst = parse(f);
        auto text = serialize_instance(inst);
        auto reparsed = parse(text);
        CHECK(serialize_instance(reparsed) == text);
        CHECK(reparsed == inst);
    }
}

TEST_CASE("parse-serialize identity on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        ModelTag model = trial % 3 == 0   ? ModelTag{Model::OneSided, 1}
                         : trial % 3 == 1 ? ModelTag{Model::TwoSidedOneTie, 1}
                                          : ModelTag{Model::TwoSidedTies, 1 + trial % 4};
        auto inst = testutil::random_instance(rng, model, 1 + rng.below(6), 1 + rng.below(6));
        auto text = serialize_instance(inst);
        auto reparsed = parse(text);
        CHECK(reparsed == inst);
        CHECK(serialize_instance(reparsed) == text);
    }
}

TEST_CASE("matching parse and serialize") {
    auto inst = parse(kOneTieFixture);
    auto m = parse_matching(inst, "# comment\na1 b1\na2 b2\n");
    CHECK(m.size() == 2);
    CHECK(serialize_matching(inst, m) == "a1 b1\na2 b2\n");
    CHECK(parse_matching(inst, serialize_matching(inst, m)) == m);
    CHECK_THROWS_AS(parse_matching(inst, "a1 b1\na2 b1\n"), ParseError);  // job reused
    CHECK_THROWS_AS(parse_matching(inst, "a1 zz\n"), ParseError);
}

TEST_CASE("matching validation rejects non-edges and reuse") {
    auto inst = parse("model one-sided\nagents a1 a2\njobs b1 b2\na1 : b1\na2 : b1 > b2\n");
    CHECK_THROWS_AS(Matching::from_pairs(inst, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Matching::from_pairs(inst, {{0, 0}, {1, 0}}), std::invalid_argument);
    auto ok = Matching::from_pairs(inst, {{0, 0}, {1, 1}});
    CHECK(ok.valid_for(inst));
}

TEST_CASE("diff_instances: identity, single diff, structural mismatch") {
    auto base = testutil::one_sided({{0, 1, 2}, {0, 1}}, 3);
    CHECK(!diff_instances(base, base).has_value());

    PreferenceList reversed;
    reversed.groups = {{job_id(2)}, {job_id(1)}, {job_id(0)}};
    auto perturbed = base.with_agent_prefs(0, reversed);
    auto diff = diff_instances(base, perturbed);
    REQUIRE(diff.has_value());
    CHECK(diff->agent == agent_id(0));
    CHECK(diff->order_first == base.prefs(agent_id(0)));
    CHECK(diff->order_second == reversed);

    auto other_edges = testutil::one_sided({{0, 1}, {0, 1}}, 3);
    CHECK_THROWS_AS((void)diff_instances(base, other_edges), PerturbationError);

    PreferenceList swap;
    swap.groups = {{job_id(1)}, {job_id(0)}};
    auto both = perturbed.with_agent_prefs(1, swap);
    CHECK_THROWS_AS((void)diff_instances(base, both), PerturbationError);
}

TEST_CASE("perturbation must preserve the neighbour set") {
    auto base = testutil::one_sided({{0, 1}}, 3);
    PreferenceList bad;
    bad.groups = {{job_id(2)}, {job_id(0)}};
    CHECK_THROWS_AS((void)base.with_agent_prefs(0, bad), std::invalid_argument);
}
