#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "nek/fixtures.hpp"
#include "nek/io.hpp"
#include "nek/states.hpp"
#include "nek/structure.hpp"

using namespace nek;

namespace {

const std::string kFixtureDir = NEK_FIXTURE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

EventSet parse_gse_text(const std::string& text, bool autoclose = false) {
    std::istringstream in(text);
    return parse_gse(in, "inline", autoclose);
}

InvolutivePoset parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in, "inline");
}

}  // namespace

TEST_CASE("gse files round trip byte for byte") {
    for (const char* name : {"MO1.gse", "EVEN4.gse", "EVEN6.gse", "HEX.gse",
                             "single_state.gse", "cube1.gse", "cube2.gse", "cube3.gse"}) {
        const std::string path = kFixtureDir + "/" + name;
        EventSet g = parse_gse_file(path, false);
        CHECK_MESSAGE(write_gse(g) == slurp(path), name);
    }
    // The parsed sets are the fixture builders' sets, member for member.
    CHECK(parse_gse_file(kFixtureDir + "/EVEN4.gse", false) == fixtures::even4());
    CHECK(parse_gse_file(kFixtureDir + "/MO1.gse", false) == fixtures::mo1());
}

TEST_CASE("poset files round trip byte for byte") {
    for (const char* name : {"2chain.poset", "3chain.poset", "4chain.poset", "MO2.poset"}) {
        const std::string path = kFixtureDir + "/" + name;
        InvolutivePoset p = parse_poset_file(path);
        CHECK_MESSAGE(write_poset(p) == slurp(path), name);
    }
    CHECK(parse_poset_file(kFixtureDir + "/4chain.poset") == fixtures::chain4());
    CHECK(parse_poset_file(kFixtureDir + "/MO2.poset") == fixtures::mo_poset(2));
}

TEST_CASE("gse parser accepts comments and reports precise errors") {
    EventSet g = parse_gse_text("# heading\ngse\nstates s1 s2  # two states\n"
                                "event p = 1/3 2/3\n\nevent q = 2/3 1/3\n");
    CHECK(g.size() == 4);

    auto fails_with = [](const std::string& text, const std::string& what,
                         bool autoclose = false) {
        try {
            parse_gse_text(text, autoclose);
            FAIL_CHECK("no error for: ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()) == what);
        }
    };

    fails_with("poset\n", "inline:1: expected a lone 'gse' header");
    fails_with("gse\nevent p = 1\n", "inline:2: 'event' before 'states'");
    fails_with("gse\nstates\n", "inline:2: 'states' needs at least one name");
    fails_with("gse\nstates s1\nevent p 1/2\n", "inline:3: expected 'event <label> = <values>'");
    fails_with("gse\nstates s1\nevent p = 1/2 1/2\n",
               "inline:3: event 'p' has 2 values for 1 states");
    fails_with("gse\nstates s1\nevent p = 5/4\n",
               "inline:3: value '5/4' outside [0, 1]");
    fails_with("gse\nstates s1\nevent p = one\n", "inline:3: malformed value 'one'");
    fails_with("gse\nstates s1\nevent p = 1/0\n", "inline:3: malformed value '1/0'");
    // Errors raised while assembling the set keep the file context.
    fails_with("gse\nstates s1\nevent p = 1/3\n",
               "inline: complement of 'p' is missing (not closed; consider autoclose)");
}

TEST_CASE("poset parser reports precise errors") {
    auto fails_with = [](const std::string& text, const std::string& what) {
        try {
            parse_poset_text(text);
            FAIL_CHECK("no error for: ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()) == what);
        }
    };

    fails_with("gse\n", "inline:1: expected a lone 'poset' header");
    fails_with("poset\nleq a b\n", "inline:2: 'leq' before 'elements'");
    fails_with("poset\nelements 0 a 1\nleq 0 b\n", "inline:3: unknown element 'b'");
    fails_with("poset\nelements 0 a 1\nprime a\n",
               "inline:3: expected 'prime <a> <b>'");
    fails_with("poset\nelements a b\nleq a b\nprime a b\n",
               "inline: elements must include '0' and '1'");
    fails_with("poset\nelements 0 1\nelements 0 1\n",
               "inline:3: second 'elements' line");
    // "0" and "1" must actually be the bounds, not merely present.
    fails_with("poset\nelements z 0 1\nleq z 0\nleq 0 1\nprime z 1\nprime 0 0\n",
               "inline: '0' must name the minimum element");
}

TEST_CASE("kind sniffing reads the first significant line") {
    CHECK(sniff_kind(kFixtureDir + "/MO1.gse") == FileKind::Gse);
    CHECK(sniff_kind(kFixtureDir + "/MO2.poset") == FileKind::Poset);
    CHECK_THROWS_AS(sniff_kind(kFixtureDir + "/does-not-exist"), ParseError);
}

TEST_CASE("machine classification report is stable and sorted") {
    EventSet g = fixtures::mo1();
    const std::string report = render_classification(classify(g), g, ReportFormat::Machine);
    CHECK(report ==
          "algebra=true\n"
          "all_proper=true\n"
          "boolean=true\n"
          "complemented=true\n"
          "concrete_representable=true\n"
          "concrete_valued=false\n"
          "consistency.algebra_iff_atom_sums=ok\n"
          "consistency.complemented_iff_all_proper=ok\n"
          "consistency.concrete_pair_sum_algebra=n/a\n"
          "consistency.diff_closed_iff_pair_sum=ok\n"
          "consistency.lattice_iff_unique_extension=ok\n"
          "consistency.orth_sum_is_join=ok\n"
          "consistency.ortholattice_diff_meet=ok\n"
          "consistency.pair_sum_implies_splitting=ok\n"
          "consistency.partial_sums_are_joins=ok\n"
          "consistency.properties_force_boolean=ok\n"
          "consistency.stepwise_join_decides_algebra=ok\n"
          "consistency.stepwise_readings_agree=ok\n"
          "consistency.triple_sum_implies_pair_sum=ok\n"
          "consistency.unique_atom_decomposition=ok\n"
          "consistency=ok\n"
          "diff_is_meet=true\n"
          "gfe=true\n"
          "lattice=true\n"
          "members=4\n"
          "ngfe=true\n"
          "orth_atom_sums=true\n"
          "ortholattice=true\n"
          "orthomodular=true\n"
          "prop_P=true\n"
          "prop_SJ=true\n"
          "prop_T=true\n"
          "prop_U=true\n"
          "sj_atoms_some=true\n"
          "sj_elements_all=true\n"
          "sj_elements_some=true\n"
          "states=2\n"
          "witness.concrete_valued=p\n");
    // Identical on a second run, including map iteration details.
    CHECK(render_classification(classify(g), g, ReportFormat::Machine) == report);
}

TEST_CASE("synthesis and state-set reports") {
    InvolutivePoset c3 = fixtures::chain3();
    CHECK(render_synthesis(synthesize_full_proper(c3), c3, ReportFormat::Machine) ==
          "outcome=no-proper-set\n"
          "properness.c=1/2,1/2\n"
          "separation.1.0=1\n"
          "separation.1.c=1/2\n"
          "separation.c.0=1/2\n"
          "witness=c\n");

    const std::string human =
        render_synthesis(synthesize_full_proper(c3), c3, ReportFormat::Human);
    CHECK(human.substr(0, human.find('\n')) == "impossible no-proper-set c");

    EventSet mo1 = fixtures::mo1();
    CHECK(render_state_set(states_of_gse(mo1), mo1.induced(), ReportFormat::Machine) ==
          "full=true\n"
          "proper=true\n"
          "state.1=0,1,1/3,2/3\n"
          "state.2=0,1,2/3,1/3\n");
}

TEST_CASE("rational formatting") {
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(Rat(2, 4)) == "1/2");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(parse_rational("7/9") == Rat(7, 9));
    CHECK(parse_rational("1") == Rat(1));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("x").has_value());
    CHECK_FALSE(parse_rational("1/2/3").has_value());
}
