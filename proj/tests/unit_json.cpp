#include <doctest.h>

#include "pcx/errors.hpp"
#include "pcx/json_io.hpp"
#include "support/gen.hpp"

using namespace pcx;

namespace {

Bundle sample_bundle(std::uint64_t seed, const RingPtr& ring)
{
    testgen::Gen gen(ring, seed);
    Bundle b;
    b.ring = ring;
    Complex P = gen.complex(-1, 2, 3).complex;
    Complex Q = gen.complex(0, 2, 3).complex;
    b.complexes.emplace("P", P);
    b.complexes.emplace("Q", Q);
    b.maps.emplace("f", NamedMap{"P", "Q", gen.chain_map(P, Q)});
    b.maps.emplace("h", NamedMap{"P", "P", gen.graded_map(P, P, -1)});
    return b;
}

} // namespace

TEST_CASE("ring JSON round trip")
{
    std::vector<RingPtr> rings{
        Ring::rationals(),
        Ring::prime_field(13),
        Ring::polynomial(Ring::rationals(), {"t1", "t2"}),
        Ring::rational_functions(Ring::prime_field(5), {"u"}),
        Ring::dual_numbers(Ring::rationals()),
        Ring::polynomial(Ring::rational_functions(Ring::rationals(), {"u"}), {"t"}),
    };
    for (const auto& r : rings) {
        Json j = ring_to_json(r);
        CHECK(same_ring(ring_from_json(j, ""), r));
    }
}

TEST_CASE("bundle round trip: parse(render(x)) == x")
{
    std::vector<RingPtr> rings{Ring::rationals(), Ring::prime_field(7),
                               Ring::dual_numbers(Ring::prime_field(3))};
    std::uint64_t seed = 199;
    for (const auto& ring : rings) {
        Bundle b = sample_bundle(seed++, ring);
        std::string text = render_bundle(b);
        Bundle back = parse_bundle(text);
        CHECK(same_ring(back.ring, b.ring));
        REQUIRE(back.complexes.size() == b.complexes.size());
        for (const auto& [name, c] : b.complexes)
            CHECK(back.complexes.at(name) == c);
        for (const auto& [name, m] : b.maps) {
            CHECK(back.maps.at(name).source == m.source);
            CHECK(back.maps.at(name).target == m.target);
            CHECK(back.maps.at(name).map == m.map);
        }
        // rendering is stable
        CHECK(render_bundle(back) == text);
    }
}

TEST_CASE("strict schema: unknown fields are rejected with a path")
{
    Bundle b = sample_bundle(211, Ring::rationals());
    Json j = bundle_to_json(b);
    j["extra"] = 1;
    try {
        parse_bundle(j.dump());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::validation_error);
        CHECK(std::string(e.what()).find("/extra") != std::string::npos);
    }

    Json j2 = bundle_to_json(b);
    j2["complexes"]["P"]["color"] = "blue";
    try {
        parse_bundle(j2.dump());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::validation_error);
        CHECK(std::string(e.what()).find("/complexes/P") != std::string::npos);
    }
}

TEST_CASE("invalid complexes are rejected at their JSON path")
{
    const char* text = R"({
      "ring": {"kind": "rationals"},
      "complexes": {
        "C": {"lo": 0, "hi": 2,
               "ranks": {"0": 1, "1": 1, "2": 1},
               "diffs": {"0": [["1"]], "1": [["1"]]}}
      }
    })";
    try {
        parse_bundle(text);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::validation_error);
        CHECK(std::string(e.what()).find("/complexes/C/diffs") != std::string::npos);
    }
}

TEST_CASE("assert_chain_map flag is honored")
{
    const char* text = R"({
      "ring": {"kind": "rationals"},
      "complexes": {
        "C": {"lo": 0, "hi": 1, "ranks": {"0": 1, "1": 1}, "diffs": {"0": [["1"]]}},
        "D": {"lo": 0, "hi": 1, "ranks": {"0": 1, "1": 1}, "diffs": {}}
      },
      "maps": {
        "f": {"source": "C", "target": "D", "degree": 0,
               "components": {"1": [["1"]]}, "assert_chain_map": true}
      }
    })";
    try {
        parse_bundle(text);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::validation_error);
        CHECK(std::string(e.what()).find("/maps/f") != std::string::npos);
    }
}

TEST_CASE("malformed JSON is a parse error")
{
    for (const char* bad : {"", "{", "[1,2", "{\"ring\": }", "null", "42"}) {
        try {
            parse_bundle(bad);
            CHECK(false);
        } catch (const Error& e) {
            CHECK((e.code() == errc::parse_error || e.code() == errc::validation_error));
        }
    }
}

TEST_CASE("fuzzing mutated bundles never crashes and always raises pcx errors")
{
    Bundle b = sample_bundle(223, Ring::rationals());
    std::string text = render_bundle(b);
    SeedStream rng(1234567);
    int parsed_ok = 0, rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        std::string mutated = text;
        int edits = 1 + static_cast<int>(rng.next_below(4));
        for (int e = 0; e < edits; ++e) {
            std::size_t pos = rng.next_below(mutated.size());
            switch (rng.next_below(3)) {
                case 0: mutated[pos] = static_cast<char>(32 + rng.next_below(95)); break;
                case 1: mutated.erase(pos, 1 + rng.next_below(3)); break;
                default:
                    mutated.insert(pos, std::string(1, static_cast<char>(32 + rng.next_below(95))));
                    break;
            }
            if (mutated.empty())
                mutated = "x";
        }
        try {
            parse_bundle(mutated);
            ++parsed_ok; // a mutation can keep the bundle valid
        } catch (const Error& err) {
            CHECK((err.code() == errc::parse_error || err.code() == errc::validation_error ||
                   err.code() == errc::invalid_ring));
            ++rejected;
        } catch (...) {
            CHECK_MESSAGE(false, "non-pcx exception escaped the parser");
        }
    }
    CHECK(parsed_ok + rejected == 1000);
    CHECK(rejected > 800); // nearly every mutation is malformed
}

TEST_CASE("scalars serialize as canonical strings, degrees as string keys")
{
    auto D = Ring::dual_numbers(Ring::rationals());
    Bundle b;
    b.ring = D;
    std::map<int, std::size_t> ranks{{-1, 1}, {0, 1}};
    std::map<int, Matrix> diffs;
    Matrix d(D, 1, 1);
    d.set(0, 0, Scalar::parse(D, "1/2 + 3*eps"));
    diffs[-1] = d;
    b.complexes.emplace("E", Complex(D, -1, 0, ranks, diffs));
    Json j = bundle_to_json(b);
    CHECK(j["complexes"]["E"]["diffs"]["-1"][0][0] == "1/2 + 3*eps");
    CHECK(j["complexes"]["E"]["ranks"].contains("-1"));
    Bundle back = parse_bundle(j.dump());
    CHECK(back.complexes.at("E") == b.complexes.at("E"));
}
