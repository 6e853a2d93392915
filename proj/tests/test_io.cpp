#include <doctest.h>

#include <random>

#include "golden.hpp"
#include "kvl/io.hpp"

using namespace kvl;

TEST_CASE("serialize canonical form") {
    CHECK(serialize(golden::table1_f2()) == "KVLF 1\n3 1\n1 0 1\n");
    CHECK(serialize(TruthTable::constant(2, 1, 0)) == "KVLF 1\n2 1\n0 0\n");
    CHECK(serialize(golden::table2()) ==
          "KVLF 1\n3 3\n0 0 1 2 2 0 0 0 1 2 2 2 1 1 1 2 2 2 1 0 2 0 2 1 1 0 2\n");
}

TEST_CASE("parse inverts serialize") {
    CHECK(parse(serialize(golden::table2())) == golden::table2());
    CHECK(parse(serialize(golden::table3())) == golden::table3());
}

TEST_CASE("parse tolerates whitespace, nothing else") {
    CHECK(parse("KVLF 1\n3 1\n  1\t0\n\n1   \n") == golden::table1_f2());
    CHECK_THROWS_AS(parse("KVLX 1\n3 1\n1 0 1\n"), FormatError);
    CHECK_THROWS_AS(parse("KVLF 2\n3 1\n1 0 1\n"), FormatError);
    CHECK_THROWS_AS(parse("KVLF 1\n3 1\n1 0 x\n"), FormatError);
    CHECK_THROWS_AS(parse(""), FormatError);
}

TEST_CASE("parse reports bad values with a byte offset") {
    try {
        parse("KVLF 1\n3 1\n1 0 3\n");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("byte 15") != std::string::npos);
    }
}

TEST_CASE("parse rejects wrong counts") {
    CHECK_THROWS_AS(parse("KVLF 1\n3 2\n1 0 1\n"), LengthError);
    CHECK_THROWS_AS(parse("KVLF 1\n3 1\n1 0 1 2\n"), LengthError);
}

TEST_CASE("round trip over a random corpus") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + trial % 5;
        int n = 1 + trial % 4;
        std::vector<Value> vals(num_cells(k, n));
        for (Value& v : vals)
            v = static_cast<Value>(rng() % static_cast<std::uint64_t>(k));
        TruthTable f(k, n, vals);
        CHECK(parse(serialize(f)) == f);
    }
}

TEST_CASE("golden files match the in-memory fixtures") {
    CHECK(load_file(golden::data_dir() + "/table1_f1.kvlf") == golden::table1_f1());
    CHECK(load_file(golden::data_dir() + "/table1_f2.kvlf") == golden::table1_f2());
    CHECK(load_file(golden::data_dir() + "/table2.kvlf") == golden::table2());
    CHECK(load_file(golden::data_dir() + "/table3.kvlf") == golden::table3());
}
