#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "kvl/cli.hpp"
#include "kvl/io.hpp"

using namespace kvl;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) {
    return golden::data_dir() + "/" + name;
}

} // namespace

TEST_CASE("verify exit codes and witnesses") {
    CHECK(run({"verify", "--latin", golden_path("table3.kvlf")}).code == 0);
    CHECK(run({"verify", "--h", golden_path("table3.kvlf")}).code == 0);

    RunResult refuted = run({"verify", "--h", golden_path("table2.kvlf")});
    CHECK(refuted.code == 1);
    CHECK(refuted.out.find("refuted: axis=") != std::string::npos);
    CHECK(refuted.out.find("values=(0,2,0)") != std::string::npos);

    CHECK(run({"verify", "--hq", "3", golden_path("table3.kvlf")}).code == 0);
    CHECK(run({"verify", "--hq", "3", golden_path("table2.kvlf")}).code == 1);
    CHECK(run({"verify", "--hsq", "1,3;2=3,2", golden_path("table2.kvlf")}).code == 0);
    CHECK(run({"verify", "--hsq", "1,3;2=3,3", golden_path("table2.kvlf")}).code == 1);
}

TEST_CASE("verify usage errors exit 2") {
    CHECK(run({"verify", golden_path("table2.kvlf")}).code == 2);
    CHECK(run({"verify", "--latin", "--h", golden_path("table2.kvlf")}).code == 2);
    CHECK(run({"verify", "--latin", "/nonexistent.kvlf"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("spectrum") {
    RunResult r = run({"spectrum", "--vars", "2", golden_path("table2.kvlf")});
    CHECK(r.code == 0);
    CHECK(r.out == "{2}\n");
    RunResult r2 = run({"spectrum", "--vars", "1", golden_path("table2.kvlf")});
    CHECK(r2.out == "{2,3}\n");
}

TEST_CASE("range") {
    RunResult r = run({"range", golden_path("table1_f1.kvlf")});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("interp") {
    auto tmp = std::filesystem::temp_directory_path() / "kvl_interp_test.kvlf";
    save_file(TruthTable(3, 1, {1, 2, 0}), tmp.string());
    RunResult r = run({"interp", tmp.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + 1*x mod 3\n");

    save_file(TruthTable(4, 1, {0, 1, 2, 3}), tmp.string());
    CHECK(run({"interp", tmp.string()}).code == 2);
    std::filesystem::remove(tmp);
}

TEST_CASE("identify emits the reduced function") {
    // Build h from the worked example, then identify x_1 = x_3 = z.
    auto tmp = std::filesystem::temp_directory_path() / "kvl_identify_test.kvlf";
    std::vector<Value> hvals;
    TruthTable g1(3, 1, {0, 2, 1}), g2(3, 1, {0, 1, 2}), g3(3, 1, {1, 0, 2});
    for (Value a = 0; a < 3; ++a)
        for (Value b = 0; b < 3; ++b)
            for (Value c = 0; c < 3; ++c)
                hvals.push_back(static_cast<Value>((g1.at(a) + g2.at(b) + g3.at(c)) % 3));
    save_file(TruthTable(3, 3, hvals), tmp.string());

    RunResult r = run({"identify", "--vars", "1,3", tmp.string()});
    CHECK(r.code == 0);
    CHECK(parse(r.out) == golden::table3());
    std::filesystem::remove(tmp);
}

TEST_CASE("construct from files reproduces the worked example") {
    RunResult r = run({"construct", "--k", "3", "--blocks", "1,3;2", "--coeffs", "1,1",
                       "--files", golden_path("table1_f1.kvlf") + "," +
                                      golden_path("table1_f2.kvlf")});
    CHECK(r.code == 0);
    CHECK(parse(r.out) == golden::table2());
}

TEST_CASE("construct with sampled blocks is deterministic") {
    std::vector<std::string> argv{"construct", "--k", "4", "--blocks", "1,2;3",
                                  "--coeffs", "1,3", "--ranges", "3,2", "--seed", "5"};
    RunResult a = run(argv);
    RunResult b = run(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    TruthTable f = parse(a.out);
    CHECK(f.order() == 4);
    CHECK(f.arity() == 3);
    CHECK(run({"construct", "--k", "3", "--blocks", "1;2", "--coeffs", "1,1"}).code == 2);
}
