#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

const std::string kData = QTPM_DATA_DIR;

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::vector<const char*> argv{"qtpm"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = qtpm::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> with_spec(std::vector<std::string> args) {
    args.insert(args.begin() + 1, {"--spec", kData + "/overshoot.tsa"});
    return args;
}

std::size_t lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("tracevalue on the worked examples") {
    auto r = run(with_spec({"tracevalue", "--signal", kData + "/three_step.sig"}));
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    r = run(with_spec({"tracevalue", "--semiring", "tropical", "--cost", "t", "--signal", kData + "/three_step.sig"}));
    CHECK(r.out == "-10\n");
    r = run(with_spec({"tracevalue", "--semiring", "boolean", "--cost", "b", "--signal", "-"}), "x\n3.5 7\n3.5 12\n");
    CHECK(r.out == "true\n");
}

TEST_CASE("exit codes") {
    CHECK(run(with_spec({"tracevalue", "--semiring", "boolean", "--cost", "r", "--signal", "-"}), "x\n1 1\n").code == 64);
    auto r = run(with_spec({"tracevalue", "--signal", "-"}), "");
    CHECK(r.code == 2);
    CHECK(r.err.find("empty signal") != std::string::npos);
    CHECK(run(with_spec({"tracevalue", "--signal", "-"}), "x\n1 oops\n").code == 1);
    CHECK(run(with_spec({"tracevalue", "--signal", "-"}), "y\n1 1\n").code == 1);
    CHECK(run({"tracevalue", "--spec", "/nonexistent.tsa", "--signal", "-"}, "x\n1 1\n").code == 1);
    CHECK(run({"bogus"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"--help"}).code == 0);
    CHECK(run(with_spec({"query", "--query", "15", "3", "--signal", kData + "/long_run.sig"})).code == 64);
    CHECK(run(with_spec({"query", "--query", "3", "3", "--signal", kData + "/long_run.sig"})).code == 64);
    CHECK(run(with_spec({"grid", "--grid", "0", "--signal", kData + "/long_run.sig"})).code == 64);
}

TEST_CASE("query reads the match function") {
    auto q = [](const char* t, const char* tp) {
        return run(with_spec({"query", "--query", t, tp, "--signal", kData + "/long_run.sig"})).out;
    };
    CHECK(q("3", "15") == "5\n");
    CHECK(q("10", "15") == "-25\n");
    CHECK(q("0", "25") == "-inf\n");
}

TEST_CASE("grid rows cover every ordered pair") {
    auto r = run(with_spec({"grid", "--grid", "0.5", "--signal", kData + "/long_run.sig"}));
    CHECK(r.code == 0);
    // 62 grid points 0, 0.5, ..., 30.5, one row per pair with t < t'
    CHECK(lines(r.out) == 1 + 62 * 61 / 2);
}

TEST_CASE("monitor streams pieces segment by segment") {
    const std::string first = "x\n7.5 10\n";
    auto r = run(with_spec({"monitor", "--signal", "-"}), first);
    CHECK(r.code == 0);
    CHECK(lines(r.out) > 0);
    auto whole = run(with_spec({"monitor", "--signal", kData + "/long_run.sig"}));
    CHECK(whole.out.rfind(r.out, 0) == 0);  // the first segment's pieces come first, unchanged

    // a malformed third line: pieces for the first two segments, then exit 1
    auto two = run(with_spec({"monitor", "--signal", "-"}), "x\n7.5 10\n10 40\n");
    auto bad = run(with_spec({"monitor", "--signal", "-"}), "x\n7.5 10\n10 40\n13\n");
    CHECK(bad.code == 1);
    CHECK(bad.out == two.out);
    CHECK(bad.err.find("line 4") != std::string::npos);
}

TEST_CASE("columns are matched by name") {
    auto a = run(with_spec({"tracevalue", "--signal", "-"}), "y x\n2.5 0 10\n1 0 40\n3 0 60\n");
    CHECK(a.out == "5\n");
}
