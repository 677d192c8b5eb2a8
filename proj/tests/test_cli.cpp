#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using novikov::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "novikov");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "cli_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("documented examples") {
    const Result dim = call({"dim", "--family", "P", "--alpha", "1", "--beta", "1", "--arity", "5"});
    CHECK(dim.code == 0);
    CHECK(dim.out == "5\n");
    const Result sign = call({"series", "sign-test", "--dims", "1,2,5", "--order", "6"});
    CHECK(sign.code == 1);
    CHECK(sign.out == "fail at n=5: -17/12\n");
    const Result bad = call({"dim", "--family", "P", "--alpha", "0", "--beta", "0", "--arity", "5"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("Usage") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"dim", "--arity", "3", "--no-such-flag"}).code == 2);
    CHECK(call({"dim", "--family", "P", "--arity", "3"}).code == 2);                       // missing point
    CHECK(call({"dim", "--family", "P", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "0", "--arity", "3"}).code == 2);
    CHECK(call({"dim", "--arity", "12"}).code == 2);
    CHECK(call({"series", "invert", "--dims", "1,x"}).code == 2);
    CHECK(call({"dim", "--arity", "3", "--format", "yaml"}).code == 2);
    const Result help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify-all") != std::string::npos);
}

TEST_CASE("formats") {
    const std::vector<std::string> args = {"dim", "--family", "Q", "--gamma", "1", "--delta", "0", "--from", "3", "--arity", "5"};
    auto with = [&](const std::string& f) {
        auto a = args;
        a.insert(a.end(), {"--format", f});
        return call(a).out;
    };
    CHECK(with("text") == "3 4\n4 5\n5 6\n");
    CHECK(with("tsv") == "arity\tdim\n3\t4\n4\t5\n5\t6\n");
    CHECK(with("json").find("\"5\": 6") != std::string::npos);
    ::setenv("NOVIKOV_FORMAT", "tsv", 1);
    CHECK(call(args).out == with("tsv"));
    ::unsetenv("NOVIKOV_FORMAT");
    CHECK(with("json") == with("json"));
}

TEST_CASE("quotient commands") {
    CHECK(call({"decompose", "--family", "P", "--alpha", "1", "--beta", "1", "--arity", "5"}).out == "V_{2,2,1}\n");
    const Result dist = call({"distributive", "--family", "P", "--alpha", "2", "--beta", "1", "--max-arity", "4"});
    CHECK(dist.code == 1);
    CHECK(dist.out == "not distributive: V_{2,1} repeats in arity 3\n");
    CHECK(call({"distributive", "--family", "O", "--alpha", "1", "--beta", "-1", "--gamma", "1", "--delta", "0"}).code == 0);
    CHECK(call({"implies", "--identity", "ab - ba", "--candidate", "(ab)c - a(bc)"}).code == 0);
    CHECK(call({"implies", "--identity", "(ab)c - a(bc)", "--candidate", "ab - ba"}).code == 1);
    CHECK(call({"implies", "--family", "P", "--alpha", "2", "--beta", "1", "--candidate-differential", "a'''bcd"}).code == 0);
}

TEST_CASE("JSON outputs are accepted as inputs") {
    const Result inv = call({"series", "invert", "--series", "t + t^2 + 1/3 t^3", "--order", "8", "--format", "json"});
    REQUIRE(inv.code == 0);
    const std::string path = temp_file("series.json", inv.out);
    CHECK(call({"series", "invert", "--series-file", path, "--order", "8"}).out == "t + t^2 + 1/3 t^3\n");
    std::remove(path.c_str());

    const Result gb = call({"gb", "complete", "--family", "T", "--alpha", "1", "--beta", "2", "--format", "json"});
    REQUIRE(gb.code == 0);
    const std::string pres = temp_file("presentation.json", gb.out);
    const Result check = call({"gb", "check", "--presentation", pres, "--count-to", "5", "--format", "tsv"});
    CHECK(check.code == 0);
    CHECK(check.out == "arity\tnormal\n3\t1\n4\t0\n5\t0\n");
    std::remove(pres.c_str());

    const Result ver = call({"verify-all", "--group", "free", "--no-timings", "--quiet", "--format", "json"});
    CHECK(ver.code == 0);
    const std::string rep = temp_file("report.json", ver.out);
    CHECK(call({"verify-all", "--report", rep, "--format", "json"}).out == ver.out);
    std::remove(rep.c_str());

    const Result elem = call({"verify-all", "--report", "cli_test_missing.json"});
    CHECK(elem.code == 2);
}

TEST_CASE("series subcommands") {
    const Result dual = call({"series", "dual-check", "--series", "t + t^2 + 1/3 t^3", "--order", "12"});
    CHECK(dual.code == 0);
    CHECK(call({"series", "dual-check", "--series", "t + t^2", "--dual-series", "t + t^2", "--order", "4"}).code == 1);
    CHECK(call({"series", "weighted", "--series", "t + u t^2", "--n", "5", "--k", "4"}).out == "14\n");
}

TEST_CASE("Gröbner, dual, algebra and lattice commands") {
    CHECK(call({"gb", "check", "--system", "Q(0:1)"}).code == 0);
    CHECK(call({"gb", "check", "--system", "Q(1:0)", "--as-printed"}).code == 1);
    CHECK(call({"gb", "count-normal", "--system", "Q(1:-1)", "--arity", "6"}).out == "7\n");
    CHECK(call({"gb", "check", "--system", "Q(2:1)"}).code == 2);
    CHECK(call({"dual", "--symmetry", "antisym", "--relation", "[[a,b],c] + [[b,c],a] + [[c,a],b]"}).code == 0);
    CHECK(call({"dual", "--catalog"}).code == 0);
    CHECK(call({"dual", "--family", "O", "--alpha", "0", "--beta", "1", "--gamma", "0", "--delta", "1", "--mirror"})
              .out.find("(no relations)") == std::string::npos);
    CHECK(call({"algebra", "check", "--algebra", "B", "--novikov"}).code == 0);
    CHECK(call({"algebra", "check", "--algebra", "A", "--family", "P", "--alpha", "1", "--beta", "0"}).code == 1);
    CHECK(call({"algebra", "check", "--algebra", "C", "--novikov"}).code == 2);
    const Result lat = call({"lattice", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "2", "--max-arity", "3"});
    CHECK(lat.code == 0);
    CHECK(lat.out.find("V_{1,1} -> V_{3}") != std::string::npos);
}
