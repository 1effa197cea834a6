#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cherrylab/colouring.hpp"
#include "cherrylab/extremal.hpp"
#include "cherrylab/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cherrylab;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string temp_path(const std::string& name) {
    return "/tmp/cherrylab_cli_" + name;
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string in_file = temp_path("stdin.txt");
    {
        std::ofstream f(in_file);
        f << stdin_data;
    }
    std::string cmd = std::string(CHERRYLAB_BIN) + " " + args + " < " + in_file + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = temp_path(name);
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("f-table emits the expected TSV row for n=7") {
    auto r = run_cli("f-table --max-n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# cherrylab") == 0);
    CHECK(r.out.find("7\t20\t5\t0.571429\n") != std::string::npos);
    CHECK(r.out.find("4\t3\t3\t0.750000\n") != std::string::npos);
}

TEST_CASE("detect-odd reports the C5 witness as json") {
    auto path = write_file("c5.h3", serialize(tight_cycle(5)));
    auto r = run_cli("detect-odd --in " + path + " --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "odd_pseudocycle");
    CHECK(j["value"] == 5);
    CHECK(j["witness"].size() == 5);
    CHECK(j["n"] == 5);
}

TEST_CASE("good-colour pipes into verify-colouring") {
    auto path = write_file("edge.h3", "h3 3 1\n0 1 2\n");
    auto g = run_cli("good-colour --in " + path);
    CHECK(g.exit_code == 0);
    auto v = run_cli("verify-colouring --in " + path, g.out);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("ok\n") != std::string::npos);
    // an all-blue colouring is rejected with exit 1
    auto blue = serialize(ColouredGraph::all_blue(3));
    auto bad = run_cli("verify-colouring --in " + path, blue);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("not-good\n") != std::string::npos);
}

TEST_CASE("construct matches the library output") {
    auto r = run_cli("construct --parts 3,1");
    CHECK(r.exit_code == 0);
    auto body = r.out.substr(r.out.find('\n') + 1);  // drop header line
    CHECK(body == serialize(construct_iterated(make_profile({3, 1}))));
}

TEST_CASE("cherries agrees with the library on the extremal colouring") {
    auto path = write_file("ext5.cg", serialize(extremal_colouring(5)));
    auto r = run_cli("cherries --in " + path);
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    std::int64_t c;
    is >> c;
    CHECK(c == cherry_count(extremal_colouring(5)));
    CHECK(c == 6);
}

TEST_CASE("full-symmetrise then reorient pipeline") {
    auto path = write_file("rand.cg", serialize(extremal_colouring(6)));
    auto r = run_cli("full-symmetrise --in " + path);
    CHECK(r.exit_code == 0);
    auto re = run_cli("reorient", r.out);
    CHECK(re.exit_code == 0);
    CHECK(re.out.find("# cherries 12\n") != std::string::npos);
}

TEST_CASE("diameter and trim subcommands") {
    auto path = write_file("edge2.h3", "h3 3 1\n0 1 2\n");
    auto d = run_cli("diameter --in " + path);
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("\n4\n") != std::string::npos);
    auto t = run_cli("trim --threshold 2 --in " + path);
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("h3 3 0\n") != std::string::npos);
}

TEST_CASE("extend-cycle") {
    auto path = write_file("c5b.h3", serialize(tight_cycle(5)));
    auto r = run_cli("extend-cycle --m 11 --cycle 0,1,2,3,4 --in " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 1 2 0 1 2 0 1 2 3 4\n") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
    auto r = run_cli("oracle max-edges --n 4 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == 3);
    CHECK(j["optima_count"] == 4);

    auto mc = run_cli("oracle max-cherries --n 4 --format json");
    auto jc = nlohmann::json::parse(mc.out);
    CHECK(jc["value"] == 3);

    auto path = write_file("c5c.h3", serialize(tight_cycle(5)));
    auto so = run_cli("oracle shortest-odd --lmax 15 --in " + path);
    CHECK(so.exit_code == 0);
    CHECK(so.out.find("\n5\n") != std::string::npos);
}

TEST_CASE("symmetrise writes a JSONL trace with non-decreasing counts") {
    // a colouring that actually needs recolouring steps: blue K5 plus pendant arcs
    auto g = ColouredGraph::all_blue(6);
    g.set_red(5, 0);
    g.set_red(1, 5);
    auto path = write_file("trace_in.cg", serialize(g));
    std::string trace = temp_path("trace.jsonl");
    auto r = run_cli("symmetrise --in " + path + " --x 0 --trace " + trace);
    CHECK(r.exit_code == 0);
    std::ifstream tf(trace);
    REQUIRE(tf.good());
    std::string line;
    std::int64_t prev = -1;
    int steps = 0;
    while (std::getline(tf, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["k"] == steps + 1);
        std::int64_t after = j["cherries_after"];
        if (prev >= 0) CHECK(after >= prev);
        prev = after;
        ++steps;
    }
    CHECK(steps >= 1);
}

TEST_CASE("seeded runs are byte-identical") {
    auto path = write_file("seeded.cg", serialize(extremal_colouring(8)));
    auto a = run_cli("symmetrise --in " + path + " --x 2 --selector random --seed 99");
    auto b = run_cli("symmetrise --in " + path + " --x 2 --selector random --seed 99");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes: usage 2, domain 1") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("f-table").exit_code == 2);  // missing required option
    auto bad = write_file("bad.h3", "h3 3 1\n0 1 7\n");
    CHECK(run_cli("detect-odd --in " + bad).exit_code == 1);
    CHECK(run_cli("blowup --t 0 --in " + write_file("e.h3", "h3 3 1\n0 1 2\n")).exit_code == 1);
}
