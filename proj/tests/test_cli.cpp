#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string & args)
{
    std::string command = std::string(PACKLAB_CLI) + " " + args + " 2>/dev/null";
    Run result{-1, {}};
    FILE * pipe = popen(command.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buffer{};
    while (auto got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Runs the CLI with `input` on stdin.
Run run_with(const std::string & args, const std::string & input)
{
    char path[] = "/tmp/packlab_cli_XXXXXX";
    int fd = mkstemp(path);
    REQUIRE(fd >= 0);
    close(fd);
    std::ofstream(path) << input;
    auto result = run(args + " < " + path);
    std::remove(path);
    return result;
}

} // namespace

TEST_CASE("threshold command")
{
    auto f = run("threshold f --n 12 --r 3 --D 4");
    CHECK(f.code == 0);
    CHECK(f.out.find("value 10\n") != std::string::npos);
    CHECK(f.out.find("branch first\n") != std::string::npos);

    auto g = run("threshold g --n 24 --r 3 --D 2 --format json");
    CHECK(g.code == 0);
    CHECK(g.out.find("\"value\": 254") != std::string::npos);
    CHECK(g.out.find("\"branch\": \"second\"") != std::string::npos);

    CHECK(run("threshold f --n 12 --r 3 --D 10").code == 2);
    CHECK(run("threshold f2 --n 6 --d 1").code == 0);
    CHECK(run("threshold appendix --n 24 --r 4").code == 0);
    CHECK(run("threshold bogus --n 6").code == 2);
    CHECK(run("--no-such-flag").code == 2);
}

TEST_CASE("construct command")
{
    auto g1 = run("construct G1 --n 6 --r 3");
    CHECK(g1.code == 0);
    CHECK(g1.out == "Ew??\n");
    CHECK(run("construct H --n 6 --d 2 --audit").code == 0);
    CHECK(run("construct square_cx --n 69 --C 1 --K 5 --audit").code == 0);
    CHECK(run("construct square_cx --n 24 --C 1 --K 4").code == 2);
    CHECK(run("construct extremal1 --n 9 --r 3 --k 2 --audit").code == 0);
    CHECK(run("construct G2 --n 12 --r 3 --D 5").code == 2);
    CHECK(run("construct t_star --n 6 --r 3 --format edges").out.rfind("n=6\n", 0) == 0);
}

TEST_CASE("solve command")
{
    std::string cli = PACKLAB_CLI;
    auto pipe = [&](const std::string & family, const std::string & solve) {
        return run("construct " + family + " | " + cli + " solve " + solve);
    };
    CHECK(pipe("t_star --n 6 --r 3", "pack --r 3").code == 1);
    CHECK(pipe("G1 --n 6 --r 3", "colour --k 2").code == 1);
    CHECK(pipe("AF_exception_i --n 6 --r 3", "pack --r 3").code == 1);
    CHECK(pipe("H --n 6 --d 2", "matching").code == 1);
    CHECK(pipe("t_star --n 6 --r 3", "krfree --r 3").code == 2);
    CHECK(pipe("square_cx --n 69 --C 1 --K 5", "square-check").code == 1);

    auto k6 = run_with("solve pack --r 3", "E~~w\n");
    CHECK(k6.code == 0);
    CHECK(k6.out.find("block") != std::string::npos);

    // T(6,3) as an edge list
    auto tp = run_with("solve turan-partition --r 3",
        "n=6\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n");
    CHECK(tp.code == 0);
    CHECK(tp.out == "yes\nclass 4 5\nclass 2 3\nclass 0 1\n");

    CHECK(run_with("solve matching", "garbage\n").code == 2);
    CHECK(run_with("solve pack --r 3 --node-cap 1", "K~~~~~~~~~~~\n").code == 3);
}

TEST_CASE("verify command exit codes and determinism")
{
    auto a = run("verify t1 --n 6 --r 3 --workers 2");
    CHECK(a.code == 0);
    CHECK(a.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(run("verify t1 --n 6 --r 3 --workers 2").out == a.out);
    CHECK(run("verify matching --n 8").code == 3);
    CHECK(run("verify conj1 --n 12 --r 3 --mode sampled --samples 100").code == 2);
    CHECK(run("verify conj1 --n 6 --r 3 --node-cap 1").code == 3);
}
