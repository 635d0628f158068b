#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "harmsub/figures.hpp"
#include "harmsub/series_io.hpp"

using namespace harmsub;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string tmp_path(const std::string& stem) {
    return std::string("/tmp/harmsub_cli_") + stem;
}

RunResult run_cli(const std::string& args) {
    const std::string out_file = tmp_path("stdout.txt");
    const std::string cmd =
        std::string(HARMSUB_CLI_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string write_series(const std::string& stem, const HarmonicSeries& s) {
    const std::string path = tmp_path(stem + ".json");
    std::ofstream out(path);
    out << serialize(s);
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

const HarmonicSeries kQ({Complex(1.0), Complex(0.8)}, {Complex(0.0), Complex(0.4)});

} // namespace

TEST_CASE("ops applies the operator and matches the library") {
    const std::string in = write_series("q", kQ);
    const std::string out = tmp_path("dq.json");
    const RunResult r =
        run_cli("ops --in " + in + " --operator D --order 1 -o " + out);
    CHECK(r.exit_code == 0);
    const HarmonicSeries dq = deserialize(slurp(out));
    CHECK(dq == apply_D(kQ));
    CHECK(dq.a(1) == Complex(0.8));
    CHECK(dq.b(1) == Complex(-0.4));
}

TEST_CASE("ops rejects order zero and bad documents") {
    const std::string in = write_series("q2", kQ);
    CHECK(run_cli("ops --in " + in + " --order 0").exit_code == 2);
    const std::string bad = tmp_path("bad.json");
    std::ofstream(bad) << "{not json";
    CHECK(run_cli("ops --in " + bad).exit_code == 2);
    CHECK(run_cli("ops --in /nonexistent.json").exit_code == 2);
}

TEST_CASE("ops: both operators coincide on analytic input") {
    const HarmonicSeries h = HarmonicSeries::analytic(
        {Complex(0.3), Complex(1.0), Complex(-0.2)});
    const std::string in = write_series("h", h);
    const std::string out_d = tmp_path("hd.json");
    const std::string out_f = tmp_path("hf.json");
    CHECK(run_cli("ops --in " + in + " --operator D -o " + out_d).exit_code == 0);
    CHECK(run_cli("ops --in " + in + " --operator Dfrak -o " + out_f).exit_code == 0);
    CHECK(slurp(out_d) == slurp(out_f));
}

TEST_CASE("map emits boundary rows and honors small resolutions") {
    const std::string out = tmp_path("map8.csv");
    const RunResult r =
        run_cli("map --series ellipse:0.8,0.4 --n-boundary 8 -o " + out);
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(count_lines(csv) == 9); // header + 8 samples
    CHECK(csv.rfind("theta,re,im\n", 0) == 0);
}

TEST_CASE("map matches the library emitter byte for byte") {
    const std::string out = tmp_path("map512.csv");
    CHECK(run_cli("map --series ellipse:0.8,0.4 --n-boundary 512 -o " + out)
              .exit_code == 0);
    const BoundaryMapQ bq = builtin_map("ellipse:0.8,0.4");
    std::ostringstream expect;
    write_map_csv(expect, bq.image_of_disk(512, {}, 0));
    CHECK(slurp(out) == expect.str());
}

TEST_CASE("map rejects unknown builtins") {
    CHECK(run_cli("map --series pear:1,2").exit_code == 2);
    CHECK(run_cli("map --series ellipse:0.8,0.4 --format yaml").exit_code == 2);
}

TEST_CASE("map accepts series files and the json format") {
    const std::string in = write_series("mapq", kQ);
    const std::string out = tmp_path("mapq.csv");
    CHECK(run_cli("map --series " + in + " --n-boundary 32 -o " + out)
              .exit_code == 0);
    CHECK(count_lines(slurp(out)) == 33);

    const std::string jout = tmp_path("mapq.json");
    CHECK(run_cli("--no-timestamp map --series " + in +
                  " --n-boundary 16 --format json -o " + jout)
              .exit_code == 0);
    CHECK(slurp(jout).find("\"kind\": \"disk_image\"") != std::string::npos);
}

TEST_CASE("check-sub exit codes and thin-wrapper parity") {
    const std::string f_in = write_series("fsub", radial_scale(kQ, 0.5));
    const RunResult strong =
        run_cli("check-sub --f " + f_in + " --F ellipse:0.8,0.4");
    CHECK(strong.exit_code == 0);
    CHECK(strong.out.find("\"relation\": \"strong\"") != std::string::npos);

    const std::string wide = write_series(
        "wide", HarmonicSeries::analytic({Complex(1.0), Complex(2.4)}));
    const RunResult none =
        run_cli("check-sub --f " + wide + " --F ellipse:0.8,0.4");
    CHECK(none.exit_code == 1);
    CHECK(none.out.find("\"relation\": \"none\"") != std::string::npos);
}

TEST_CASE("check-sub honors an explicit domain flag") {
    const std::string f_in = write_series("fdom", radial_scale(kQ, 0.5));
    const RunResult r = run_cli("check-sub --f " + f_in +
                                " --F ellipse:0.8,0.4 --domain disk:1,0,0.7");
    CHECK(r.exit_code == 0);
    const RunResult tight = run_cli("check-sub --f " + f_in +
                                    " --F ellipse:0.8,0.4 --domain disk:1,0,0.3");
    CHECK(tight.exit_code == 1);
}

TEST_CASE("map drives the half-plane interior figure end to end") {
    const std::string out = tmp_path("fig2.csv");
    const RunResult r = run_cli(
        "map --series halfplane --n-boundary 64 --n-interior 128 "
        "--interior-radii 0.99 -o " + out);
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line); // header
    double min_re = 1e9;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        min_re = std::min(min_re, std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
        ++rows;
    }
    CHECK(rows == 63 + 128); // clipped boundary + one interior circle
    CHECK(std::abs(min_re - (-0.5)) < 0.05);
}

TEST_CASE("check-admissible verdicts and variant flag") {
    const RunResult clear = run_cli(
        "check-admissible --psi r+s --q ellipse:0.8,0.4 "
        "--omega ellipse:1,0,1.2,0.4 --resolution 128 --n-m 16");
    CHECK(clear.exit_code == 0);
    CHECK(clear.out.find("NO_VIOLATION_FOUND") != std::string::npos);

    const RunResult hit = run_cli(
        "check-admissible --psi affine:0,0,0,0,0,0,1,0 --q ellipse:0.8,0.4 "
        "--omega ellipse:1,0,1.2,0.4 --resolution 64 --n-m 8");
    CHECK(hit.exit_code == 1);
    CHECK(hit.out.find("VIOLATION") != std::string::npos);

    const RunResult dv = run_cli(
        "check-admissible --psi r+s+t --q ellipse:0.8,0.4 "
        "--omega disk:1,0,0.05 --resolution 64 --n-m 8 --variant definition");
    CHECK(dv.exit_code == 0);
    CHECK(dv.out.find("\"variant\": \"definition\"") != std::string::npos);

    CHECK(run_cli("check-admissible --psi r+s --q ellipse:0.8,0.4 "
                  "--omega blob:1")
              .exit_code == 2);
}

TEST_CASE("jack-probe reports the witness and the no-witness case") {
    const std::string p = write_series(
        "jack_p", HarmonicSeries::analytic({Complex(1.0), Complex(1.6)}));
    const RunResult hit = run_cli("jack-probe --p " + p + " --q ellipse:0.8,0.4");
    CHECK(hit.exit_code == 1);
    CHECK(hit.out.find("\"m\": 0.333") != std::string::npos);

    const std::string inside = write_series("jack_in", radial_scale(kQ, 0.5));
    const RunResult none =
        run_cli("jack-probe --p " + inside + " --q ellipse:0.8,0.4");
    CHECK(none.exit_code == 0);
    CHECK(none.out.find("no_witness") != std::string::npos);
}

TEST_CASE("verify-example exit codes") {
    CHECK(run_cli("verify-example 1 --M1 0.8 --M2 0.4 --resolution 128 "
                  "--m-count 16")
              .exit_code == 0);
    CHECK(run_cli("verify-example 3 --M1 1.0 --M2 0.5 --resolution 64 "
                  "--m-count 8")
              .exit_code == 1);
    CHECK(run_cli("verify-example 9").exit_code == 2);
}

TEST_CASE("reports are byte-identical with --no-timestamp") {
    const std::string a = tmp_path("rep_a.json");
    const std::string b = tmp_path("rep_b.json");
    const std::string cmd =
        "--no-timestamp check-admissible --psi r+s --q ellipse:0.8,0.4 "
        "--omega ellipse:1,0,1.2,0.4 --resolution 64 --n-m 8 -o ";
    CHECK(run_cli(cmd + a).exit_code == 0);
    CHECK(run_cli(cmd + b).exit_code == 0);
    const std::string ta = slurp(a), tb = slurp(b);
    CHECK(!ta.empty());
    CHECK(ta == tb);
}
