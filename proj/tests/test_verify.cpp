#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "freud/verify.hpp"

using namespace freud;

namespace {

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cmd = std::string(FREUD_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    *exit_code = WEXITSTATUS(status);
    return out;
}

}  // namespace

TEST_CASE("registry rejects unknown ids and honors empty subsets") {
    VerifyConfig cfg;
    cfg.t_values = {Scalar(0)};
    CHECK_THROWS_AS(run_suite(cfg, std::vector<std::string>{"no_such_check"}),
                    std::invalid_argument);
    VerificationReport empty = run_suite(cfg, std::vector<std::string>{});
    CHECK(empty.records.empty());
    CHECK(empty.all_pass);
}

TEST_CASE("hermite check is t-independent: one record per invocation") {
    VerifyConfig cfg;
    cfg.t_values = {Scalar(0), Scalar(2)};
    VerificationReport rep = run_suite(cfg, std::vector<std::string>{"hermite_exact"});
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].pass);
    CHECK(!rep.records[0].t.has_value());
}

TEST_CASE("a corrupted xi0 breaks skew orthogonality but not the lattice residual") {
    set_working_precision(256);
    VerifyContext ctx = build_context(Scalar(2), 8, 256, Scalar("1e-40"));
    VerifyConfig cfg;
    cfg.t_values = {Scalar(2)};

    CheckRecord good = check_skew_orthogonality(ctx, cfg);
    CHECK(good.pass);

    ctx.tables.xi[0] += Scalar("1e-6");
    ctx.Q = build_Q(ctx.tables, ctx.P, ctx.Q.size() - 1);
    CheckRecord broken = check_skew_orthogonality(ctx, cfg);
    CHECK(!broken.pass);
    CheckRecord lattice = check_dp1_residual(ctx, cfg);
    CHECK(lattice.pass);
}

TEST_CASE("figure series: shape, positivity, and the monotonicity contrast") {
    FigureSeries low = figure_data(Scalar("-2.5"), 20);
    FigureSeries high = figure_data(Scalar(11), 20);
    REQUIRE(low.beta.size() == 21);
    REQUIRE(low.psi.size() == 21);
    CHECK(low.beta[0] == 0);
    for (size_t n = 1; n < low.beta.size(); ++n) CHECK(low.beta[n] > 0);
    auto flips = [](const std::vector<Scalar>& b) {
        int count = 0;
        for (size_t n = 2; n + 1 < b.size(); ++n)
            if ((b[n + 1] - b[n]) * (b[n] - b[n - 1]) < 0) ++count;
        return count;
    };
    CHECK(flips(low.beta) == 0);   // near-monotone branch
    CHECK(flips(high.beta) > 5);   // two-branch staggering
}

TEST_CASE("cli: coeffs conventions and byte determinism") {
    int code = 0;
    std::string out = run_cli("coeffs --t 0 --nmax 5", &code);
    CHECK(code == 0);
    std::istringstream is(out);
    std::string header, row0;
    std::getline(is, header);
    std::getline(is, row0);
    CHECK(header == "n,beta,xi,psi,zeta,a_hat,b_hat,a_tilde,b_tilde,h,r");
    CHECK(row0.substr(0, 4) == "0,0,");  // beta_0 = 0

    std::string again = run_cli("coeffs --t 0 --nmax 5", &code);
    CHECK(out == again);

    std::string tiny = run_cli("coeffs --t 2 --nmax 0", &code);
    CHECK(code == 0);
    int lines = 0;
    for (char c : tiny) lines += c == '\n';
    CHECK(lines == 2);  // header + single row
}

TEST_CASE("cli: poly dumps") {
    int code = 0;
    std::string out = run_cli("poly --family O --n 3", &code);
    CHECK(code == 0);
    CHECK(out == "0\n-3/2\n0\n1\n");
    out = run_cli("poly --family P --n 0 --t 2", &code);
    CHECK(code == 0);
    CHECK(out == "1\n");
    out = run_cli("poly --family Q --n 2 --t 0 --format json", &code);
    CHECK(code == 0);
    CHECK(out.find("\"coefficients\"") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    int code = 0;
    run_cli("verify --t 2 --checks no_such_check", &code);
    CHECK(code == 2);
    run_cli("coeffs --t 1,2 --nmax 3", &code);
    CHECK(code == 2);  // multi-t has no column in the csv schema
    run_cli("coeffs --t bogus --nmax 3", &code);
    CHECK(code == 2);
    run_cli("coeffs --nmax 3", &code);
    CHECK(code == 2);  // missing t
    std::string out = run_cli("verify --t 0,2 --checks hermite_exact", &code);
    CHECK(code == 0);
    CHECK(out.find("\"all_pass\": true") != std::string::npos);
    // exactly one record for the t-independent check
    CHECK(out.find("\"check_id\": \"hermite_exact\"") ==
          out.rfind("\"check_id\": \"hermite_exact\""));
}

TEST_CASE("cli: figure emission contract") {
    int code = 0;
    std::string out = run_cli("figure --t 6.5 --nmax 12", &code);
    CHECK(code == 0);
    std::istringstream is(out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "n,beta,xi,zeta,psi");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 13);
    CHECK(out.find(',') != std::string::npos);
    CHECK(out.find(';') == std::string::npos);  // no locale separators
}
