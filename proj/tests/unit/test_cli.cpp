#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PTSPECTRA_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(field);
            field.clear();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            row.push_back(field);
            field.clear();
            rows.push_back(row);
            row.clear();
            ++i;
        } else {
            field += c;
        }
    }
    return rows;
}

} // namespace

TEST_CASE("spectrum json and csv carry identical numbers") {
    const Run j = run("spectrum --preset pt-inverted --levels 2 --json");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    for (const char* key : {"preset", "m", "g", "a", "delta", "contour", "levels", "partial", "e_lo", "e_hi"})
        CHECK(doc.contains(key));
    REQUIRE(doc["levels"].size() == 2);
    CHECK(doc["levels"][0]["energy"].get<double>() == doctest::Approx(1.4771497536).epsilon(1e-9));

    const Run c = run("spectrum --preset pt-inverted --levels 2 --format csv");
    REQUIRE(c.code == 0);
    const auto rows = parse_csv(c.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == "n");
    CHECK(rows[0][1] == "energy");
    for (int i = 0; i < 2; ++i)
        CHECK(std::stod(rows[i + 1][1]) == doc["levels"][i]["energy"].get<double>());
}

TEST_CASE("oracle column on a Hermitian preset") {
    const Run r = run("spectrum --preset massless-quartic --levels 2 --oracle --json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["oracle_converged"].get<bool>());
    for (const auto& lv : doc["levels"])
        CHECK(std::abs(lv["energy"].get<double>() - lv["oracle"].get<double>()) < 1e-8);
    CHECK(run("spectrum --preset pt-inverted --oracle").code == 2);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run("spectrum --preset v9").code == 2);
    CHECK(run("partition --case Z9").code == 2);
    CHECK(run("partition --case Z1").code == 2);
    CHECK(run("reproduce --table 9").code == 2);
    CHECK(run("spectrum --g -1").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("partition: closed form and quadrature") {
    const Run c = run("partition --case Z4 --g 1 --json");
    REQUIRE(c.code == 0);
    const json a = json::parse(c.out);
    const Run q = run("partition --case Z4 --g 1 --quadrature --method gauss --json");
    REQUIRE(q.code == 0);
    const json b = json::parse(q.out);
    CHECK(a["method"] == "closed-form");
    CHECK(a["value_re"].get<double>() == doctest::Approx(b["value_re"].get<double>()).epsilon(1e-9));
    CHECK(std::abs(b["value_im"].get<double>()) < 1e-9);
    CHECK(run("partition --case Z1 --quadrature").code == 0);
}

TEST_CASE("mk, contour and reproduce") {
    const Run mk = run("mk --k 0 --m 1.4142135623730951 --g 4 --json");
    REQUIRE(mk.code == 0);
    CHECK(json::parse(mk.out)["energy_real"].get<double>() == doctest::Approx(-3.875).epsilon(1e-12));

    const Run ct = run("contour --preset pt-inverted --samples 3 --json");
    REQUIRE(ct.code == 0);
    const json c = json::parse(ct.out);
    CHECK(c["left"].size() == 3);
    CHECK(c["theta_r"].get<double>() == doctest::Approx(-M_PI / 6.0));

    const Run rp = run("reproduce --table 1 --csv");
    CHECK(rp.code == 0);
    const auto rows = parse_csv(rp.out);
    CHECK(rows.size() == 1 + 4 * 5);
}

TEST_CASE("conjecture suite output is one row per case") {
    const Run r = run("conjecture --suite multicomponent --csv");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0][0] == "quantity");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == rows[0].size());
    const Run j = run("conjecture --suite d0-all --json");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 18);
    CHECK(doc[0]["case_label"] == "Z4/Z3 g=0.5");
    CHECK(doc[0]["lhs"].contains("re"));
    CHECK(doc[0]["verdict"] == "holds");
}
