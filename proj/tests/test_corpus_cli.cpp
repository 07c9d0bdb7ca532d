#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "oracles.hpp"

using namespace sigma;
using oracle::shared_group;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SIGMA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<nlohmann::json> parse_ndjson(const std::string& text) {
    std::vector<nlohmann::json> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
        pos = nl + 1;
    }
    return out;
}

} // namespace

TEST_CASE("corpus entries build deterministically") {
    auto manifest = corpus_manifest();
    CHECK(manifest.size() > 40);
    bool has_ex = false;
    for (const CorpusEntry& e : manifest) {
        if (e.name == "ex1.2i") {
            has_ex = true;
            CHECK(e.sigma_specs == std::vector<std::string>{"{7}|rest"});
        }
        if (e.name == "s3")
            CHECK(e.sigma_specs.size() == 4); // finest, coarsest, {2}, {3}
    }
    CHECK(has_ex);

    // build determinism: same name -> identical table bytes
    BuiltEntry a = build_entry("s4", "sym(4)");
    BuiltEntry b = build_entry("s4", "sym(4)");
    CHECK(a.table->mul_table == b.table->mul_table);
    BuiltEntry e1 = build_entry("ex1.2i", "direct(frobenius(7,3,2),alt(5))");
    BuiltEntry e2 = build_entry("ex1.2i", "direct(frobenius(7,3,2),alt(5))");
    CHECK(e1.table->mul_table == e2.table->mul_table);
    CHECK(e1.named.at("H").members == e2.named.at("H").members);

    CHECK_THROWS_AS(build_entry("nope", "arithmetic:nope"), unknown_entry);
}

TEST_CASE("worked-example labels have the advertised orders") {
    BuiltEntry e = build_entry("ex1.2i", "direct(frobenius(7,3,2),alt(5))");
    CHECK(e.table->n == 1260);
    CHECK(e.named.at("C7C3").order == 21);
    CHECK(e.named.at("A5").order == 60);
    CHECK(e.named.at("A").order == 4);
    CHECK(e.named.at("C3").order == 3);
    CHECK(e.named.at("H").order == 84);
    CHECK(e.named.at("C3A").order == 12);
    CHECK(e.named.at("C3A5").order == 180);
    CHECK(e.named.at("B12").order == 12);
}

TEST_CASE("arithmetic witness checks") {
    CHECK(arithmetic_witness_checks("ex1.2ii").empty());
    CHECK(arithmetic_witness_checks("ex1.2iii").empty());
    CHECK(!arithmetic_witness_checks("bogus").empty());
}

TEST_CASE("manifest expectations reproduce") {
    BuildConfig cfg;
    for (const CorpusEntry& e : corpus_manifest(cfg)) {
        if (e.expected.empty()) continue;
        std::optional<BuiltEntry> built;
        if (!e.arithmetic_only) built = build_entry(e.name, e.spec, cfg);
        for (const Expectation& x : e.expected) {
            nlohmann::json v =
                evaluate_expectation(e, built ? &*built : nullptr, x);
            if (!v.is_null()) MESSAGE(v.dump());
            CHECK(v.is_null());
        }
    }
}

TEST_CASE("manifest JSON round-trip") {
    auto manifest = corpus_manifest();
    nlohmann::json j = manifest_to_json(manifest);
    auto back = manifest_from_json(j);
    REQUIRE(back.size() == manifest.size());
    for (size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].name == manifest[i].name);
        CHECK(back[i].spec == manifest[i].spec);
        CHECK(back[i].sigma_specs == manifest[i].sigma_specs);
        CHECK(back[i].expected.size() == manifest[i].expected.size());
        CHECK(back[i].arithmetic_only == manifest[i].arithmetic_only);
    }
}

TEST_CASE("cli analyze exit codes and report shape") {
    RunResult ok =
        run_cli("analyze --group \"sym(3)\" --sigma finest --check thm13");
    CHECK(ok.exit_code == 0);
    auto lines = parse_ndjson(ok.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["theorem"] == "1.3");
    CHECK(lines[0]["equivalent"] == true);
    REQUIRE(lines[0]["conditions"].size() == 3);
    for (const auto& c : lines[0]["conditions"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("holds"));
        CHECK(c.contains("elapsed_ms"));
        CHECK(c["holds"] == true);
    }

    RunResult not_full = run_cli(
        "analyze --group \"alt(5)\" --sigma \"{2,5}|rest\" --check thm19");
    CHECK(not_full.exit_code == 1);

    RunResult bad = run_cli("analyze --group \"nonsense(2)\" --sigma finest");
    CHECK(bad.exit_code == 1);

    RunResult lemmas = run_cli(
        "analyze --group \"direct(frobenius(7,3,2),alt(5))\" "
        "--sigma \"{7}|rest\" --check lemmas");
    CHECK(lemmas.exit_code == 0);
}

TEST_CASE("cli describe") {
    RunResult r = run_cli("describe --group \"sym(4)\" --sigma finest");
    REQUIRE(r.exit_code == 0);
    auto lines = parse_ndjson(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["order"] == 24);
    CHECK(lines[0]["subgroup_count"] == 30);
    CHECK(lines[0]["residual_sigma_order"] == 12);

    RunResult c30 = run_cli("describe --group \"cyclic(30)\" --sigma coarsest");
    auto j30 = parse_ndjson(c30.out);
    REQUIRE(j30.size() == 1);
    CHECK(j30[0]["sigma_primary"] == true);
    CHECK(j30[0]["residual_sigma_order"] == 1);

    RunResult q8 = run_cli("describe --group \"quaternion(8)\" --sigma finest");
    auto jq8 = parse_ndjson(q8.out);
    REQUIRE(jq8.size() == 1);
    CHECK(jq8[0]["dedekind"] == true);
}

TEST_CASE("cli sweep: empty manifest, fault fixture, determinism") {
    {
        std::ofstream f("/tmp/sigma_empty_manifest.json");
        f << "[]";
    }
    RunResult empty = run_cli("sweep --manifest /tmp/sigma_empty_manifest.json");
    CHECK(empty.exit_code == 0);
    CHECK(parse_ndjson(empty.out).empty());

    { // manifest with a deliberately wrong expectation
        nlohmann::json j = nlohmann::json::array();
        j.push_back(nlohmann::json{
            {"name", "s3"},
            {"spec", "sym(3)"},
            {"sigma", nlohmann::json::array({"finest"})},
            {"expected",
             nlohmann::json::array({{{"op", "subgroup_count"},
                                     {"args", nlohmann::json::object()},
                                     {"result", 7},
                                     {"provenance", "classical"}}})}});
        std::ofstream f("/tmp/sigma_fault_manifest.json");
        f << j;
    }
    RunResult fault = run_cli("sweep --manifest /tmp/sigma_fault_manifest.json");
    CHECK(fault.exit_code == 2);
    auto lines = parse_ndjson(fault.out);
    bool named = false;
    for (const auto& l : lines)
        if (l.contains("violations"))
            for (const auto& v : l["violations"])
                if (v["entry"] == "s3") named = true;
    CHECK(named);

    { // small manifest swept serially and in parallel: identical reports
      // (up to the elapsed-ms diagnostics)
        nlohmann::json j = nlohmann::json::array();
        for (const char* name : {"s3", "s4", "a4", "q8"}) {
            nlohmann::json e;
            e["name"] = name;
            e["spec"] = std::string(name) == "s3"   ? "sym(3)"
                        : std::string(name) == "s4" ? "sym(4)"
                        : std::string(name) == "a4" ? "alt(4)"
                                                    : "quaternion(8)";
            e["sigma"] = nlohmann::json::array({"finest", "{2}|rest"});
            j.push_back(e);
        }
        std::ofstream f("/tmp/sigma_mini_manifest.json");
        f << j;
    }
    auto strip = [](const std::string& text) {
        auto lines = parse_ndjson(text);
        std::string out;
        for (auto& l : lines) {
            if (l.contains("conditions"))
                for (auto& c : l["conditions"]) c.erase("elapsed_ms");
            out += l.dump() + "\n";
        }
        return out;
    };
    RunResult serial =
        run_cli("sweep --manifest /tmp/sigma_mini_manifest.json --jobs 1");
    RunResult parallel =
        run_cli("sweep --manifest /tmp/sigma_mini_manifest.json --jobs 8");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(strip(serial.out) == strip(parallel.out));
    CHECK(!parse_ndjson(serial.out).empty());
}

TEST_CASE("cli sweep reports build failures without aborting") {
    nlohmann::json j = nlohmann::json::array();
    j.push_back(nlohmann::json{{"name", "broken"},
                               {"spec", "nonsense(3)"},
                               {"sigma", nlohmann::json::array({"finest"})}});
    j.push_back(nlohmann::json{{"name", "s3"},
                               {"spec", "sym(3)"},
                               {"sigma", nlohmann::json::array({"finest"})}});
    {
        std::ofstream f("/tmp/sigma_broken_manifest.json");
        f << j;
    }
    RunResult r = run_cli("sweep --manifest /tmp/sigma_broken_manifest.json");
    CHECK(r.exit_code == 1); // build error, but the sweep completed
    auto lines = parse_ndjson(r.out);
    bool has_error = false, has_s3 = false;
    for (const auto& l : lines) {
        if (l.contains("error") && l["entry"] == "broken") has_error = true;
        if (l.contains("group") && l["group"] == "sym(3)") has_s3 = true;
    }
    CHECK(has_error);
    CHECK(has_s3);
}

TEST_CASE("cli json output file matches stdout") {
    std::string path = "/tmp/sigma_json_out.ndjson";
    RunResult r = run_cli("analyze --group \"sym(3)\" --sigma finest "
                          "--check thm13,thm17 --json " +
                          path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    std::string file_content((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    CHECK(file_content == r.out);
    CHECK(parse_ndjson(file_content).size() == 2);
}

TEST_CASE("SIGMA_LATTICE_BOUND environment override") {
    std::string cmd = std::string("SIGMA_LATTICE_BOUND=10 ") + SIGMA_CLI_PATH +
                      " describe --group \"sym(4)\" --sigma finest 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    pclose(pipe);
    nlohmann::json j = nlohmann::json::parse(out);
    CHECK(!j.contains("subgroup_count")); // order 24 exceeds the bound 10
    CHECK(j["order"] == 24);
}
