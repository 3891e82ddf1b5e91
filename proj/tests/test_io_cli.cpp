/*
   Copyright 2026 The cyclobmw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "support.hpp"

#include <cyclobmw/cli.hpp>

#include <fstream>
#include <sstream>

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "cyclobmw");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::dispatch(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(CYCLOBMW_EXAMPLES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("environment files round-trip byte for byte") {
    auto env = sample_rational_env(3, -1);
    const std::string once = env_to_json(env).dump();
    auto back = std::get<RationalEnv>(env_from_json(Json::parse(once)));
    CHECK(env_to_json(back).dump() == once);
    CHECK(is_admissible(back).verdict);
    auto rc = std::get<OmegaEnv>(env_from_json(Json::parse(R"({"k":2,"ring":"rc","sign":"minus"})")));
    CHECK(rc.tag() == RingTag::Rc);
    CHECK(rc.sign() == -1);
    CHECK_THROWS_AS(env_from_json(Json::parse(R"({"k":2,"ring":"rational","q":"2"})")), Error);
    CHECK_THROWS_AS(env_from_json(Json::parse(R"({"k":1,"ring":"rational","q":"2","lambda":"x","q_i":["1"],"A_i":["1"]})")),
                    Error);
}

TEST_CASE("diagrams round-trip") {
    for (const auto& d : enumerate_diagrams(2, 2)) CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"n":1,"k":1,"strands":[{"from":"1","to":"3'","label":0}]})")),
                    Error);
}

TEST_CASE("elements round-trip") {
    BmwEngine<mpq_class> q(sample_rational_env(2));
    BmwEngine<LaurentPoly> rc(make_Rc_env(2, 1));
    auto x = q.evaluate({{Gen::Y, 0}, {Gen::E, 1}, {Gen::X, 1}, {Gen::Y, 0}}, 2);
    int n = 0;
    auto back = element_from_json(Json::parse(element_to_json(x, 2, 2).dump()), q.env(), n);
    CHECK(n == 2);
    CHECK(equal(back, x));
    auto y = rc.evaluate({{Gen::Yinv, 0}, {Gen::E, 1}, {Gen::Y, 0}}, 2);
    CHECK(equal(element_from_json(element_to_json(y, 2, 2), rc.env(), n), y));
}

TEST_CASE("command line examples") {
    auto r = run({"brauer", "count", "--n", "2", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":12}\n");
    r = run({"bmw", "count", "--n", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":3}\n");
    r = run({"adm", "report", "--k", "1", "--rc", "plus"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("verdict") == true);
    r = run({"adm", "identity", "--k", "5"});
    CHECK(r.code == 0);
    r = run({"repv", "obstruction", "--k", "3"});
    CHECK(Json::parse(r.out).at("matches") == true);
    r = run({"repv", "verify", "--k", "4", "--rc", "minus"});
    CHECK(r.code == 0);
}

TEST_CASE("command line works on files") {
    auto r = run({"adm", "report", "--env", example("env_k3_rational.json")});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("verdict") == true);
    r = run({"bmw", "verify", "--n", "2", "--env", example("env_k3_rational.json")});
    CHECK(r.code == 0);
    r = run({"repv", "verify", "--env", example("env_k2_perturbed.json")});
    CHECK(r.code == 1);
    r = run({"bmw", "reduce", "--rc", "plus", "--k", "2"}, slurp(example("element_e1.json")));
    CHECK(r.code == 0);
    auto red = Json::parse(r.out);
    REQUIRE(red.at("terms").size() == 1);
    CHECK(red.at("terms")[0].at("word").at("f") == 1);
    r = run({"brauer", "mul", "--k", "2"}, slurp(example("diagram_product.json")));
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("coef").at("terms")[0].at("exps").at("A_0") == 1);
}

TEST_CASE("output is deterministic") {
    const std::string input = slurp(example("element_mul.json"));
    auto a = run({"bmw", "mul", "--rc", "minus", "--k", "2"}, input);
    auto b = run({"bmw", "mul", "--rc", "minus", "--k", "2"}, input);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto s = run({"bmw", "star", "--rc", "minus", "--k", "2"}, slurp(example("element_e1.json")));
    CHECK(s.code == 0);
}

TEST_CASE("usage and computation errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bmw", "count", "--n", "two", "--k", "1"}).code == 2);
    CHECK(run({"bmw", "count", "--k", "1"}).code == 2);
    CHECK(run({"bmw", "reduce", "--k", "2"}, "not json").code == 2);
    CHECK(run({"adm", "report", "--env", "/nonexistent.json"}).code == 2);
    CHECK(run({"bmw", "count", "--n", "6", "--k", "3"}).code == 1);
    CHECK(run({"--max-basis", "10", "brauer", "count", "--n", "2", "--k", "2"}).code == 1);
    CHECK(run({"bmw", "trace", "--env", example("env_k3_rational.json")}, R"({"n":1,"k":3,"terms":[]})").code == 1);
}
