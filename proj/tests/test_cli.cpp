#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

#ifndef ENGELKIT_BIN
#error "ENGELKIT_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ENGELKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// Validates against the subset of JSON Schema used by report.schema.json:
// type, required, properties, additionalProperties, items, enum.
bool validate(const json& value, const json& schema, std::string& why) {
  if (schema.contains("type")) {
    const std::string& t = schema["type"].get_ref<const std::string&>();
    bool ok = (t == "object" && value.is_object()) ||
              (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) ||
              (t == "number" && value.is_number()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "boolean" && value.is_boolean());
    if (!ok) {
      why = "expected type " + t;
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == value;
    if (!found) {
      why = "value not in enum";
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) {
        why = "missing required key " + key.get<std::string>();
        return false;
      }
  if (value.is_object()) {
    const json props = schema.value("properties", json::object());
    bool extra_ok = schema.value("additionalProperties", true);
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        if (!validate(sub, props[key], why)) {
          why = key + ": " + why;
          return false;
        }
      } else if (!extra_ok) {
        why = "unexpected key " + key;
        return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& item : value)
      if (!validate(item, schema["items"], why)) return false;
  return true;
}

json report_schema() {
  std::ifstream in("report.schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

void check_valid_report(const std::string& args) {
  CAPTURE(args);
  RunResult r = run("--json " + args);
  json rep = json::parse(r.out);
  std::string why;
  bool ok = validate(rep, report_schema(), why);
  CAPTURE(why);
  CHECK(ok);
}

json stripped_report(const std::string& args) {
  json rep = json::parse(run("--json " + args).out);
  rep.erase("timing_ms");
  return rep;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("check --builtin example1 --identity \"x*y*z = y*x*z\" --mode mult").code == 0);
  CHECK(run("check --builtin example1 --identity \"x*y = y*x\" --mode mult").code == 1);
  CHECK(run("check --builtin example1 --identity \"x*)\" --mode mult").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("check --builtin example1").code == 2);
  auto budget = run("check --builtin paison2 --identity \"x*y = y*x\"");
  CHECK(budget.code == 1);
}

TEST_CASE("budget override") {
  std::string cmd = std::string("ENGELKIT_BUDGET=10 ") + ENGELKIT_BIN +
                    " check --builtin paison2 --identity \"x*y = y*x\" 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("reports validate against the shipped schema") {
  check_valid_report("gen engel 3");
  check_valid_report("gen morse 3");
  check_valid_report("transform reduce2var --identity \"x*z*x = y*z*y\"");
  check_valid_report("transform linearize --identity \"x*y = y*x\"");
  check_valid_report("transform lemma1 --identity \"x*y - y*x = 0\" --side reduced");
  check_valid_report("check --builtin example1 --identity \"x*y = y*x\" --mode mult");
  check_valid_report("check --builtin paison2 --engel-upto 3");
  check_valid_report("analyze --builtin paison2");
  check_valid_report("kernel --n 3 --field 2");
}

TEST_CASE("identical inputs give identical reports modulo timing") {
  std::vector<std::string> cases = {
      "gen malcev 3",
      "check --builtin paison2 --identity \"x^6*y = y*x^6\" --mode circle",
      "check --builtin strict_upper:3:2 --engel-upto 5 --jobs 4",
      "transform reduce2var --identity \"x*z*x = y*z*y\"",
      "analyze --builtin example1",
      "kernel --n 4 --field Q",
  };
  for (const auto& c : cases) {
    CAPTURE(c);
    CHECK(stripped_report(c) == stripped_report(c));
  }
}

TEST_CASE("witness content") {
  json rep = json::parse(
      run("--json check --builtin example1 --identity \"x*y = y*x\" --mode mult").out);
  CHECK(rep["result"]["holds"] == false);
  CHECK(rep["result"]["witness"]["x"] == "e12");
  CHECK(rep["result"]["witness"]["y"] == "e11");
}

TEST_CASE("algebra files load") {
  auto r = run("check --algebra data/algebras/paison2.json --identity \"x^6*y = y*x^6\" --mode mult");
  CHECK(r.code == 0);
  auto a = run("analyze --algebra data/algebras/strict_upper3_gf2.json --gamma");
  CHECK(a.code == 0);
  CHECK(a.out.find("index 3") != std::string::npos);
}

TEST_CASE("generated identities parse back through the cli") {
  auto morse = run("gen morse 4");
  REQUIRE(morse.code == 0);
  std::string id = morse.out.substr(0, morse.out.find('\n'));
  auto chk = run("check --builtin strict_upper:2:3 --identity \"" + id + "\" --mode mult");
  CHECK(chk.code == 0);
}
