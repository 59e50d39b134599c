#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hoinfo/batch.hpp"
#include "hoinfo/io.hpp"
#include "hoinfo/report.hpp"
#include "suite.hpp"

using namespace hoinfo;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hoinfo::Error");
  return ErrorCode::ParseError;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "hoinfo_test_io";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("distribution JSON") {
  const auto d = parse_distribution_json(
      R"({"cardinalities": [2, 2], "entries": [{"state": [0, 0], "p": 0.5}, {"state": [1, 1], "p": 0.5}]})");
  CHECK(d == giant_bit(2, 2));

  for (const auto& r : suite::random_distributions(20, 0x10)) {
    CHECK(distribution_from_json(nlohmann::json::parse(distribution_to_json(r).dump())) == r);
  }

  CHECK(code_of([] { parse_distribution_json(R"({"cardinalities": [2], "entries": [{"state": [0], "p": 0.9}]})"); }) ==
        ErrorCode::NotNormalized);
  CHECK(code_of([] { parse_distribution_json(R"({"entries": []})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_distribution_json("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_distribution_json(R"({"cardinalities": [2], "entries": [{"state": [-1], "p": 1}]})"); }) ==
        ErrorCode::StateOutOfRange);

  const auto renorm = parse_distribution_json(R"({"cardinalities": [2], "entries": [{"state": [0], "p": 0.9}]})", {},
                                              {.renormalize = true});
  CHECK(renorm.mass(State{0}) == 1.0);
}

TEST_CASE("format detection") {
  CHECK(detect_format("a.json", "x,y") == InputFormat::dist_json);
  CHECK(detect_format("a.csv", "{") == InputFormat::samples_csv);
  CHECK(detect_format("-", "  \n{\"cardinalities\": []}") == InputFormat::dist_json);
  CHECK(detect_format("data.txt", "a,b\n0,1\n") == InputFormat::samples_csv);
  CHECK(parse_input_format("dist-json") == InputFormat::dist_json);
  CHECK(code_of([] { parse_input_format("xml"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sample CSV input carries its alphabet into the report") {
  const auto loaded = load_input_text("x,y\na,0\nb,1\na,0\nb,1\n", InputFormat::automatic, "pairs.csv");
  CHECK(loaded.variable_names == std::vector<std::string>{"x", "y"});
  const auto report = make_report(loaded, {});
  REQUIRE(report.alphabet);
  CHECK(report.alphabet->symbols[0] == std::vector<std::string>{"a", "b"});
  CHECK(report.measures.total_correlation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report serialization round-trips") {
  RunOptions opts;
  opts.with_spectrum = true;
  for (const auto& c : suite::random_cases(30, 0x4E9)) {
    const auto report = run_source(GeneratorSpec{.kind = GeneratorKind::random,
                                                 .alphabet = static_cast<int>(c.cardinalities[0]),
                                                 .n_vars = static_cast<int>(c.cardinalities.size()),
                                                 .seed = c.seed,
                                                 .concentration = c.concentration},
                                   opts);
    const auto text = report_to_json(report).dump();
    CHECK(report_from_json(nlohmann::json::parse(text)) == report);
  }
  // Undefined orders survive as null.
  const auto ind = make_report({suite::uniform(3), "independent", {}, {}}, opts);
  CHECK_FALSE(ind.spectrum->synergy_order);
  CHECK(report_from_json(report_to_json(ind)) == ind);

  auto with_alphabet = make_report(load_input_text("a,b\n0,x\n1,y\n", InputFormat::samples_csv, "s.csv"), opts);
  CHECK(report_from_json(nlohmann::json::parse(report_to_json(with_alphabet).dump())) == with_alphabet);

  CHECK(code_of([] { report_from_json(nlohmann::json::object()); }) == ErrorCode::ParseError);
}

TEST_CASE("CSV report") {
  RunOptions opts;
  opts.with_spectrum = true;
  const auto csv = report_to_csv(run_source(GeneratorSpec{.kind = GeneratorKind::parity, .order = 3}, opts));
  CHECK(csv.find("field,value\n") == 0);
  CHECK(csv.find("input,\"gen:parity(order=3,alphabet=2)\"\n") != std::string::npos);
  CHECK(csv.find("o_information,-1\n") != std::string::npos);
  CHECK(csv.find("delta_3,") != std::string::npos);
  CHECK(csv.find("synergy_order,3\n") != std::string::npos);
}

TEST_CASE("generator spec JSON") {
  const auto spec = generator_spec_from_json(nlohmann::json::parse(
      R"({"kind": "product", "parts": [{"kind": "parity", "order": 3}, {"gen": "giant-bit", "order": 2, "alphabet": 3}]})"));
  REQUIRE(spec.parts.size() == 2);
  CHECK(spec.parts[1].alphabet == 3);
  CHECK(generator_spec_from_json(generator_spec_to_json(spec)) == spec);
  CHECK(code_of([] { generator_spec_from_json(nlohmann::json::parse(R"({"order": 3})")); }) == ErrorCode::ParseError);
}

TEST_CASE("batch runs in manifest order independent of worker count") {
  const auto dir = scratch_dir();
  write_file(dir / "xor.json", distribution_to_json(parity(3)).dump());
  write_file(dir / "bad.json", R"({"cardinalities": [2], "entries": [{"state": [0], "p": 0.9}]})");
  const std::string manifest = R"([
    {"kind": "parity", "order": 3},
    "xor.json",
    {"input": "bad.json"},
    {"kind": "giant-bit", "order": 4, "alphabet": 3},
    {"kind": "random", "n_vars": 4, "alphabet": 3, "seed": 12, "concentration": 0.5},
    {"kind": "parity", "order": 1},
    {"kind": "point-mass"}
  ])";
  const auto items = parse_manifest(manifest, dir);
  REQUIRE(items.size() == 7);

  RunOptions opts;
  opts.with_spectrum = true;
  auto run = [&](unsigned jobs) {
    std::vector<std::string> lines;
    std::vector<std::size_t> order;
    const auto failed = run_batch(items, opts, jobs, [&](const BatchRecord& r) {
      order.push_back(r.index);
      lines.push_back(batch_record_to_json(r).dump());
    });
    CHECK(failed == 3);
    CHECK(order == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
    return lines;
  };
  const auto serial = run(1);
  CHECK(serial == run(8));
  CHECK(serial == run(3));
  CHECK(serial[2].find("NotNormalized") != std::string::npos);
  CHECK(serial[5].find("InvalidOrder") != std::string::npos);
  CHECK(serial[6].find("SystemTooSmall") != std::string::npos);

  // The file entry and the in-process generator give identical measures.
  const auto a = nlohmann::json::parse(serial[0]).at("report").at("measures");
  const auto b = nlohmann::json::parse(serial[1]).at("report").at("measures");
  CHECK(a == b);

  CHECK(code_of([] { parse_manifest("{}", "."); }) == ErrorCode::ParseError);
  CHECK(run_batch({}, opts, 4, [](const BatchRecord&) {}) == 0);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::SystemTooSmall) == 2);
  CHECK(exit_code_for(ErrorCode::NotNormalized) == 1);
  CHECK(exit_code_for(ErrorCode::RaggedRows) == 1);
}
