#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "hpi/cli.hpp"

using namespace hpi;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_command({}).exit_code == 1);
  CHECK(run_command({"codim"}).exit_code == 1);                          // missing model
  CHECK(run_command({"codim", "zoo:point"}).exit_code == 1);             // missing --n
  CHECK(run_command({"growth", "zoo:point"}).exit_code == 1);            // missing --max-n
  CHECK(run_command({"codim", "zoo:point", "--n"}).exit_code == 1);      // dangling flag
  CHECK(run_command({"codim", "zoo:point", "--n", "x"}).exit_code == 1);
  CHECK(run_command({"codim", "zoo:point", "--n", "2", "--method", "guess"}).exit_code == 1);
  CHECK(run_command({"frobnicate", "zoo:point"}).exit_code == 1);
  CHECK(run_command({"check", "zoo:point", "extra"}).exit_code == 1);
  CHECK(contains(run_command({}).out, "usage:"));
}

TEST_CASE("error classes map to distinct exit codes") {
  CHECK(run_command({"check", "zoo:no-such-model"}).exit_code == 2);    // parse
  CHECK(run_command({"check", "/no/such/file.model"}).exit_code == 2);  // unreadable
  CHECK(run_command({"check", "zoo:ut9"}).exit_code == 7);              // size cap
  CHECK(run_command({"codim", "zoo:ut2", "--n", "5", "--limit-rows", "10"}).exit_code == 7);
  CHECK(run_command({"decompose", "zoo:point"}).exit_code == 0);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  std::vector<std::string> base{"codim", "zoo:m2", "--n", "3", "--method", "both"};
  CliResult first = run_command(base);
  CHECK(first.exit_code == 0);
  CHECK(run_command(base).out == first.out);
  std::vector<std::string> t1 = base, t4 = base;
  t1.insert(t1.end(), {"--threads", "1"});
  t4.insert(t4.end(), {"--threads", "4"});
  CHECK(run_command(t1).out == first.out);
  CHECK(run_command(t4).out == first.out);
}

TEST_CASE("codimension answers on record") {
  CliResult r = run_command({"codim", "zoo:point", "--n", "5"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\nc 1\n"));
  CHECK(contains(r.out, "certified yes"));
  r = run_command({"codim", "zoo:nil3", "--n", "3"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\nc 0\n"));
  r = run_command({"cochar", "zoo:ut2", "--n", "4"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\nc 18\n"));
  CHECK(contains(r.out, "colength"));
  CHECK(contains(r.out, "mult (2,2) "));
}

TEST_CASE("structure commands describe the model") {
  CliResult r = run_command({"check", "zoo:m2"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dim 4"));
  CHECK(contains(r.out, "ok"));
  r = run_command({"radical", "zoo:ut2"});
  CHECK(contains(r.out, "radical dim 1"));
  CHECK(contains(r.out, "nil index 2"));
  r = run_command({"decompose", "zoo:ut2"});
  CHECK(contains(r.out, "components 2"));
  r = run_command({"exponent", "zoo:bahturin-m2"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "exponent 4"));
  CHECK(contains(r.out, "witness verified yes"));
}

TEST_CASE("vanishing command reports vacuous windows explicitly") {
  CliResult r = run_command({"vanishing", "zoo:m2", "--n", "3"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "no constrained partitions"));
  r = run_command({"vanishing", "zoo:ut2", "--n", "5"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "result ok"));
}

TEST_CASE("growth emits csv and honors --out") {
  CliResult r = run_command({"growth", "zoo:nil3", "--max-n", "4"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n,c,colength,ratio,root,d,flags\n"));
  CHECK(contains(r.out, "3,0,0,"));
  std::string path = "cli_growth_test.csv";
  CliResult w = run_command({"growth", "zoo:nil3", "--max-n", "4", "--out", path});
  CHECK(w.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string file_text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file_text == w.out);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("dump produces parseable canonical text") {
  CliResult r = run_command({"dump", "zoo:qq-swap"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "hpi-model v1"));
  Model m = parse_model(r.out);
  CHECK(m.name == "qq-swap");
  // Dump of the dump is identical.
  std::string path = "cli_dump_test.model";
  std::ofstream out(path);
  out << r.out;
  out.close();
  CliResult again = run_command({"dump", path});
  CHECK(again.out == r.out);
  std::remove(path.c_str());
}

TEST_CASE("a model file on disk goes through the same pipeline") {
  std::string path = "cli_file_test.model";
  std::ofstream out(path);
  out << "hpi-model v1\n"
         "name disk\n"
         "dim 2\n"
         "labels u v\n"
         "unit 1 0\n"
         "sc 0 0 0 1\n"
         "sc 0 1 1 1\n"
         "sc 1 0 1 1\n";
  out.close();
  CliResult r = run_command({"codim", path, "--n", "3"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "model disk"));
  CHECK(contains(r.out, "\nc 1\n"));  // commutative unital: codimension one
  std::remove(path.c_str());
}
