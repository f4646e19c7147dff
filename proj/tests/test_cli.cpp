// CLI contract tests: exit codes, determinism across runs, and the
// serialization round-trip. Invoked as: test_cli <cli-binary> <fixtures-dir>.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "weilkit/chern_weil.hpp"
#include "weilkit/json_io.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAIL: " << what << "\n";
    ++failures;
  }
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& command) {
  std::string full = command + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(full.c_str(), "r"), pclose);
  RunResult r{-1, {}};
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    r.output.append(buf.data(), got);
  int status = pclose(pipe.release());
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <cli-binary> <fixtures-dir>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::string fx = argv[2];

  {
    auto r = run(cli + " validate " + fx + "/so3_weil.json --degree-bound 8");
    expect(r.exit_code == 0, "validate so3_weil.json exits 0");
  }
  {
    auto r = run(cli + " validate " + fx + "/malformed.json");
    expect(r.exit_code == 2, "malformed JSON exits 2");
    expect(r.output.find(":2:") != std::string::npos, "malformed JSON names line/column");
  }
  {
    auto r = run(cli + " validate " + fx + "/bad_jacobi.json");
    expect(r.exit_code == 1, "Jacobi violation exits 1");
    expect(r.output.find("(i,j,k,l)") != std::string::npos,
           "Jacobi violation names the indices");
  }
  {
    auto r = run(cli + " validate " + fx + "/z4_group.json " + fx + "/z4_mod2_bundle.json");
    expect(r.exit_code == 0, "groupoid+bundle fixtures validate");
  }
  {
    auto r1 = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                  "/u1_xi.json --construction both");
    expect(r1.exit_code == 0, "chern-weil u1 both exits 0");
    expect(r1.output.find("\"constructions_coincide\": true") != std::string::npos,
           "constructions coincide on u1");
  }
  {
    // support includes level 1 on the tower host, so --expect-level0 must fail
    auto r = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --expect-level0");
    expect(r.exit_code == 1, "expect-level0 fails on the tower host");
  }
  {
    auto r = run(cli + " chern-weil --lie " + fx + "/so3.json --poly " + fx +
                 "/so3_killing.json --host constant --expect-level0");
    expect(r.exit_code == 0, "expect-level0 passes on the constant host");
  }
  {
    // invariance failure of the polynomial: xi1 is not so3-invariant
    auto r = run(cli + " chern-weil --lie " + fx + "/so3.json --poly " + fx + "/h3_xi1.json");
    expect(r.exit_code == 1, "non-invariant polynomial exits 1");
  }
  {
    auto a = run(cli + " chern-weil --lie " + fx + "/so3.json --poly " + fx +
                 "/so3_killing.json --construction both --seed 42");
    auto b = run(cli + " chern-weil --lie " + fx + "/so3.json --poly " + fx +
                 "/so3_killing.json --construction both --seed 42");
    expect(a.exit_code == 0 && a.output == b.output,
           "chern-weil output is byte-identical across runs");
  }
  {
    auto a = run(cli + " bott-tu --g-lie " + fx + "/u1.json --h-lie " + fx +
                 "/u1.json --poly " + fx + "/u1_xi.json --samples 8 --seed 9");
    auto b = run(cli + " bott-tu --g-lie " + fx + "/u1.json --h-lie " + fx +
                 "/u1.json --poly " + fx + "/u1_xi.json --samples 8 --seed 9");
    expect(a.exit_code == 0, "bott-tu exits 0");
    expect(a.output == b.output, "bott-tu output is byte-identical with the same seed");
  }
  {
    auto r = run(cli + " bianchi --lie " + fx + "/sl2.json");
    expect(r.exit_code == 0, "bianchi sl2 exits 0");
  }
  {
    auto r = run(cli + " functoriality --lie " + fx + "/so3.json --poly " + fx +
                 "/so3_killing.json --variant automorphism");
    expect(r.exit_code == 0, "functoriality automorphism variant exits 0");
  }
  {
    auto r = run(cli + " functoriality --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi2.json --variant collapse");
    expect(r.exit_code == 0, "functoriality collapse variant exits 0");
  }
  {
    auto r = run(cli + " independence --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --level-bound 4 --degree-bound 4");
    expect(r.exit_code == 0, "independence finds a verified primitive");
    expect(r.output.find("\"verified\": true") != std::string::npos,
           "independence reports verification");
  }
  {
    auto r = run(cli + " independence --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --level-bound 0 --degree-bound 0");
    expect(r.exit_code == 2, "window-incomplete independence exits 2");
    expect(r.output.find("window-incomplete") != std::string::npos,
           "window-incomplete is reported by name");
  }
  {
    auto r = run(cli + " holonomy --groupoid " + fx + "/z4_group.json --bundle " + fx +
                 "/z4_mod2_bundle.json --object '*'");
    expect(r.exit_code == 0, "holonomy of the mod-2 fixture exits 0");
    expect(r.output.find("\"loop\": \"a\"") != std::string::npos &&
               r.output.find("\"image\": \"1\"") != std::string::npos,
           "holonomy prints the mod-2 table");
  }
  {
    auto r = run(cli + " holonomy --groupoid " + fx + "/z2_group.json --bundle " + fx +
                 "/z2_trivial_bundle.json --object missing");
    expect(r.exit_code == 1, "missing object exits 1");
  }
  {
    auto r = run(cli + " cohomology --groupoid " + fx + "/z2_group.json --max-degree 3");
    expect(r.exit_code == 0 && r.output.find("[\n    1,\n    0,\n    0,\n    0\n  ]") !=
                                   std::string::npos,
           "rational cohomology of Z/2 is reported as [1,0,0,0]");
  }

  // serialization round-trip through the emitted JSON
  {
    auto r = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi2.json --construction fat");
    expect(r.exit_code == 0, "chern-weil u1 xi^2 exits 0");
    using namespace weilkit;
    Json j = Json::parse(r.output);
    GDAlgebra w = weil_algebra(parse_lie_algebra(load_json_file(fx + "/u1.json")));
    TensorPowerSGDA tower(w);
    BigradedElement parsed = parse_cocycle(j["cocycle"], tower);
    Json again = cocycle_to_json(parsed);
    expect(Json(j["cocycle"]) == again, "cocycle JSON round-trips");
  }
  {
    auto r = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --construction fat --format latex");
    expect(r.exit_code == 0 && r.output.find("aligned") != std::string::npos,
           "latex output renders");
  }
  {
    // an explicit connection file naming the canonical connection reproduces
    // the default byte for byte
    auto a = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --construction both");
    auto b = run(cli + " chern-weil --lie " + fx + "/u1.json --poly " + fx +
                 "/u1_xi.json --construction both --connection " + fx + "/u1_eta.json");
    expect(b.exit_code == 0 && a.output == b.output,
           "explicit connection components load and agree");
  }
  {
    // omitting --poly evaluates the constant polynomial: the unit cocycle
    auto r = run(cli + " chern-weil --lie " + fx + "/so3.json --construction both");
    expect(r.exit_code == 0, "default polynomial exits 0");
    expect(r.output.find("\"levels\": {\n      \"0\"") != std::string::npos,
           "unit cocycle sits at level 0");
  }

  std::cout << (failures == 0 ? "all CLI contract checks passed\n"
                              : "CLI contract failures present\n");
  return failures == 0 ? 0 : 1;
}
