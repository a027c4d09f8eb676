#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

std::string env_or_fail(const char* var) {
  const char* v = std::getenv(var);
  REQUIRE(v != nullptr);
  return v;
}

// run the packaged binary through the shell, merging stderr into the capture
CmdResult vtrans(const std::string& args) {
  const std::string cmd = "\"" + env_or_fail("VTRANS_BIN") + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string demo(const std::string& name) { return env_or_fail("VTRANS_DEMO") + "/" + name; }

struct TempScript {
  std::string path;
  explicit TempScript(const std::string& text) : path("cli_tmp_script.vts") {
    std::ofstream(path) << text;
  }
  ~TempScript() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("validate accepts the demo scripts", "[cli]") {
  for (const char* f :
       {"parallel_fibers.vts", "clasped.vts", "loops.vts", "stabilizations.vts"}) {
    const CmdResult r = vtrans("validate " + demo(f));
    INFO(f << ": " << r.out);
    CHECK(r.status == 0);
    CHECK(r.out == "OK\n");
  }
}

TEST_CASE("validate reports the first error with its line", "[cli]") {
  const TempScript bad(
      "manifold genus=2 euler=0\nfield k=1 dual=\"A2\"\n"
      "component K1 base=\"f^1\"\n"
      "begin homotopy h\n  drag K1 path=\"A9\"\nend\n");
  const CmdResult r = vtrans("validate " + bad.path);
  CHECK(r.status == 1);
  CHECK(r.out == "error: line 5: generator index out of range in H1 literal\n");

  const TempScript semantic(
      "manifold genus=2 euler=0\nfield k=1 dual=\"A2\"\n"
      "component W base=\"A1\"\n"
      "begin homotopy h\n  drag W path=\"B2\"\nend\n");
  const CmdResult s = vtrans("validate " + semantic.path);
  CHECK(s.status == 1);
  CHECK(s.out ==
        "error: drag loops exist only for components homotopic to a fiber power; 'W' is not\n");
}

TEST_CASE("nu reports", "[cli]") {
  const CmdResult r = vtrans("nu " + demo("parallel_fibers.vts"));
  CHECK(r.status == 0);
  CHECK(r.out ==
        "[nu]\n"
        "homotopy: parallel\n"
        "terms: 2\n"
        "term: +1 * ((f^1, +0), (f^1, +0))\n"
        "term: -1 * ((f^1, +2), (f^1, +4))\n"
        "nu = NONZERO\n");

  const CmdResult z = vtrans("nu " + demo("clasped.vts"));
  CHECK(z.status == 0);
  CHECK(z.out ==
        "[nu]\n"
        "homotopy: clasped\n"
        "terms: 0\n"
        "nu = ZERO (no inter-component double points)\n");

  const CmdResult multi = vtrans("nu " + demo("stabilizations.vts"));
  CHECK(multi.status == 1);
  CHECK(multi.out ==
        "error: script has 2 homotopy blocks (even, odd); select one with --homotopy\n");

  const CmdResult picked = vtrans("nu " + demo("stabilizations.vts") + " --homotopy even");
  CHECK(picked.status == 1);  // nu needs two components
}

TEST_CASE("hv prints the obstruction integer", "[cli]") {
  const std::string file = demo("loops.vts");
  CHECK(vtrans("hv " + file + " --loop \"drag K1 path=B2\"").out == "1\n");
  CHECK(vtrans("hv " + file + " --loop \"drag K1 path=B2 ; drag K1 path=B2\"").out == "2\n");
  CHECK(vtrans("hv " + file + " --loop \"rot K1 n=5\"").out == "0\n");
  CHECK(vtrans("hv " + file + " --loop \"fib W n=3\"").out == "3\n");
  CHECK(vtrans("hv " + file + " --loop \"drag K1 path=-2*B2\"").out == "-2\n");
  CHECK(vtrans("hv " + file + " --loop \"drag K1 path=A2\"").out == "0\n");

  CHECK(vtrans("hv " + file + " --loop \"fib K1 n=1\"").status == 1);
  CHECK(vtrans("hv " + file + " --loop \"drag W path=B2\"").status == 1);
  CHECK(vtrans("hv " + file + " --loop \"kinkslide K1 n=1\"").status == 1);
  CHECK(vtrans("hv " + file + " --loop \"drag K9 path=B2\"").status == 1);
  CHECK(vtrans("hv " + file + " --loop \"\"").status == 1);
}

TEST_CASE("normal-form output", "[cli]") {
  const std::string file = demo("loops.vts");
  const CmdResult fiber = vtrans(
      "normal-form " + file +
      " --loop \"rot K1 n=2 ; drag K1 path=B2 ; drag K1 path=-B2 ; kinkslide K1 n=4\"");
  CHECK(fiber.status == 0);
  CHECK(fiber.out == "(2,0,4)\n");

  const CmdResult drift = vtrans("normal-form " + file +
                                 " --loop \"drag K1 path=A2 ; drag K1 path=A1 ; rot K1 n=-1\"");
  CHECK(drift.status == 0);
  CHECK(drift.out == "(-1,A1 + A2,0)\n");

  const CmdResult free = vtrans("normal-form " + file + " --loop \"rot W n=1 ; kinkslide W n=5\"");
  CHECK(free.status == 0);
  CHECK(free.out == "(1,0,5)\n");

  const CmdResult blocked = vtrans("normal-form " + file + " --loop \"drag K1 path=B2\"");
  CHECK(blocked.status == 1);
  CHECK(blocked.out == "error: not realizable transversely; obstruction = 1\n");
}

TEST_CASE("verdict reports", "[cli]") {
  const CmdResult r = vtrans("verdict " + demo("parallel_fibers.vts"));
  CHECK(r.status == 0);
  CHECK(r.out ==
        "[verdict]\n"
        "framed: Yes\n"
        "homotopic: Yes\n"
        "link-homotopic: No\n"
        "componentwise: Unknown\n"
        "isotopic: No\n"
        "[provenance]\n"
        "cite: kernel: every central offset change is realizable by admitted loops\n"
        "cite: framing: self-linking is conserved\n"
        "cite: obstruction: nu is nonzero\n"
        "cite: per-component isotopy is neither witnessed nor refuted\n"
        "cite: closure: an isotopy would induce the refuted relation\n");

  const CmdResult odd = vtrans("verdict " + demo("stabilizations.vts") + " --homotopy odd");
  CHECK(odd.status == 0);
  CHECK_THAT(odd.out, Catch::Matchers::ContainsSubstring("framed: No\n"));
  CHECK_THAT(odd.out, Catch::Matchers::ContainsSubstring("homotopic: No\n"));
  CHECK_THAT(odd.out,
             Catch::Matchers::ContainsSubstring("cite: framing: self-linking changes by -1 on 'K'\n"));

  const CmdResult even = vtrans("verdict " + demo("stabilizations.vts") + " --homotopy even");
  CHECK(even.status == 0);
  CHECK_THAT(even.out, Catch::Matchers::ContainsSubstring("homotopic: Yes\n"));
  CHECK_THAT(even.out, Catch::Matchers::ContainsSubstring("link-homotopic: Unknown\n"));
}

TEST_CASE("legendrian promotion flags", "[cli]") {
  const std::string file = demo("clasped.vts");
  const CmdResult plain = vtrans("legendrian " + file);
  CHECK(plain.status == 0);
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("category: legendrian\n"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("link-homotopic: Yes\n"));
  CHECK_THAT(plain.out, Catch::Matchers::ContainsSubstring("loose-components: no\n"));

  const CmdResult loose = vtrans("legendrian " + file + " --loose-components --loose-link");
  CHECK_THAT(loose.out, Catch::Matchers::ContainsSubstring("loose-components: yes\n"));
  CHECK_THAT(loose.out, Catch::Matchers::ContainsSubstring("loose-link: yes\n"));

  // negative verdicts transfer regardless of looseness
  const CmdResult leg = vtrans("legendrian " + demo("stabilizations.vts") +
                               " --homotopy odd --loose-components --loose-link");
  CHECK_THAT(leg.out, Catch::Matchers::ContainsSubstring("componentwise: No\n"));
  CHECK_THAT(leg.out, Catch::Matchers::ContainsSubstring("isotopic: No\n"));
}

TEST_CASE("table rows", "[cli]") {
  const CmdResult all = vtrans("table --all");
  CHECK(all.status == 0);
  CHECK(all.out ==
        "family,i1,i2,LH,CW,ISO\n"
        "parallel,+1,+2,No,Yes,No\n"
        "parallel,+1,+1,Yes,Yes,Yes\n"
        "clasped,+1,+0,Yes,No,No\n"
        "clasped,+0,+1,Unknown,Yes,Unknown\n"
        "braided,+1,+2,No,No,No\n"
        "braided,+0,+1,No,Yes,No\n"
        "braided,+1,+1,Yes,No,No\n");

  const CmdResult one = vtrans("table --family parallel --g 2 --k 1 --i1 1 --i2 2");
  CHECK(one.out == "family,i1,i2,LH,CW,ISO\nparallel,+1,+2,No,Yes,No\n");

  const CmdResult scaled = vtrans("table --family clasped --k 2 --i1 2 --i2 0");
  CHECK(scaled.out == "family,i1,i2,LH,CW,ISO\nclasped,+2,+0,Yes,No,No\n");

  CHECK(vtrans("table --family clasped --k 2 --i1 1").status == 1);  // level not in k*Z
  CHECK(vtrans("table").status == 2);
  CHECK(vtrans("table --all --family parallel").status == 2);
  CHECK(vtrans("table --family nosuch").status == 2);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(vtrans("").status == 2);                       // subcommand required
  CHECK(vtrans("bogus").status == 2);                  // unknown command
  CHECK(vtrans("nu").status == 2);                     // missing file argument
  CHECK(vtrans("nu /nonexistent.vts").status == 1);    // unreadable file
  CHECK(vtrans("--help").status == 0);
  CHECK(vtrans("nu --help").status == 0);
}

TEST_CASE("reports are byte-deterministic", "[cli]") {
  for (const std::string args : {"nu " + demo("parallel_fibers.vts"),
                                 "verdict " + demo("clasped.vts"), std::string("table --all")}) {
    const CmdResult a = vtrans(args);
    const CmdResult b = vtrans(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
