#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is merged into out when asked.
Outcome run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(ZAGREB_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Outcome r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("zagreb_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST_F(Cli, InvariantsRowForK23) {
  const std::string f = write("k23.txt", "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  const Outcome r = run("invariants " + f);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph_id,n,m,max_degree,min_degree,M1,M2,F,Irr,IRL,IRF,IRM,VAR,X,H,rho", 0), 0u);
  EXPECT_NE(r.out.find(",5,6,3,2,30,36,78,6,6,6,36/25,6/25,"), std::string::npos);
  EXPECT_NE(r.out.find(",12/5,2.44948974278"), std::string::npos);
}

TEST_F(Cli, TsvFormat) {
  const std::string f = write("c4.txt", "0 1\n1 2\n2 3\n3 0\n");
  const Outcome r = run("invariants --format tsv --no-spectral " + f);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graph_id\tn\tm"), std::string::npos);
  EXPECT_EQ(r.out.find(','), std::string::npos);
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("invariants").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  const std::string dis = write("dis.txt", "0 1\n2 3\n");
  const Outcome r = run("invariants " + dis, true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("dis.txt"), std::string::npos);
  EXPECT_NE(r.out.find("disconnected"), std::string::npos);
  EXPECT_EQ(run("invariants " + path("missing.txt")).code, 1);
}

TEST_F(Cli, ClassifyTags) {
  const std::string s = write("s4.txt", "0 1\n0 2\n0 3\n");
  const Outcome r = run("classify " + s);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("star(4)"), std::string::npos);
  EXPECT_NE(r.out.find("weakly_semiregular(eps=2)"), std::string::npos);
}

TEST_F(Cli, VerifyFamilyCorpus) {
  const std::string summary = path("summary.csv");
  const Outcome r = run("verify --corpus-family complete_bipartite --corpus-min 3 --corpus-max 7 --summary " + summary);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"complete_bipartite(2,3)\",COR2a,150,150,0,true,true,true,true"), std::string::npos);
  EXPECT_TRUE(fs::exists(summary));
}

TEST_F(Cli, VerifySmallRandomCorpus) {
  EXPECT_EQ(run("verify --corpus-random 40 --seed 5 --corpus-random-max-n 10").code, 0);
}

TEST_F(Cli, InjectedFaultFails) {
  const Outcome r = run("verify --corpus-family cycle --corpus-max 5 --inject-fault EQ2", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation: EQ2 on cycle(4)"), std::string::npos);
}

TEST_F(Cli, Generate) {
  const Outcome d = run("generate dendrimer 4");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(count_lines(d.out), 20u);
  const Outcome w = run("generate wheel 5");
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(count_lines(w.out), 8u);
  const Outcome a = run("generate random 10 15 --seed 7"), b = run("generate random 10 15 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 15u);
  EXPECT_EQ(run("generate random 10 15").code, 2);
  EXPECT_NE(run("generate wheel 3").code, 0);

  const std::string out = path("w.txt");
  ASSERT_EQ(run("generate wheel 6 -o " + out).code, 0);
  const Outcome inv = run("invariants --no-spectral " + out);
  EXPECT_NE(inv.out.find(",6,10,5,3,"), std::string::npos);
}

TEST_F(Cli, FullereneSpiralsAndEnergies) {
  const std::string spirals = write("isomers.txt",
                                    "# label k pentagon positions\n"
                                    "C20 20 1 2 3 4 5 6 7 8 9 10 11 12\n"
                                    "C40:a 40 1 2 4 7 9 11 13 15 17 19 20 22\n"
                                    "C40:b 40 1 2 3 4 5 6 17 18 19 20 21 22\n"
                                    "C60 60 1 7 9 11 13 15 18 20 22 24 26 32\n");
  const Outcome r = run("fullerene --spiral " + spirals);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("label,k,np,irld,irmd_exact,irmd_3dp,eq16,eq17,eq18", 0), 0u);
  EXPECT_NE(r.out.find("C20,20,30,0,0,0.000,true,true,true"), std::string::npos);
  EXPECT_NE(r.out.find("C40:a,40,10,40,"), std::string::npos);
  EXPECT_NE(r.out.find(",24.876,true,true,true"), std::string::npos);
  EXPECT_NE(r.out.find("C60,60,0,60,1035/32,32.344,true,true,true"), std::string::npos);

  const std::string energies = write("e.csv", "label,energy\nC20,1.0\nC40:a,2.5\nC40:b,2.0\nC60,4.0\n");
  const std::string scatter = path("scatter");
  const Outcome e = run("fullerene --spiral " + spirals + " --energies " + energies + " --scatter-dir " + scatter);
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("r2="), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(scatter) / "irld_irmd.dat"));
  EXPECT_TRUE(fs::exists(fs::path(scatter) / "irmd_energy.dat"));

  const std::string bad = write("bad.txt", "C20 20 1 2 3\n");
  const Outcome b = run("fullerene --spiral " + bad, true);
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.out.find("line 1"), std::string::npos);
}

TEST_F(Cli, Correlate) {
  const std::string values = write("v.csv", "label,value\na,1\nb,2\nc,3\nd,4\n");
  const std::string energies = write("e.csv", "label,energy\na,3\nb,5\nc,7\nd,9\n");
  const Outcome r = run("correlate --values " + values + " --energies " + energies);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("slope,intercept,r2,matched,unmatched"), std::string::npos);
  EXPECT_NE(r.out.find("\n2,1,1,4,0"), std::string::npos) << r.out;
}
