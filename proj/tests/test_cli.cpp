#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "implycim/hexio.hpp"
#include "implycim/oracle.hpp"
#include "implycim/stego.hpp"

using namespace implycim;
namespace fs = std::filesystem;

namespace {

struct result {
  int code;
  std::string out, err;
};

result run(std::vector<std::string> args) {
  args.insert(args.begin(), "implycim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string tz = "00000000000000000000";
const std::string gk = "0123456789abcdef123456789abcdef0";
const std::string gv = "0123456789abcdef12345678";

class CliFiles : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("implycim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::vector<std::uint8_t>& bytes) const {
    std::ofstream os(path(name), std::ios::binary);
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  std::vector<std::uint8_t> read(const std::string& name) const {
    std::ifstream is(path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  }
};

std::vector<std::uint8_t> random_bytes(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

}  // namespace

TEST(Cli, TriviumKeystreamMatchesOracle) {
  const auto r = run({"keystream", "--cipher", "trivium", "--key", tz, "--iv", tz, "-n", "64"});
  EXPECT_EQ(r.code, 0);
  const auto ref = trivium_ref(bits(80, 0), bits(80, 0), 64);
  EXPECT_EQ(r.out, keystream_hex(cipher_id::trivium, ref) + "\n");
}

TEST(Cli, GrainMissingIvIsUsageError) {
  const auto r = run({"keystream", "--cipher", "grain128a", "--key", gk, "-n", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--iv"), std::string::npos);
}

TEST(Cli, BadHexIsRuntimeError) {
  EXPECT_EQ(run({"keystream", "--key", "zz", "--iv", tz, "-n", "8"}).code, 1);
  EXPECT_EQ(run({"keystream", "--key", tz + "00", "--iv", tz, "-n", "8"}).code, 1);
}

TEST(Cli, JsonReportStepsMatchClosedForm) {
  const auto r = run({"keystream", "--key", tz, "--iv", tz, "-n", "100", "--report", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_EQ(j.at("steps"), j.at("closed_form").at("steps"));
  EXPECT_EQ(j.at("steps"), 710 * 100 + 797266);
}

TEST(Cli, PlanSteadyStates) {
  auto r = run({"plan", "--cipher", "trivium", "--register", "A"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("steady,3,90"), std::string::npos);
  r = run({"plan", "--cipher", "grain128a", "--register", "nfsr"});
  EXPECT_NE(r.out.find("steady,20,108"), std::string::npos);
  r = run({"plan", "--cipher", "trivium", "--register", "C", "--mode", "conventional"});
  EXPECT_NE(r.out.find("total,127872,0"), std::string::npos);
  EXPECT_EQ(run({"plan", "--cipher", "trivium", "--register", "nfsr"}).code, 1);
}

TEST(Cli, PublishedReport) {
  const auto r = run({"report", "--published"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("797266"), std::string::npos);
}

TEST_F(CliFiles, CryptInvolutionAndEmpty) {
  write("m.bin", random_bytes(1024, 1));
  const std::vector<std::string> key = {"--cipher", "grain128a", "--key", gk, "--iv", gv};
  auto args = [&](const std::string& in, const std::string& out) {
    std::vector<std::string> a = {"crypt"};
    a.insert(a.end(), key.begin(), key.end());
    a.insert(a.end(), {"--in", path(in), "--out", path(out)});
    return a;
  };
  ASSERT_EQ(run(args("m.bin", "c.bin")).code, 0);
  ASSERT_EQ(run(args("c.bin", "p.bin")).code, 0);
  EXPECT_NE(read("c.bin"), read("m.bin"));
  EXPECT_EQ(read("p.bin"), read("m.bin"));
  write("e.bin", {});
  ASSERT_EQ(run(args("e.bin", "e.out")).code, 0);
  EXPECT_TRUE(read("e.out").empty());
  EXPECT_EQ(run(args("missing.bin", "x.bin")).code, 1);
}

TEST_F(CliFiles, WrongKeyDoesNotDecrypt) {
  write("m.bin", random_bytes(64, 2));
  ASSERT_EQ(run({"crypt", "--key", tz, "--iv", tz, "--in", path("m.bin"), "--out", path("c.bin")}).code, 0);
  std::mt19937 rng(3);
  for (int i = 0; i < 5; ++i) {
    std::string k;
    for (int d = 0; d < 20; ++d) k += "0123456789abcdef"[rng() % 16];
    if (k == tz) continue;
    ASSERT_EQ(run({"crypt", "--key", k, "--iv", tz, "--in", path("c.bin"), "--out", path("p.bin")}).code, 0);
    EXPECT_NE(read("p.bin"), read("m.bin"));
  }
}

TEST_F(CliFiles, StegoRoundTrip) {
  gray_image cover(256, 256);
  std::mt19937 rng(5);
  for (auto& p : cover.pixels) p = static_cast<std::uint8_t>(rng());
  write_pgm(fs::path(path("cover.pgm")), cover);
  const auto msg = random_bytes(4000, 6);
  write("msg.bin", msg);
  const std::vector<std::string> key = {"--key", tz, "--iv", tz};
  std::vector<std::string> embed = {"stego", "embed", "--cover", path("cover.pgm"), "--in", path("msg.bin"),
                                    "--out", path("stego.pgm"), "--hist", path("hist.csv")};
  embed.insert(embed.end(), key.begin(), key.end());
  const auto e = run(embed);
  ASSERT_EQ(e.code, 0) << e.err;
  const auto pos = e.out.find("psnr ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GE(std::stod(e.out.substr(pos + 5)), 48.13);
  std::vector<std::string> extract = {"stego", "extract", "--stego", path("stego.pgm"), "--out", path("out.bin")};
  extract.insert(extract.end(), key.begin(), key.end());
  ASSERT_EQ(run(extract).code, 0);
  EXPECT_EQ(read("out.bin"), msg);
  EXPECT_FALSE(read("hist.csv").empty());
}

TEST_F(CliFiles, StegoRejectsNonPgmAndOversize) {
  write("not.pgm", {'P', '2', '\n'});
  write("msg.bin", random_bytes(16, 7));
  EXPECT_EQ(run({"stego", "embed", "--cover", path("not.pgm"), "--in", path("msg.bin"), "--out", path("s.pgm"),
                 "--key", tz, "--iv", tz})
                .code,
            1);
  write_pgm(fs::path(path("small.pgm")), gray_image(8, 8));
  EXPECT_EQ(run({"stego", "embed", "--cover", path("small.pgm"), "--in", path("msg.bin"), "--out",
                 path("s.pgm"), "--key", tz, "--iv", tz})
                .code,
            1);
}
