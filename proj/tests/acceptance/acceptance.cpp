// Acceptance suite. One line per criterion; exit status is nonzero if any selected criterion fails.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "implycim/cost.hpp"
#include "implycim/engine.hpp"
#include "implycim/gates.hpp"
#include "implycim/grain.hpp"
#include "implycim/hexio.hpp"
#include "implycim/oracle.hpp"
#include "implycim/shift.hpp"
#include "implycim/stego.hpp"
#include "implycim/trivium.hpp"

using namespace implycim;

namespace {

// Tolerances.
constexpr double energy_tol_uj = 1e-4;
constexpr double per_bit_tol_nj = 1e-4;
constexpr double grain_per_bit_nominal_nj = 66.6;
constexpr double grain_per_bit_rel_tol = 0.02;
constexpr double psnr_floor_db = 48.13;
constexpr double ratio_tol_pp = 0.5;
constexpr int equivalence_pairs = 100;
constexpr std::uint64_t equivalence_bits = 512;

struct outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[FAIL " << what << "] ";
    }
  }
};

std::string fmt(double x, int prec = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << x;
  return os.str();
}

bits random_bits(std::mt19937_64& rng, std::size_t n) {
  bits b(n);
  for (auto& x : b) x = rng() & 1;
  return b;
}

void imply_semantics(outcome& o) {
  // p, q, q'
  constexpr int table[4][3] = {{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}};
  for (const auto& row : table) {
    array_state s(2);
    s.set(cell_id{0}, row[0]);
    s.set(cell_id{1}, row[1]);
    const auto r = exec_imply(s, cell_id{0}, cell_id{1});
    o.check(r.get(cell_id{1}) == row[2] && r.get(cell_id{0}) == row[0],
            "p=" + std::to_string(row[0]) + " q=" + std::to_string(row[1]));
  }
  o.detail << "4/4 cases";
}

void gate_metrics_check(outcome& o) {
  struct expected {
    gate_kind kind;
    std::uint32_t steps, memristors;
    double energy_nj;
  };
  const expected table[] = {
      {gate_kind::inverter, 2, 2, 0.1291},           {gate_kind::buffer, 4, 3, 0.269},
      {gate_kind::and2, 5, 4, 0.3833},               {gate_kind::and3, 6, 5, 0.5025},
      {gate_kind::and4, 11, 6, 0.9131},              {gate_kind::xor2_destructive, 9, 4, 0.7426},
      {gate_kind::xor2_nondestructive, 11, 5, 0.9146}, {gate_kind::xor3, 20, 6, 1.711},
  };
  for (const auto& e : table) {
    const auto m = gate_metrics(e.kind);
    const std::string name(to_string(e.kind));
    o.check(m.steps == e.steps && m.memristors == e.memristors && m.energy_nj && *m.energy_nj == e.energy_nj,
            name + " metrics");
    o.check(truth_check(e.kind), name + " truth table");
  }
  o.detail << "8 kinds";
}

void trivium_cost(outcome& o) {
  constexpr std::uint64_t n = 1000;
  const auto r = trivium_keystream(bits(80, 0), bits(80, 0), n, shift_mode::proposed);
  const double per_bit_nj = r.report.keystream.energy_nj / n;
  o.check(r.report.init.steps == 797266, "init steps");
  o.check(r.report.keystream.steps == 710 * n, "keystream steps");
  o.check(std::abs(per_bit_nj - 47.8983) <= per_bit_tol_nj, "per-bit energy");
  const auto cf = closed_form_at(cipher_id::trivium, shift_mode::proposed, 10000);
  o.check(cf.steps == 7897266, "closed-form steps");
  o.check(std::abs(cf.energy_uj - 531.4731) <= energy_tol_uj, "closed-form energy");
  o.detail << "init " << r.report.init.steps << " steps, " << r.report.keystream.steps / n << " steps and "
           << fmt(per_bit_nj) << " nJ per bit, n=10000 -> " << cf.steps << " steps " << fmt(cf.energy_uj)
           << " uJ (simulated init energy " << fmt(r.report.init.energy_nj / 1000.0) << " uJ)";
}

void grain_cost(outcome& o) {
  constexpr std::uint64_t n = 1000;
  const auto r = grain_keystream(bits(128, 0), bits(96, 0), n, shift_mode::proposed);
  const double per_bit_nj = r.report.keystream.energy_nj / n;
  o.check(r.report.init.steps == 245830, "pre-init steps");
  o.check(r.report.keystream.steps == 942 * n, "keystream steps");
  o.check(std::abs(per_bit_nj - grain_per_bit_nominal_nj) <= grain_per_bit_rel_tol * grain_per_bit_nominal_nj,
          "per-bit energy scale");
  const auto cf = closed_form_at(cipher_id::grain128a, shift_mode::proposed, 10000);
  o.check(cf.steps == 9665830, "closed-form steps");
  o.check(std::abs(cf.energy_uj - 683.6811) <= energy_tol_uj, "closed-form energy");
  o.detail << "pre-init " << r.report.init.steps << " steps, " << r.report.keystream.steps / n << " steps and "
           << fmt(per_bit_nj) << " nJ per bit, n=10000 -> " << cf.steps << " steps " << fmt(cf.energy_uj) << " uJ";
}

void census(outcome& o) {
  struct expected {
    register_layout layout;
    std::uint64_t cycles;
    element_counts steady, total;
  };
  const expected rows[] = {
      {trivium_layout::reg_a(), trivium_layout::init_cycles, {3, 90}, {3499, 103637}},
      {trivium_layout::reg_b(), trivium_layout::init_cycles, {4, 80}, {4572, 92196}},
      {trivium_layout::reg_c(), trivium_layout::init_cycles, {3, 108}, {3490, 124382}},
      {grain_layout::lfsr(), grain_layout::init_cycles, {6, 122}, {1573, 31195}},
      {grain_layout::nfsr(), grain_layout::init_cycles, {20, 108}, {5118, 27650}},
  };
  for (const auto& e : rows) {
    const auto plan = plan_proposed(e.layout, e.cycles);
    const auto steady = count_row(plan.row(plan.steady_from()));
    const auto total = count_elements(plan, 1, e.cycles);
    o.check(steady == e.steady, e.layout.name + " steady");
    o.check(total == e.total, e.layout.name + " total");
    o.detail << e.layout.name << " (" << steady.buffers << "," << steady.inverters << ") " << total.buffers << "/"
             << total.inverters << "; ";
  }
}

void equivalence(outcome& o) {
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  for (int i = 0; i < equivalence_pairs; ++i) {
    const auto tk = random_bits(rng, 80), tv = random_bits(rng, 80);
    const auto tref = trivium_ref(tk, tv, equivalence_bits);
    const auto gk = random_bits(rng, 128), gv = random_bits(rng, 96);
    const auto gref = grain128a_ref(gk, gv, equivalence_bits);
    for (auto mode : {shift_mode::conventional, shift_mode::proposed}) {
      mismatches += trivium_keystream(tk, tv, equivalence_bits, mode).keystream != tref;
      mismatches += grain_keystream(gk, gv, equivalence_bits, mode).keystream != gref;
    }
  }
  o.check(mismatches == 0, std::to_string(mismatches) + " simulated/oracle mismatches");

  struct vector {
    cipher_id cipher;
    const char *key, *iv, *keystream;
  };
  // Published external vectors only.
  const vector published[] = {
      {cipher_id::trivium, "00000000000000000000", "00000000000000000000",
       "fbe0bf265859051b517a2e4e239fc97f563203161907cf2de7a8790fa1b2e9cd"},
      {cipher_id::trivium, "80000000000000000000", "00000000000000000000",
       "38eb86ff730d7a9caf8df13a4420540dbb7b651464c87501552041c249f29a64"},
      {cipher_id::trivium, "0053a6f94c9ff24598eb", "0d74db42a91077de45ac",
       "f4cd954a717f26a7d6930830c4e7cf0819f80e03f25f342c64adc66aba7f8a8e"},
      {cipher_id::grain128a, "00000000000000000000000000000000", "000000000000000000000000",
       "c0207f221660650b6a952ae26586136f"},
  };
  int zero[2] = {0, 0}, nonzero[2] = {0, 0};
  for (const auto& v : published) {
    const auto key = key_from_hex(v.cipher, v.key), iv = iv_from_hex(v.cipher, v.iv);
    const std::string expected = v.keystream;
    const auto n = expected.size() * 4;
    const auto ks = v.cipher == cipher_id::trivium ? trivium_ref(key, iv, n) : grain128a_ref(key, iv, n);
    const bool ok = keystream_hex(v.cipher, ks) == expected;
    o.check(ok, std::string(to_string(v.cipher)) + " vector " + v.key);
    const bool is_zero = std::string(v.key).find_first_not_of('0') == std::string::npos &&
                         std::string(v.iv).find_first_not_of('0') == std::string::npos;
    const int c = static_cast<int>(v.cipher);
    (is_zero ? zero : nonzero)[c] += ok;
  }
  for (int c = 0; c < 2; ++c) {
    const std::string name(to_string(static_cast<cipher_id>(c)));
    o.check(zero[c] >= 1, name + " all-zero vector");
    o.check(nonzero[c] >= 2, name + " needs 2 published nonzero vectors, have " + std::to_string(nonzero[c]));
  }
  o.detail << equivalence_pairs << " pairs x 2 ciphers x 2 modes at n=" << equivalence_bits << ", " << mismatches
           << " mismatches; published vectors trivium " << zero[0] << "+" << nonzero[0] << ", grain128a " << zero[1]
           << "+" << nonzero[1];
}

void polarity(outcome& o) {
  int plans = 0, mutations = 0;
  for (const auto& r : {trivium_layout::reg_a(), trivium_layout::reg_b(), trivium_layout::reg_c(),
                        grain_layout::lfsr(), grain_layout::nfsr()}) {
    const auto plan = plan_proposed(r, 2 * r.length());
    o.check(verify_polarity(plan, r), r.name + " plan");
    ++plans;
    for (const auto& [from, to] : r.tap_pairs()) {
      for (std::uint64_t t = 1; t <= plan.stored_rows(); ++t) {
        auto bad = plan;
        bad.set(t, to, element::inverter);
        o.check(!verify_polarity(bad, r), r.name + " mutation " + std::to_string(from) + "->" + std::to_string(to));
        ++mutations;
      }
    }
  }
  o.detail << plans << " plans verified, " << mutations << " tap-pair mutations rejected";
}

gray_image fixture(int which) {
  gray_image img(256, 256);
  std::mt19937 rng(77 + which);
  for (std::uint32_t y = 0; y < img.height; ++y)
    for (std::uint32_t x = 0; x < img.width; ++x) {
      auto& p = img.pixels[y * img.width + x];
      switch (which) {
        case 0: p = static_cast<std::uint8_t>((x + y) / 2); break;
        case 1: p = static_cast<std::uint8_t>(((x / 16 + y / 16) % 2) ? 230 : 25); break;
        default: p = static_cast<std::uint8_t>(rng()); break;
      }
    }
  return img;
}

void stego(outcome& o) {
  std::mt19937_64 rng(4242);
  const auto key = random_bits(rng, 80), iv = random_bits(rng, 80);
  double worst = INFINITY;
  for (int f = 0; f < 3; ++f) {
    const auto cover = fixture(f);
    const auto cap = stego_capacity(cover);
    for (double frac : {0.01, 0.5, 1.0}) {
      const auto len = static_cast<std::size_t>(std::floor(frac * static_cast<double>(cap)));
      const auto message = random_bits(rng, len);
      const auto ks = trivium_keystream(key, iv, len, shift_mode::proposed).keystream;
      const auto stego_img = embed_lsb(cover, xorcrypt(message, ks));
      const auto recovered = xorcrypt(extract_lsb(stego_img), ks);
      const double p = psnr(cover, stego_img);
      worst = std::min(worst, p);
      const std::string tag = "fixture " + std::to_string(f) + " at " + fmt(frac * 100, 0) + "%";
      o.check(recovered == message, tag + " round trip");
      o.check(p >= psnr_floor_db, tag + " psnr " + fmt(p, 2));
    }
  }
  o.detail << "3 fixtures x 3 fills, min PSNR " << fmt(worst, 2) << " dB";
}

void ratios(outcome& o) {
  const auto imp = improvement_ratios();
  const double trivium = imp[0].reduction * 100.0, grain = imp[2].reduction * 100.0;
  o.check(std::abs(trivium - 38.4) <= 0.05 && std::abs(grain - 42.8) <= 0.05, "computed ratios");
  o.check(std::abs(trivium - 38.0) <= ratio_tol_pp, "trivium vs 38% claim");
  o.check(std::abs(grain - 42.0) <= ratio_tol_pp, "grain vs 42% claim");
  o.detail << "trivium " << fmt(trivium, 2) << "% vs 38%, grain " << fmt(grain, 2) << "% vs 42% (tolerance "
           << ratio_tol_pp << " pp)";
}

struct criterion {
  const char* name;
  std::function<void(outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<criterion> all = {
      {"IMPLY semantics", imply_semantics},
      {"gate metrics", gate_metrics_check},
      {"Trivium cost", trivium_cost},
      {"Grain-128a cost", grain_cost},
      {"shift-plan census", census},
      {"functional equivalence", equivalence},
      {"polarity invariant", polarity},
      {"steganography", stego},
      {"improvement ratios", ratios},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(all.size()); ++i) selected.push_back(i);

  bool all_pass = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(all.size())) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    const auto& c = all[id - 1];
    outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << o.detail.str() << " (" << fmt(ms, 0) << " ms)" << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
