#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>

#include "implycim/cost.hpp"
#include "implycim/errors.hpp"
#include "implycim/grain.hpp"
#include "implycim/hexio.hpp"
#include "implycim/oracle.hpp"
#include "implycim/shift.hpp"
#include "implycim/stego.hpp"
#include "implycim/trivium.hpp"

namespace implycim::cli {
namespace {

struct config {
  std::string cipher = "trivium";
  std::string mode = "proposed";
  std::string key, iv;
  std::uint64_t n = 0;
  std::string in, out, trace, report, report_out;
  std::string cover, stego, hist;
  std::string reg;
  std::uint64_t cycles = 0;
  bool published = false;
};

cipher_id parse_cipher(const config& c) { return cipher_from_string(c.cipher); }
shift_mode parse_mode(const config& c) { return shift_mode_from_string(c.mode); }

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw input_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw input_error("cannot write " + path);
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw input_error("write failed: " + path);
}

keystream_result generate(const config& c, std::uint64_t n, trace_sink* trace = nullptr) {
  const auto cipher = parse_cipher(c);
  const auto mode = parse_mode(c);
  const auto key = key_from_hex(cipher, c.key);
  const auto iv = iv_from_hex(cipher, c.iv);
  return cipher == cipher_id::trivium ? trivium_keystream(key, iv, n, mode, trace)
                                      : grain_keystream(key, iv, n, mode, trace);
}

// Message bytes map to bits MSB-first.
bits crypt_bits(const config& c, const bits& message) {
  return xorcrypt(message, generate(c, message.size()).keystream);
}

void emit_report(const config& c, const cost_report& r, std::ostream& out) {
  if (c.report.empty()) return;
  const std::string text = c.report == "json" ? to_json(r) : to_table(r);
  if (c.report_out.empty()) {
    out << text << '\n';
  } else {
    std::ofstream os(c.report_out);
    if (!os) throw input_error("cannot write " + c.report_out);
    os << text << '\n';
  }
}

int cmd_keystream(const config& c, std::ostream& out) {
  std::optional<std::ofstream> trace_file;
  std::optional<trace_sink> trace;
  if (!c.trace.empty()) {
    trace_file.emplace(c.trace);
    if (!*trace_file) throw input_error("cannot write " + c.trace);
    trace.emplace(*trace_file);
  }
  const auto r = generate(c, c.n, trace ? &*trace : nullptr);
  const auto hex = keystream_hex(parse_cipher(c), r.keystream);
  if (c.out.empty()) {
    out << hex << '\n';
  } else {
    std::ofstream os(c.out);
    if (!os) throw input_error("cannot write " + c.out);
    os << hex << '\n';
  }
  emit_report(c, r.report, out);
  return 0;
}

int cmd_crypt(const config& c, std::ostream&) {
  const auto data = read_file(c.in);
  const auto result = crypt_bits(c, bits_from_bytes(data, bit_order::msb_first));
  write_file(c.out, bytes_from_bits(result, bit_order::msb_first));
  return 0;
}

int cmd_embed(const config& c, std::ostream& out) {
  const auto cover = read_pgm(std::filesystem::path(c.cover));
  const auto message = bits_from_bytes(read_file(c.in), bit_order::msb_first);
  if (message.size() > stego_capacity(cover))
    throw capacity_error("message needs " + std::to_string(message.size()) + " bits, cover holds " +
                         std::to_string(stego_capacity(cover)));
  const auto img = embed_lsb(cover, crypt_bits(c, message));
  write_pgm(std::filesystem::path(c.out), img);
  const double p = psnr(cover, img);
  out << "embedded " << message.size() << " bits of " << stego_capacity(cover) << ", psnr ";
  if (std::isinf(p))
    out << "inf";
  else
    out << std::fixed << std::setprecision(2) << p;
  out << " dB\n";
  if (!c.hist.empty()) {
    std::ofstream os(c.hist);
    if (!os) throw input_error("cannot write " + c.hist);
    write_histogram_csv(os, histogram(img));
  }
  return 0;
}

int cmd_extract(const config& c, std::ostream& out) {
  const auto img = read_pgm(std::filesystem::path(c.stego));
  const auto payload = extract_lsb(img);
  if (payload.size() % 8 != 0) throw corrupt_payload_error("payload is not a whole number of bytes");
  const auto message = bytes_from_bits(crypt_bits(c, payload), bit_order::msb_first);
  write_file(c.out, message);
  out << "extracted " << message.size() << " bytes\n";
  return 0;
}

register_layout pick_register(const config& c) {
  const auto cipher = parse_cipher(c);
  std::string r = c.reg;
  for (auto& ch : r) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (cipher == cipher_id::trivium) {
    if (r == "a") return trivium_layout::reg_a();
    if (r == "b") return trivium_layout::reg_b();
    if (r == "c") return trivium_layout::reg_c();
    throw input_error("trivium registers are A, B, C");
  }
  if (r == "lfsr" || r == "s") return grain_layout::lfsr();
  if (r == "nfsr" || r == "b") return grain_layout::nfsr();
  throw input_error("grain128a registers are lfsr, nfsr");
}

int cmd_plan(const config& c, std::ostream& out) {
  const auto layout = pick_register(c);
  const std::uint64_t cycles = c.cycles ? c.cycles
                               : parse_cipher(c) == cipher_id::trivium ? trivium_layout::init_cycles
                                                                        : grain_layout::init_cycles;
  const auto plan = make_plan(layout, parse_mode(c), cycles);
  if (!c.out.empty()) {
    std::ofstream os(c.out);
    if (!os) throw input_error("cannot write " + c.out);
    write_plan_csv(os, plan, layout, 1, cycles);
  }
  out << "first_cycle,last_cycle,buffers,inverters\n";
  for (const auto& run : count_runs(plan, 1, cycles))
    out << run.first << ',' << run.last << ',' << run.per_cycle.buffers << ',' << run.per_cycle.inverters << '\n';
  const auto total = count_elements(plan, 1, cycles);
  const auto steady = count_row(plan.row(plan.steady_from()));
  out << "total," << total.buffers << ',' << total.inverters << '\n';
  out << "steady," << steady.buffers << ',' << steady.inverters << '\n';
  return 0;
}

int cmd_report(const config& c, std::ostream& out) {
  if (c.published) {
    out << published_table() << '\n';
    return 0;
  }
  config rc = c;
  if (rc.report.empty()) rc.report = "table";
  const auto cipher = parse_cipher(c);
  if (rc.key.empty()) rc.key = std::string(cipher == cipher_id::trivium ? 20 : 32, '0');
  if (rc.iv.empty()) rc.iv = std::string(cipher == cipher_id::trivium ? 20 : 24, '0');
  emit_report(rc, generate(rc, rc.n).report, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"IMPLY-logic in-memory cipher simulator"};
  app.require_subcommand(1);
  config c;

  const auto add_cipher = [&](CLI::App* s) {
    s->add_option("--cipher", c.cipher, "trivium or grain128a")
        ->check(CLI::IsMember({"trivium", "grain128a", "grain"}));
    s->add_option("--mode", c.mode, "conventional or proposed")->check(CLI::IsMember({"conventional", "proposed"}));
  };
  const auto add_key = [&](CLI::App* s) {
    add_cipher(s);
    s->add_option("--key", c.key, "key in hex")->required();
    s->add_option("--iv", c.iv, "IV in hex")->required();
  };
  const auto add_report = [&](CLI::App* s) {
    s->add_option("--report", c.report, "cost report format")->check(CLI::IsMember({"json", "table"}));
    s->add_option("--report-out", c.report_out, "write the report to this file");
  };

  auto* ks = app.add_subcommand("keystream", "generate keystream bits as hex");
  add_key(ks);
  ks->add_option("-n", c.n, "number of keystream bits")->required();
  ks->add_option("--out", c.out, "hex output file (default stdout)");
  ks->add_option("--trace", c.trace, "micro-op trace CSV");
  add_report(ks);

  auto* cr = app.add_subcommand("crypt", "XOR a file with the keystream");
  add_key(cr);
  cr->add_option("--in", c.in, "input file")->required();
  cr->add_option("--out", c.out, "output file")->required();

  auto* st = app.add_subcommand("stego", "LSB steganography on binary PGM images");
  st->require_subcommand(1);
  auto* embed = st->add_subcommand("embed", "encrypt a message and hide it in a cover image");
  add_key(embed);
  embed->add_option("--cover", c.cover, "cover PGM")->required();
  embed->add_option("--in", c.in, "message file")->required();
  embed->add_option("--out", c.out, "stego PGM")->required();
  embed->add_option("--hist", c.hist, "stego histogram CSV");
  auto* extract = st->add_subcommand("extract", "recover and decrypt a hidden message");
  add_key(extract);
  extract->add_option("--stego", c.stego, "stego PGM")->required();
  extract->add_option("--out", c.out, "recovered message file")->required();

  auto* pl = app.add_subcommand("plan", "dump a shift plan");
  add_cipher(pl);
  pl->add_option("--register", c.reg, "A, B, C (trivium) or lfsr, nfsr (grain128a)")->required();
  pl->add_option("--cycles", c.cycles, "cycles to plan (default: init length)");
  pl->add_option("--out", c.out, "per-transfer CSV");

  auto* rp = app.add_subcommand("report", "simulate and print a cost report");
  add_cipher(rp);
  rp->add_option("-n", c.n, "keystream bits");
  rp->add_option("--key", c.key, "key in hex (default zero)");
  rp->add_option("--iv", c.iv, "IV in hex (default zero)");
  add_report(rp);
  rp->add_flag("--published", c.published, "print the published closed forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ks) return cmd_keystream(c, out);
    if (*cr) return cmd_crypt(c, out);
    if (*embed) return cmd_embed(c, out);
    if (*extract) return cmd_extract(c, out);
    if (*pl) return cmd_plan(c, out);
    if (*rp) return cmd_report(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace implycim::cli
