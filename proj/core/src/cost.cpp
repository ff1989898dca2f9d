#include "implycim/cost.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "implycim/errors.hpp"
#include "implycim/gates.hpp"
#include "implycim/grain.hpp"
#include "implycim/trivium.hpp"

namespace implycim {

double round4(double x) { return std::round(x * 1e4) / 1e4; }

cost_breakdown aggregate(const exec_stats& stats) {
  cost_breakdown out;
  std::uint64_t gate_steps = 0;
  for (const auto& [kind, count] : stats.per_gate_counts) {
    const auto m = gate_metrics(kind);
    if (!m.energy_nj) throw accounting_error("no energy figure for gate kind " + std::string(to_string(kind)));
    out.counts[kind] = count;
    gate_steps += count * m.steps;
    out.energy_nj += static_cast<double>(count) * *m.energy_nj;
  }
  if (gate_steps != stats.steps)
    throw accounting_error("step count " + std::to_string(stats.steps) + " does not match gate census " +
                           std::to_string(gate_steps));
  out.steps = gate_steps;
  return out;
}

cost_report make_report(cipher_id cipher, shift_mode mode, std::uint64_t n, const exec_stats& init,
                        const exec_stats& keystream) {
  cost_report r;
  r.cipher = cipher;
  r.mode = mode;
  r.n = n;
  r.init = aggregate(init);
  r.keystream = aggregate(keystream);
  r.memristors = cipher == cipher_id::trivium ? trivium_layout::cell_count : grain_layout::cell_count;
  return r;
}

closed_form published_form(cipher_id cipher, shift_mode mode) {
  if (cipher == cipher_id::trivium)
    return mode == shift_mode::conventional ? closed_form{cipher, mode, 1152, 1437696, 0.0867, 98.2711}
                                            : closed_form{cipher, mode, 710, 797266, 0.0478, 53.4731};
  return mode == shift_mode::conventional ? closed_form{cipher, mode, 1646, 363520, 0.09878, 25.9135}
                                          : closed_form{cipher, mode, 942, 245830, 0.0666, 17.6811};
}

closed_form_value evaluate(const closed_form& form, std::uint64_t n) {
  return {form.step_slope * n + form.step_intercept,
          round4(form.energy_slope_uj * static_cast<double>(n) + form.energy_intercept_uj)};
}

closed_form_value closed_form_at(cipher_id cipher, shift_mode mode, std::uint64_t n) {
  return evaluate(published_form(cipher, mode), n);
}

divergence compare(const cost_report& report, const closed_form& form, double energy_tolerance_uj) {
  if (report.cipher != form.cipher || report.mode != form.mode)
    throw input_error("report and closed form refer to different cipher or mode");
  const auto expected = evaluate(form, report.n);
  divergence d;
  d.steps_delta = static_cast<std::int64_t>(report.total_steps()) - static_cast<std::int64_t>(expected.steps);
  d.steps_relative = expected.steps ? static_cast<double>(d.steps_delta) / static_cast<double>(expected.steps) : 0.0;
  d.energy_delta_uj = report.total_energy_uj() - expected.energy_uj;
  d.energy_relative = expected.energy_uj != 0.0 ? d.energy_delta_uj / expected.energy_uj : 0.0;
  d.steps_match = d.steps_delta == 0;
  d.energy_within_tolerance = std::abs(d.energy_delta_uj) <= energy_tolerance_uj;
  return d;
}

std::vector<improvement> improvement_ratios() {
  std::vector<improvement> out;
  for (auto c : {cipher_id::trivium, cipher_id::grain128a}) {
    const auto conv = published_form(c, shift_mode::conventional);
    const auto prop = published_form(c, shift_mode::proposed);
    const double cs = static_cast<double>(conv.step_slope), ps = static_cast<double>(prop.step_slope);
    out.push_back({std::string(to_string(c)) + " steps per bit", cs, ps, 1.0 - ps / cs});
    out.push_back({std::string(to_string(c)) + " energy per bit", conv.energy_slope_uj, prop.energy_slope_uj,
                   1.0 - prop.energy_slope_uj / conv.energy_slope_uj});
  }
  return out;
}

namespace {

nlohmann::json breakdown_json(const cost_breakdown& b) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [k, n] : b.counts) counts[std::string(to_string(k))] = n;
  return {{"gate_counts", counts}, {"steps", b.steps}, {"energy_uj", round4(b.energy_nj / 1000.0)},
          {"energy_nj", b.energy_nj}};
}

}  // namespace

std::string to_json(const cost_report& r) {
  const auto form = published_form(r.cipher, r.mode);
  const auto expected = evaluate(form, r.n);
  const auto d = compare(r, form);
  nlohmann::json j;
  j["cipher"] = std::string(to_string(r.cipher));
  j["mode"] = std::string(to_string(r.mode));
  j["n"] = r.n;
  j["memristors"] = r.memristors;
  if (r.cipher == cipher_id::trivium) j["memristors_quoted"] = trivium_layout::quoted_memristors;
  j["init"] = breakdown_json(r.init);
  j["keystream"] = breakdown_json(r.keystream);
  j["steps"] = r.total_steps();
  j["energy_uj"] = round4(r.total_energy_uj());
  j["closed_form"] = {{"steps", expected.steps},
                      {"energy_uj", expected.energy_uj},
                      {"step_slope", form.step_slope},
                      {"step_intercept", form.step_intercept},
                      {"energy_slope_uj", form.energy_slope_uj},
                      {"energy_intercept_uj", form.energy_intercept_uj}};
  j["divergence"] = {{"steps_delta", d.steps_delta},
                     {"steps_relative", d.steps_relative},
                     {"energy_delta_uj", d.energy_delta_uj},
                     {"energy_relative", d.energy_relative},
                     {"steps_match", d.steps_match},
                     {"energy_within_tolerance", d.energy_within_tolerance}};
  return j.dump(2);
}

std::string to_table(const cost_report& r) {
  const auto form = published_form(r.cipher, r.mode);
  const auto expected = evaluate(form, r.n);
  const auto d = compare(r, form);
  std::ostringstream os;
  os << to_string(r.cipher) << " (" << to_string(r.mode) << "), n = " << r.n << ", memristors = " << r.memristors;
  if (r.cipher == cipher_id::trivium) os << " (quoted " << trivium_layout::quoted_memristors << ")";
  os << "\n\n";
  os << std::left << std::setw(22) << "gate" << std::right << std::setw(14) << "init" << std::setw(14)
     << "keystream" << '\n';
  std::map<gate_kind, std::pair<std::uint64_t, std::uint64_t>> rows;
  for (const auto& [k, n] : r.init.counts) rows[k].first = n;
  for (const auto& [k, n] : r.keystream.counts) rows[k].second = n;
  for (const auto& [k, p] : rows)
    os << std::left << std::setw(22) << to_string(k) << std::right << std::setw(14) << p.first << std::setw(14)
       << p.second << '\n';
  os << std::fixed << std::setprecision(4);
  os << std::left << std::setw(22) << "steps" << std::right << std::setw(14) << r.init.steps << std::setw(14)
     << r.keystream.steps << '\n';
  os << std::left << std::setw(22) << "energy (uJ)" << std::right << std::setw(14) << r.init.energy_nj / 1000.0
     << std::setw(14) << r.keystream.energy_nj / 1000.0 << "\n\n";
  os << std::left << std::setw(22) << "" << std::right << std::setw(14) << "simulated" << std::setw(14)
     << "closed form" << std::setw(14) << "delta" << '\n';
  os << std::left << std::setw(22) << "total steps" << std::right << std::setw(14) << r.total_steps()
     << std::setw(14) << expected.steps << std::setw(14) << d.steps_delta << '\n';
  os << std::left << std::setw(22) << "total energy (uJ)" << std::right << std::setw(14) << r.total_energy_uj()
     << std::setw(14) << expected.energy_uj << std::setw(14) << d.energy_delta_uj << '\n';
  return os.str();
}

std::string published_table(const std::vector<std::uint64_t>& ns) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "cipher" << std::setw(20) << "steps(n)";
  for (auto n : ns) os << std::right << std::setw(14) << ("n=" + std::to_string(n));
  os << "  " << std::left << std::setw(22) << "energy(n) uJ";
  for (auto n : ns) os << std::right << std::setw(14) << ("n=" + std::to_string(n));
  os << '\n';
  for (auto c : {cipher_id::trivium, cipher_id::grain128a}) {
    for (auto m : {shift_mode::conventional, shift_mode::proposed}) {
      const auto f = published_form(c, m);
      std::ostringstream name, steps, energy;
      name << to_string(c) << " (" << to_string(m) << ")";
      steps << f.step_slope << "n+" << f.step_intercept;
      energy << f.energy_slope_uj << "n+" << std::fixed << std::setprecision(4) << f.energy_intercept_uj;
      os << std::left << std::setw(26) << name.str() << std::setw(20) << steps.str();
      for (auto n : ns) os << std::right << std::setw(14) << evaluate(f, n).steps;
      os << "  " << std::left << std::setw(22) << energy.str() << std::fixed << std::setprecision(4);
      for (auto n : ns) os << std::right << std::setw(14) << evaluate(f, n).energy_uj;
      os << '\n';
    }
  }
  os << '\n';
  for (const auto& imp : improvement_ratios())
    os << std::left << std::setw(26) << imp.metric << std::right << std::fixed << std::setprecision(2)
       << std::setw(8) << imp.reduction * 100.0 << " %\n";
  return os.str();
}

}  // namespace implycim
