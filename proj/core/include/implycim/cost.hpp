#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "implycim/common.hpp"
#include "implycim/engine.hpp"
#include "implycim/shift.hpp"

namespace implycim {

struct cost_breakdown {
  std::map<gate_kind, std::uint64_t> counts;
  std::uint64_t steps = 0;
  double energy_nj = 0.0;
};

// Energies are attributed per gate instance; raw micro-ops outside a gate are rejected.
cost_breakdown aggregate(const exec_stats& stats);

struct cost_report {
  cipher_id cipher = cipher_id::trivium;
  shift_mode mode = shift_mode::proposed;
  std::uint64_t n = 0;
  cost_breakdown init;
  cost_breakdown keystream;
  unsigned memristors = 0;

  std::uint64_t total_steps() const { return init.steps + keystream.steps; }
  double total_energy_nj() const { return init.energy_nj + keystream.energy_nj; }
  double total_energy_uj() const { return total_energy_nj() / 1000.0; }
};

cost_report make_report(cipher_id cipher, shift_mode mode, std::uint64_t n, const exec_stats& init,
                        const exec_stats& keystream);

struct keystream_result {
  bits keystream;
  cost_report report;
};

struct closed_form {
  cipher_id cipher = cipher_id::trivium;
  shift_mode mode = shift_mode::proposed;
  std::uint64_t step_slope = 0;
  std::uint64_t step_intercept = 0;
  double energy_slope_uj = 0.0;
  double energy_intercept_uj = 0.0;
};

struct closed_form_value {
  std::uint64_t steps = 0;
  double energy_uj = 0.0;  // rounded to 4 decimals
};

// Coefficients exactly as published.
closed_form published_form(cipher_id cipher, shift_mode mode);
closed_form_value evaluate(const closed_form& form, std::uint64_t n);
closed_form_value closed_form_at(cipher_id cipher, shift_mode mode, std::uint64_t n);

// Per-cycle totals implied by the simulated gate census.
struct cycle_cost {
  std::uint64_t init_steps = 0;
  std::uint64_t keystream_steps = 0;
  double init_energy_nj = 0.0;
  double keystream_energy_nj = 0.0;
};

struct divergence {
  std::int64_t steps_delta = 0;
  double steps_relative = 0.0;
  double energy_delta_uj = 0.0;
  double energy_relative = 0.0;
  bool steps_match = false;
  bool energy_within_tolerance = false;
};

divergence compare(const cost_report& report, const closed_form& form, double energy_tolerance_uj = 1e-4);

struct improvement {
  std::string metric;
  double conventional = 0.0;
  double proposed = 0.0;
  double reduction = 0.0;  // 1 - proposed / conventional
};

// Asymptotic (per keystream bit) reductions from the published slopes.
std::vector<improvement> improvement_ratios();

std::string to_json(const cost_report& report);
std::string to_table(const cost_report& report);
std::string published_table(const std::vector<std::uint64_t>& ns = {10000, 100000});

double round4(double x);

}  // namespace implycim
