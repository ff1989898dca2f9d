#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "implycim/engine.hpp"

namespace implycim {

enum class element : std::uint8_t { buffer, inverter };
enum class shift_mode : std::uint8_t { conventional, proposed };

std::string_view to_string(element e);
std::string_view to_string(shift_mode m);
shift_mode shift_mode_from_string(std::string_view name);

// Positions are 1-based in shift order: the injection feeds position 1,
// transfer j moves position j-1 into position j (transfer 1 is the injection).
struct register_layout {
  std::string name;
  std::vector<cell_id> cells;            // cells[k-1] holds position k
  std::vector<std::string> cell_names;   // optional, parallel to cells
  std::set<unsigned> taps;               // polarity must be 0 whenever read
  std::set<unsigned> tolerant_taps;      // read only through complement-absorbing gates

  unsigned length() const { return static_cast<unsigned>(cells.size()); }
  bool is_tap(unsigned pos) const { return taps.contains(pos); }
  // Transfers whose source and destination are both taps.
  std::vector<std::pair<unsigned, unsigned>> tap_pairs() const;
  std::string position_name(unsigned pos) const;
  void check() const;
};

class shift_plan {
 public:
  shift_plan(shift_mode mode, unsigned length, std::uint64_t cycles, std::vector<std::vector<element>> rows,
             std::uint64_t period);

  shift_mode mode() const { return mode_; }
  unsigned length() const { return length_; }
  std::uint64_t cycles() const { return cycles_; }
  std::uint64_t period() const { return period_; }
  std::size_t stored_rows() const { return rows_.size(); }
  // First cycle from which the plan repeats with period().
  std::uint64_t steady_from() const { return rows_.size() - period_ + 1; }

  std::size_t row_index(std::uint64_t cycle) const;
  std::span<const element> row(std::uint64_t cycle) const { return rows_[row_index(cycle)]; }
  element at(std::uint64_t cycle, unsigned transfer) const { return row(cycle)[transfer - 1]; }

  // Only stored cycles can be edited; cycles past stored_rows() keep following the periodic tail.
  void set(std::uint64_t cycle, unsigned transfer, element e);

 private:
  shift_mode mode_;
  unsigned length_;
  std::uint64_t cycles_;
  std::vector<std::vector<element>> rows_;
  std::uint64_t period_;
};

struct element_counts {
  std::uint64_t buffers = 0;
  std::uint64_t inverters = 0;

  std::uint64_t steps() const { return buffers * 4 + inverters * 2; }
  element_counts& operator+=(const element_counts& o) {
    buffers += o.buffers;
    inverters += o.inverters;
    return *this;
  }
  friend bool operator==(const element_counts&, const element_counts&) = default;
};

shift_plan plan_conventional(const register_layout& layout, std::uint64_t cycles);
shift_plan plan_proposed(const register_layout& layout, std::uint64_t cycles);
shift_plan make_plan(const register_layout& layout, shift_mode mode, std::uint64_t cycles);

// Polarity vectors are indexed by position - 1.
void advance_polarity(std::vector<std::uint8_t>& polarity, std::span<const element> row);
std::vector<std::uint8_t> polarity_after(const shift_plan& plan, std::uint64_t cycle);

bool verify_polarity(const shift_plan& plan, const register_layout& layout);

element_counts count_row(std::span<const element> row);
element_counts count_elements(const shift_plan& plan, std::uint64_t first, std::uint64_t last);

struct count_run {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  element_counts per_cycle;
  element_counts total;
};

// Maximal runs of consecutive cycles with equal per-cycle counts.
std::vector<count_run> count_runs(const shift_plan& plan, std::uint64_t first, std::uint64_t last);

// cycle,transfer_from,transfer_to,element
void write_plan_csv(std::ostream& os, const shift_plan& plan, const register_layout& layout, std::uint64_t first,
                    std::uint64_t last);

}  // namespace implycim
