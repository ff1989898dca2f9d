#include "implycim/shift.hpp"

#include <map>
#include <ostream>

#include "implycim/errors.hpp"

namespace implycim {

std::string_view to_string(element e) { return e == element::buffer ? "BUFFER" : "INVERTER"; }

std::string_view to_string(shift_mode m) { return m == shift_mode::conventional ? "conventional" : "proposed"; }

shift_mode shift_mode_from_string(std::string_view name) {
  if (name == "conventional") return shift_mode::conventional;
  if (name == "proposed") return shift_mode::proposed;
  throw input_error("unknown mode: " + std::string(name));
}

std::vector<std::pair<unsigned, unsigned>> register_layout::tap_pairs() const {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned pos : taps)
    if (pos > 1 && taps.contains(pos - 1)) pairs.emplace_back(pos - 1, pos);
  return pairs;
}

std::string register_layout::position_name(unsigned pos) const {
  if (pos == 0) return "in";
  if (pos - 1 < cell_names.size()) return cell_names[pos - 1];
  return std::to_string(pos);
}

void register_layout::check() const {
  if (cells.empty()) throw layout_error("register " + name + " has no cells");
  if (!cell_names.empty() && cell_names.size() != cells.size())
    throw layout_error("register " + name + ": cell_names size mismatch");
  for (unsigned pos : taps)
    if (pos < 1 || pos > length()) throw layout_error("register " + name + ": tap out of range");
  for (unsigned pos : tolerant_taps) {
    if (pos < 1 || pos > length()) throw layout_error("register " + name + ": tap out of range");
    if (taps.contains(pos)) throw layout_error("register " + name + ": position both constrained and tolerant");
  }
}

shift_plan::shift_plan(shift_mode mode, unsigned length, std::uint64_t cycles, std::vector<std::vector<element>> rows,
                       std::uint64_t period)
    : mode_(mode), length_(length), cycles_(cycles), rows_(std::move(rows)), period_(period) {
  if (rows_.empty() || period_ == 0 || period_ > rows_.size()) throw scheduling_error("malformed shift plan");
  for (const auto& r : rows_)
    if (r.size() != length_) throw scheduling_error("shift plan row length mismatch");
}

std::size_t shift_plan::row_index(std::uint64_t cycle) const {
  if (cycle == 0) throw scheduling_error("cycles are numbered from 1");
  const std::uint64_t stored = rows_.size();
  if (cycle <= stored) return cycle - 1;
  return stored - period_ + (cycle - stored - 1) % period_;
}

void shift_plan::set(std::uint64_t cycle, unsigned transfer, element e) {
  if (cycle == 0 || cycle > rows_.size()) throw scheduling_error("cycle outside stored rows");
  if (transfer == 0 || transfer > length_) throw scheduling_error("transfer out of range");
  rows_[cycle - 1][transfer - 1] = e;
}

shift_plan plan_conventional(const register_layout& layout, std::uint64_t cycles) {
  layout.check();
  return shift_plan(shift_mode::conventional, layout.length(), cycles,
                    {std::vector<element>(layout.length(), element::buffer)}, 1);
}

shift_plan plan_proposed(const register_layout& layout, std::uint64_t cycles) {
  layout.check();
  const unsigned n = layout.length();
  std::vector<std::uint8_t> pol(n, 0);
  std::map<std::vector<std::uint8_t>, std::uint64_t> seen{{pol, 0}};
  std::vector<std::vector<element>> rows;

  for (std::uint64_t t = 1;; ++t) {
    std::vector<element> row(n, element::inverter);
    for (unsigned j = 1; j <= n; ++j) {
      if (!layout.is_tap(j)) continue;
      const bool source_is_tap = j > 1 && layout.is_tap(j - 1);
      const std::uint8_t source_pol = j == 1 ? 0 : pol[j - 2];
      if (source_is_tap || source_pol == 0) row[j - 1] = element::buffer;
    }
    advance_polarity(pol, row);
    rows.push_back(std::move(row));
    for (unsigned pos : layout.taps)
      if (pol[pos - 1]) throw scheduling_error("register " + layout.name + ": no polarity-consistent assignment");
    auto [it, inserted] = seen.emplace(pol, t);
    if (!inserted) return shift_plan(shift_mode::proposed, n, cycles, std::move(rows), t - it->second);
  }
}

shift_plan make_plan(const register_layout& layout, shift_mode mode, std::uint64_t cycles) {
  return mode == shift_mode::conventional ? plan_conventional(layout, cycles) : plan_proposed(layout, cycles);
}

void advance_polarity(std::vector<std::uint8_t>& pol, std::span<const element> row) {
  for (std::size_t j = pol.size(); j-- > 0;) {
    const std::uint8_t src = j == 0 ? 0 : pol[j - 1];
    pol[j] = src ^ (row[j] == element::inverter ? 1 : 0);
  }
}

std::vector<std::uint8_t> polarity_after(const shift_plan& plan, std::uint64_t cycle) {
  std::vector<std::uint8_t> pol(plan.length(), 0);
  for (std::uint64_t t = 1; t <= cycle; ++t) advance_polarity(pol, plan.row(t));
  return pol;
}

bool verify_polarity(const shift_plan& plan, const register_layout& layout) {
  if (plan.length() != layout.length()) return false;
  const auto pairs = layout.tap_pairs();
  std::vector<std::uint8_t> pol(plan.length(), 0);
  for (std::uint64_t t = 1; t <= plan.cycles(); ++t) {
    const auto row = plan.row(t);
    for (const auto& [from, to] : pairs)
      if (row[to - 1] != element::buffer) return false;
    advance_polarity(pol, row);
    for (unsigned pos : layout.taps)
      if (pol[pos - 1]) return false;
  }
  return true;
}

element_counts count_row(std::span<const element> row) {
  element_counts c;
  for (auto e : row) (e == element::buffer ? c.buffers : c.inverters) += 1;
  return c;
}

element_counts count_elements(const shift_plan& plan, std::uint64_t first, std::uint64_t last) {
  element_counts total;
  if (first == 0) throw scheduling_error("cycles are numbered from 1");
  std::vector<element_counts> per_row(plan.stored_rows());
  for (std::size_t r = 0; r < per_row.size(); ++r) per_row[r] = count_row(plan.row(r + 1));
  for (std::uint64_t t = first; t <= last; ++t) total += per_row[plan.row_index(t)];
  return total;
}

std::vector<count_run> count_runs(const shift_plan& plan, std::uint64_t first, std::uint64_t last) {
  std::vector<count_run> runs;
  for (std::uint64_t t = first; t <= last; ++t) {
    const auto c = count_row(plan.row(t));
    if (!runs.empty() && runs.back().per_cycle == c && runs.back().last + 1 == t) {
      runs.back().last = t;
      runs.back().total += c;
    } else {
      runs.push_back({t, t, c, c});
    }
  }
  return runs;
}

void write_plan_csv(std::ostream& os, const shift_plan& plan, const register_layout& layout, std::uint64_t first,
                    std::uint64_t last) {
  os << "cycle,transfer_from,transfer_to,element\n";
  for (std::uint64_t t = first; t <= last; ++t) {
    const auto row = plan.row(t);
    for (unsigned j = layout.length(); j >= 1; --j)
      os << t << ',' << layout.position_name(j - 1) << ',' << layout.position_name(j) << ','
         << to_string(row[j - 1]) << '\n';
  }
}

}  // namespace implycim
