#include "dist3/classify.hpp"

#include <json.hpp>

#include "dist3/distribution.hpp"
#include "dist3/errors.hpp"

namespace dist3::classify {

long max_genus(int deg_c) {
  if (deg_c < 1) throw InputError("max_genus requires degC >= 1");
  return static_cast<long>(deg_c - 1) * (deg_c - 2) / 2;
}

std::optional<long> min_genus(int deg_c) {
  if (deg_c < 0) throw InputError("min_genus requires degC >= 0");
  switch (deg_c) {
    case 0:
      return 1;  // empty curve convention
    case 1:
      return 0;  // a line
    case 2:
      return -3;  // multiplicity structures on a conic/double line
    default:
      return std::nullopt;
  }
}

int degc_bound(int d) {
  if (d == 3) return 13;
  throw InputError("no singular-curve degree bound is known for degree " + std::to_string(d) +
                   "; supply one explicitly");
}

namespace {

struct GenusRange {
  long lo_c3;  // smallest c3 allowed by the genus rules (LONG_MIN-ish when unbounded)
  long hi_c3;  // largest c3 allowed by the genus rules
};

// c3 as a function of the genus for fixed d and degC is linear with slope 2,
// so genus ranges translate directly into c3 ranges.
GenusRange genus_c3_range(int d, int deg_c) {
  auto c3_of = [&](long pa) { return chern_from_curve(d, deg_c, pa).c3; };
  GenusRange r{};
  auto lo = min_genus(deg_c);
  long hi_pa = deg_c >= 1 ? max_genus(deg_c) : 1;
  if (deg_c == 0) hi_pa = 1;
  r.hi_c3 = c3_of(hi_pa);
  r.lo_c3 = lo ? c3_of(*lo) : std::numeric_limits<long>::min() / 2;
  return r;
}

}  // namespace

Admissible admissible(long c1, long c2, long c3, const Policy& policy) {
  if (c1 != -1)
    throw InputError("admissible is defined for c1 = -1 (degree-3 distributions)");
  const int d = 3;
  Admissible a;
  auto violate = [&](const std::string& s) {
    a.ok = false;
    a.violated.push_back(s);
  };

  long deg_c = static_cast<long>(d) * d + 2 - c2;  // 11 - c2
  if (deg_c < 0 || deg_c > policy.degc_max)
    violate("degC = 11 - c2 outside [0, " + std::to_string(policy.degc_max) + "]");

  if (policy.apply_parity && ((c2 + c3) % 2 + 2) % 2 != 0)
    violate("parity: c2 + c3 must be even");
  if (policy.apply_c3_nonneg && c3 < 0) violate("c3 must be non-negative");
  if (policy.apply_weak_hartshorne && c3 > c2 * c2 + 2 * c2)
    violate("c3 exceeds c2^2 + 2*c2");
  if (policy.apply_stable_hartshorne && c2 >= policy.stable_min_c2 && c3 > c2 * c2)
    violate("c3 exceeds c2^2 (stable range)");

  if (policy.apply_genus_bounds && deg_c >= 0 && deg_c <= policy.degc_max) {
    auto range = genus_c3_range(d, static_cast<int>(deg_c));
    if (c3 > range.hi_c3)
      violate("genus above the Castelnuovo-type cap (" + std::to_string(range.hi_c3) +
              " is the largest c3 for degC = " + std::to_string(deg_c) + ")");
    if (c3 < range.lo_c3)
      violate("genus below the allowed range for degC = " + std::to_string(deg_c));
  }
  return a;
}

Table enumerate(int d, const Policy& policy) {
  long c1 = 2 - d;
  Table table;
  table.degree = d;
  table.policy_name = policy.stable_min_c2 <= 3 ? "strict" : "default";
  bool hartshorne_applicable = c1 == -1;

  for (int deg_c = 0; deg_c <= policy.degc_max; ++deg_c) {
    long c2 = static_cast<long>(d) * d + 2 - deg_c;
    auto range = genus_c3_range(d, deg_c);

    long hi = range.hi_c3;
    if (hartshorne_applicable && policy.apply_weak_hartshorne)
      hi = std::min(hi, c2 * c2 + 2 * c2);
    if (hartshorne_applicable && policy.apply_stable_hartshorne && c2 >= policy.stable_min_c2)
      hi = std::min(hi, c2 * c2);

    long lo = range.lo_c3;
    if (policy.apply_c3_nonneg) lo = std::max(lo, 0L);

    // Genus steps of 1 move c3 by 2; parity with c2 is automatic from the
    // Chern formulas, so align the endpoints to the lattice.
    Row row{deg_c, c2, {}};
    long parity = ((range.hi_c3 % 2) + 2) % 2;
    if (((lo % 2) + 2) % 2 != parity) ++lo;
    for (long v = lo; v <= hi; v += 2) {
      if (policy.apply_parity && ((c2 + v) % 2 + 2) % 2 != 0) continue;
      row.c3.push_back(v);
    }
    if (!row.c3.empty()) table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_markdown(const Table& table) {
  std::string s = "| deg(C) | c2(T_D) | c3(T_D) |\n|---|---|---|\n";
  for (const auto& row : table.rows) {
    s += "| " + std::to_string(row.deg_c) + " | " + std::to_string(row.c2) + " | ";
    for (std::size_t i = 0; i < row.c3.size(); ++i)
      s += (i ? ", " : "") + std::to_string(row.c3[i]);
    s += " |\n";
  }
  return s;
}

std::string to_csv(const Table& table) {
  std::string s = "deg_C,c2,c3\n";
  for (const auto& row : table.rows) {
    s += std::to_string(row.deg_c) + "," + std::to_string(row.c2) + ",\"";
    for (std::size_t i = 0; i < row.c3.size(); ++i)
      s += (i ? " " : "") + std::to_string(row.c3[i]);
    s += "\"\n";
  }
  return s;
}

std::string to_json(const Table& table, int indent) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"deg_C", row.deg_c}, {"c2", row.c2}, {"c3", row.c3}});
  nlohmann::json j = {
      {"degree", table.degree}, {"policy", table.policy_name}, {"rows", rows}};
  return j.dump(indent);
}

}  // namespace dist3::classify
