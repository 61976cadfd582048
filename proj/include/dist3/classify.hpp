#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dist3::classify {

// Constraint set for enumerating admissible Chern triples of degree-3
// distributions. The default reproduces the published degree-3 table; the
// strict variant also applies the stable Hartshorne bound at c2 = 3, where
// the table and the stability theorem pull in different directions.
struct Policy {
  bool apply_parity = true;          // c1 c2 = c3 (mod 2)
  bool apply_c3_nonneg = true;       // c3 >= 0 for reflexive rank 2
  bool apply_genus_bounds = true;    // Castelnuovo-type cap + low-degree ranges
  bool apply_weak_hartshorne = true;    // c3 <= c2^2 + 2 c2
  bool apply_stable_hartshorne = true;  // c3 <= c2^2 for c2 >= stable_min_c2
  int stable_min_c2 = 4;
  int degc_max = 13;

  static Policy defaults() { return {}; }
  static Policy strict() {
    Policy p;
    p.stable_min_c2 = 3;
    return p;
  }
};

struct Row {
  int deg_c = 0;
  long c2 = 0;
  std::vector<long> c3;  // ascending, step 2
};

struct Table {
  int degree = 3;
  std::string policy_name;
  std::vector<Row> rows;  // rows with empty c3 lists are dropped
};

// Castelnuovo-type cap (degC-1)(degC-2)/2 on the arithmetic genus of a
// degree-degC space curve arising as a singular curve here.
long max_genus(int deg_c);

// Exact low-degree genus ranges: degree 0 forces the empty-curve convention
// Pa = 1, a line has Pa = 0, degree 2 allows -3 <= Pa <= 0. From degree 3 on
// the genus is unbounded below (c3 >= 0 takes over); nullopt encodes that.
std::optional<long> min_genus(int deg_c);

// Largest possible singular-curve degree; known only for distributions of
// degree 3 (where it is 13). Other degrees need a caller-supplied bound.
int degc_bound(int d);

struct Admissible {
  bool ok = true;
  std::vector<std::string> violated;
};

// Is (c1, c2, c3) admissible for the tangent sheaf of a degree-3
// distribution under the policy? Only c1 = -1 is supported.
Admissible admissible(long c1, long c2, long c3, const Policy& policy = Policy::defaults());

// The full enumeration for degree d. For d != 3 a finite degc_max must be
// set in the policy; the Hartshorne bounds apply only when c1 = 2 - d = -1.
Table enumerate(int d, const Policy& policy = Policy::defaults());

std::string to_markdown(const Table& table);
std::string to_csv(const Table& table);
std::string to_json(const Table& table, int indent = 2);

}  // namespace dist3::classify
