#ifndef MAXCURVE_TABLE1_HPP
#define MAXCURVE_TABLE1_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxcurve {

// Published genera of maximal curves arising as quotients of the covers, per maximality field.
struct Table1Row {
  std::string field;  // "F_{2^12}", "F_{2^20}", "F_{3^18}"
  bool suzuki;
  int s;
  std::vector<std::int64_t> genera;
};

inline const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {"F_{2^12}", true, 1, {13, 19, 45, 196}},
      {"F_{2^20}",
       true,
       2,
       {77, 86, 106, 125, 146, 205, 247, 314, 324, 376, 422, 447, 526, 616, 650, 735, 856, 906, 1322, 1482, 1824, 1874,
        2666, 3076, 3760, 3810, 7632, 15376}},
      {"F_{3^18}",
       false,
       1,
       {337,   347,   445,   455,   675,   694,   891,   910,   1075,  1429,  1431,  1459,  1469,  2125,
        2154,  2862,  2866,  2919,  2938,  4254,  4381,  4387,  4471,  4501,  4511,  4725,  5825,  6651,
        8775,  8781,  8787,  8946,  9003,  9022,  9457,  9463,  10217, 11654, 12951, 13507, 13597, 13627,
        17575, 18927, 20438, 27027, 27198, 27255, 30745, 35151, 40885, 40975, 61503, 81783, 81954}},
  };
  return rows;
}

inline std::optional<Table1Row> table1_row(std::string_view field) {
  for (const auto& r : table1())
    if (r.field == field) return r;
  return std::nullopt;
}

inline std::optional<Table1Row> table1_row(bool suzuki, int s) {
  for (const auto& r : table1())
    if (r.suzuki == suzuki && r.s == s) return r;
  return std::nullopt;
}

}  // namespace maxcurve

#endif  // MAXCURVE_TABLE1_HPP
