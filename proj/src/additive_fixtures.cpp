// Reference witness tables. They are data only; every row is re-verified
// before use.

#include <array>
#include <charconv>
#include <string_view>

#include "rkit/additive.hpp"

namespace rkit {

namespace {

constexpr std::array<std::string_view, 102> kRichertRows = {
    "71+41+11",          "67+29+17+11",       "71+41+11+2",        "67+59",
    "67+47+11+2",        "71+29+17+11",       "71+47+11",          "71+59",
    "67+47+17",          "71+59+2",           "67+47+17+2",        "59+47+17+11",
    "71+47+17",          "59+47+17+11+2",     "71+47+17+2",        "71+67",
    "67+59+11+2",        "71+67+2",           "71+59+11",          "71+41+17+11+2",
    "71+59+11+2",        "67+47+17+11+2",     "67+59+17+2",        "71+47+17+11",
    "71+59+17",          "71+47+17+11+2",     "71+67+11",          "67+41+29+11+2",
    "71+67+11+2",        "71+41+29+11",       "101+41+11",         "71+41+29+11+2",
    "71+67+17",          "67+59+17+11+2",     "71+67+17+2",        "71+59+17+11",
    "71+59+29",          "71+59+17+11+2",     "71+59+29+2",        "67+47+29+17+2",
    "59+47+29+17+11",    "71+47+29+17",       "59+47+29+17+11+2",  "71+67+17+11",
    "71+67+29",          "71+67+17+11+2",     "71+67+29+2",        "71+59+29+11",
    "71+59+41",          "71+59+29+11+2",     "71+59+41+2",        "67+59+29+17+2",
    "67+59+47+2",        "59+47+41+29",       "59+47+41+17+11+2",  "71+67+29+11",
    "71+67+41",          "71+67+29+11+2",     "71+67+41+2",        "71+59+41+11",
    "67+59+29+17+11",    "71+67+29+17",       "71+67+47",          "71+67+29+17+2",
    "71+67+47+2",        "71+59+47+11",       "71+59+29+17+11+2",  "71+67+41+11",
    "101+71+17+2",       "71+67+41+11+2",     "59+47+41+29+17",    "71+59+47+17",
    "71+67+29+17+11",    "71+67+47+11",       "71+67+59",          "71+67+47+11+2",
    "71+67+59+2",        "71+59+41+29",       "71+59+41+17+11+2",  "71+67+47+17",
    "67+59+47+17+11+2",  "71+67+47+17+2",     "71+59+47+17+11",    "71+59+47+29",
    "71+67+41+17+11",    "71+67+59+11",       "71+67+41+17+11+2",  "71+67+41+29+2",
    "71+59+41+29+11",    "67+47+41+29+17+11", "71+67+47+17+11",    "71+67+59+17",
    "71+67+47+17+11+2",  "71+67+59+17+2",     "71+59+47+29+11",    "71+59+47+41",
    "71+67+41+29+11",    "71+59+47+41+2",     "71+67+41+29+11+2",  "97+71+41+11+2",
    "71+59+47+29+17",    "67+59+41+29+17+11",
};

std::vector<u64> parse_sum(std::string_view text) {
  std::vector<u64> parts;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const auto token = text.substr(0, plus);
    u64 value = 0;
    std::from_chars(token.data(), token.data() + token.size(), value);
    parts.push_back(value);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return parts;
}

std::vector<TableRow> build_richert_table() {
  std::vector<TableRow> rows;
  rows.reserve(kRichertRows.size());
  for (std::size_t i = 0; i < kRichertRows.size(); ++i) {
    rows.push_back({123 + i, parse_sum(kRichertRows[i])});
  }
  return rows;
}

using PairList = std::vector<std::pair<u64, u64>>;

PairList first_nine() {
  return {{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}, {11, 18}, {12, 17}, {13, 16}, {14, 15}};
}

PairList extend(PairList base, PairList more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

std::vector<std::pair<u64, PairList>> build_greenfield_table() {
  const PairList k14_tail = {{19, 28}, {20, 27}, {21, 26}, {22, 25}, {23, 24}};
  return {
      {5, {{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}}},
      {6, {{1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 12}, {6, 11}}},
      {8, {{1, 16}, {2, 15}, {3, 14}, {4, 13}, {5, 12}, {6, 11}, {7, 10}, {8, 9}}},
      {9, first_nine()},
      {11, extend(first_nine(), {{19, 22}, {20, 21}})},
      {12, extend(first_nine(), {{19, 22}, {20, 21}, {23, 24}})},
      {14, extend(first_nine(), k14_tail)},
      {15, extend(extend(first_nine(), k14_tail), {{29, 30}})},
      {17, extend(first_nine(), {{19, 22}, {20, 21}, {23, 24}, {25, 34}, {26, 33}, {27, 32},
                                 {28, 31}, {29, 30}})},
  };
}

}  // namespace

std::span<const TableRow> richert_table() {
  static const std::vector<TableRow> rows = build_richert_table();
  return rows;
}

std::span<const std::pair<u64, std::vector<std::pair<u64, u64>>>> greenfield_table() {
  static const auto table = build_greenfield_table();
  return table;
}

}  // namespace rkit
