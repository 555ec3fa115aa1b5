#include "cchw/fixtures.hpp"

namespace cchw::fixtures {

// Reference dataset v1. Row fields: index, word, tau, dim, av, possible.

const std::vector<ExceptionalRow>& e6_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {1, {}, {2, 3, 4, 5, 6}, 20, 2, {1}},
      {2, {1}, {1, 2, 4, 5, 6}, 21, 2, {2}},
      {3, {1, 3}, {1, 2, 3, 5, 6}, 22, 2, {3}},
      {4, {1, 3, 4}, {1, 3, 4, 6}, 23, 2, {4}},
      {5, {1, 3, 4, 2}, {1, 2, 3, 4, 6}, 24, 2, {5}},
      {6, {1, 3, 4, 5}, {1, 3, 4, 5}, 24, 2, {6}},
      {7, {1, 3, 4, 5, 2}, {1, 2, 3, 5}, 25, 2, {3, 7}},
      {8, {1, 3, 4, 5, 6}, {1, 3, 4, 5, 6}, 25, 2, {8}},
      {9, {1, 3, 4, 5, 2, 4}, {1, 2, 4, 5}, 26, 2, {2, 9}},
      {10, {1, 3, 4, 5, 6, 2}, {1, 2, 3, 5, 6}, 26, 2, {3, 10}},
      {11, {1, 3, 4, 5, 2, 4, 3}, {2, 3, 4, 5}, 27, 2, {1, 11}},
      {12, {1, 3, 4, 5, 6, 2, 4}, {1, 2, 4, 6}, 27, 2, {2, 5, 12}},
      {13, {1, 3, 4, 5, 2, 4, 3, 1}, {1, 2, 3, 4, 5}, 28, 2, {13}},
      {14, {1, 3, 4, 5, 6, 2, 4, 3}, {2, 3, 4, 6}, 28, 2, {1, 5, 14}},
      {15, {1, 3, 4, 5, 6, 2, 4, 5}, {1, 2, 4, 5, 6}, 28, 2, {2, 15}},
      {16, {1, 3, 4, 5, 6, 2, 4, 3, 1}, {1, 2, 3, 4, 6}, 29, 2, {5, 16}},
      {17, {1, 3, 4, 5, 6, 2, 4, 5, 3}, {2, 3, 5, 6}, 29, 2, {1, 3, 10, 17}},
      {18, {1, 3, 4, 5, 6, 2, 4, 5, 3, 1}, {1, 2, 3, 5, 6}, 30, 2, {3, 10, 18}},
      {19, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4}, {3, 4, 5, 6}, 30, 2, {1, 8, 19}},
      {20, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1}, {1, 4, 5, 6}, 31, 2, {2, 8, 15, 20}},
      {21, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2}, {2, 3, 4, 5, 6}, 31, 1, {1, 21}},
      {22, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1}, {1, 2, 4, 5, 6}, 32, 1, {22}},
      {23, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3}, {1, 3, 4, 5, 6}, 32, 1, {23}},
      {24, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3}, {1, 2, 3, 5, 6}, 33, 1, {24}},
      {25, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4}, {1, 2, 3, 4, 6}, 34, 1, {25}},
      {26, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5}, {1, 2, 3, 4, 5}, 35, 1, {26}},
      {27, {1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, 36, 0, {27}},
  };
  return rows;
}

const std::vector<ExceptionalRow>& e7_rows() {
  static const std::vector<ExceptionalRow> rows = {
      {1, {}, {1, 2, 3, 4, 5, 6}, 36, 3, {1}},
      {2, {7}, {1, 2, 3, 4, 5, 7}, 37, 3, {2}},
      {3, {7, 6}, {1, 2, 3, 4, 6, 7}, 38, 3, {3}},
      {4, {7, 6, 5}, {1, 2, 3, 5, 6, 7}, 39, 3, {4}},
      {5, {7, 6, 5, 4}, {1, 4, 5, 6, 7}, 40, 3, {5}},
      {6, {7, 6, 5, 4, 2}, {1, 2, 4, 5, 6, 7}, 41, 3, {6}},
      {7, {7, 6, 5, 4, 3}, {3, 4, 5, 6, 7}, 41, 3, {7}},
      {8, {7, 6, 5, 4, 2, 3}, {2, 3, 5, 6, 7}, 42, 3, {4, 8}},
      {9, {7, 6, 5, 4, 3, 1}, {1, 3, 4, 5, 6, 7}, 42, 3, {9}},
      {10, {7, 6, 5, 4, 2, 3, 1}, {1, 2, 3, 5, 6, 7}, 43, 3, {4, 10}},
      {11, {7, 6, 5, 4, 2, 3, 4}, {2, 3, 4, 6, 7}, 43, 3, {3, 11}},
      {12, {7, 6, 5, 4, 2, 3, 1, 4}, {1, 2, 4, 6, 7}, 44, 3, {3, 6, 12}},
      {13, {7, 6, 5, 4, 2, 3, 4, 5}, {2, 3, 4, 5, 7}, 44, 3, {2, 13}},
      {14, {7, 6, 5, 4, 2, 3, 1, 4, 3}, {1, 2, 3, 4, 6, 7}, 45, 3, {3, 14}},
      {15, {7, 6, 5, 4, 2, 3, 1, 4, 5}, {1, 2, 4, 5, 7}, 45, 3, {2, 6, 15}},
      {16, {7, 6, 5, 4, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, 45, 3, {1, 16}},
      {17, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5}, {1, 2, 3, 5, 7}, 46, 3, {2, 4, 10, 17}},
      {18, {7, 6, 5, 4, 2, 3, 1, 4, 5, 6}, {1, 2, 4, 5, 6}, 46, 3, {1, 6, 18}},
      {19, {7, 6, 5, 4, 2, 3, 4, 5, 6, 7}, {2, 3, 4, 5, 6, 7}, 46, 2, {19}},
      {20, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4}, {1, 3, 4, 5, 7}, 47, 3, {2, 9, 20}},
      {21, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6}, {1, 2, 3, 5, 6}, 47, 3, {1, 4, 10, 21}},
      {22, {7, 6, 5, 4, 2, 3, 1, 4, 5, 6, 7}, {1, 2, 4, 5, 6, 7}, 47, 2, {22}},
      {23, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2}, {1, 2, 3, 4, 5, 7}, 48, 2, {23}},
      {24, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6}, {1, 3, 4, 6}, 48, 3, {1, 3, 9, 14, 24}},
      {25, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 6, 7}, {1, 2, 3, 5, 6, 7}, 48, 2, {25}},
      {26, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6}, {1, 2, 3, 4, 6}, 49, 2, {26}},
      {27, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5}, {1, 3, 4, 5, 6}, 49, 2, {27}},
      {28, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 7}, {1, 3, 4, 6, 7}, 49, 2, {28}},
      {29, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5}, {1, 2, 3, 5, 6}, 50, 2, {25, 29}},
      {30, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 7}, {1, 2, 3, 4, 6, 7}, 50, 2, {30}},
      {31, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5, 7}, {1, 3, 4, 5, 7}, 50, 2, {23, 31}},
      {32, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4}, {1, 2, 4, 5, 6}, 51, 2, {22, 32}},
      {33, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7}, {1, 2, 3, 5, 7}, 51, 2, {23, 25, 33}},
      {34, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5, 7, 6}, {1, 3, 4, 5, 6, 7}, 51, 2, {34}},
      {35, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3}, {2, 3, 4, 5, 6}, 52, 2, {19, 35}},
      {36, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7}, {1, 2, 4, 5, 7}, 52, 2, {22, 23, 36}},
      {37, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 7, 6}, {1, 2, 3, 5, 6, 7}, 52, 2, {25, 37}},
      {38, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1}, {1, 2, 3, 4, 5, 6}, 53, 2, {38}},
      {39, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 7}, {2, 3, 4, 5, 7}, 53, 2, {19, 23, 39}},
      {40, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7, 6}, {1, 2, 4, 6, 7}, 53, 2, {22, 30, 40}},
      {41, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7}, {1, 2, 3, 4, 5, 7}, 54, 2, {23, 41}},
      {42, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 7, 6}, {2, 3, 4, 6, 7}, 54, 2, {19, 30, 42}},
      {43, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7, 6, 5}, {1, 2, 4, 5, 6, 7}, 54, 2, {22, 43}},
      {44, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6}, {1, 2, 3, 4, 6, 7}, 55, 2, {30, 44}},
      {45, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 7, 6, 5}, {2, 3, 5, 6, 7}, 55, 2, {19, 25, 37, 45}},
      {46, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5}, {1, 2, 3, 5, 6, 7}, 56, 2, {25, 37, 46}},
      {47, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 7, 6, 5, 4}, {3, 4, 5, 6, 7}, 56, 2, {19, 34, 47}},
      {48, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4}, {1, 4, 5, 6, 7}, 57, 2, {22, 34, 43, 48}},
      {49, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 7, 6, 5, 4, 2}, {2, 3, 4, 5, 6, 7}, 57, 1, {49}},
      {50, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2}, {1, 2, 4, 5, 6, 7}, 58, 1, {50}},
      {51, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3}, {1, 3, 4, 5, 6, 7}, 58, 1, {51}},
      {52, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3}, {1, 2, 3, 5, 6, 7}, 59, 1, {52}},
      {53, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4}, {1, 2, 3, 4, 6, 7}, 60, 1, {53}},
      {54, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 7}, 61, 1, {54}},
      {55, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, 62, 1, {55}},
      {56, {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}, 63, 0, {56}},
  };
  return rows;
}

const std::vector<TabColumn>& e6_tab_columns() {
  static const std::vector<TabColumn> cols = {
      {1, 3, {{1, 2}, {11, 9}, {14, 12}, {17, 15}, {19, 20}, {21, 22}}},
      {3, 4, {{2, 3}, {9, 7}, {12, 10}, {15, 17}, {20, 18}, {22, 24}}},
      {2, 4, {{4, 3}, {6, 7}, {8, 10}, {19, 17}, {20, 18}, {23, 24}}},
      {4, 5, {{3, 4}, {7, 5}, {10, 12}, {17, 14}, {18, 16}, {24, 25}}},
      {5, 6, {{4, 6}, {5, 7}, {12, 9}, {14, 11}, {16, 13}, {25, 26}}},
  };
  return cols;
}

const std::vector<TabColumn>& e7_tab_columns() {
  // The (1,3) image subcolumn of the source table is corrupt (as printed it
  // repeats the (3,4) images, asserting T(w) = w and length jumps of 0/2,
  // both impossible for a wall-crossing operator). Its w-column matches the
  // computed domain on all 12 entries; the images below are reconstructed
  // from the operator definition applied to the reference words.
  static const std::vector<TabColumn> cols = {
      {1, 3, {{7, 5}, {8, 6}, {11, 12}, {13, 15}, {16, 18}, {19, 22}, {35, 32}, {39, 36}, {42, 40}, {45, 43}, {47, 48}, {49, 50}}},
      {3, 4, {{5, 4}, {6, 8}, {12, 10}, {15, 17}, {18, 21}, {22, 25}, {32, 29}, {36, 33}, {40, 37}, {43, 45}, {48, 46}, {50, 52}}},
      {2, 4, {{5, 4}, {7, 8}, {9, 10}, {20, 17}, {24, 21}, {27, 29}, {28, 25}, {31, 33}, {34, 37}, {47, 45}, {48, 46}, {51, 52}}},
      {4, 5, {{4, 3}, {8, 11}, {10, 12}, {17, 14}, {21, 24}, {25, 28}, {29, 26}, {33, 30}, {37, 40}, {45, 42}, {46, 44}, {52, 53}}},
      {5, 6, {{3, 2}, {11, 13}, {12, 15}, {14, 17}, {24, 20}, {26, 23}, {28, 31}, {30, 33}, {40, 36}, {42, 39}, {44, 41}, {53, 54}}},
      {6, 7, {{2, 1}, {13, 16}, {15, 18}, {17, 21}, {20, 24}, {23, 26}, {31, 27}, {33, 29}, {36, 32}, {39, 35}, {41, 38}, {54, 55}}},
  };
  return cols;
}

const std::vector<std::pair<std::string, std::string>>& known_errata() {
  // The source's "possible" columns were evidently produced with the support
  // filter approximated by dimension comparison (its stated recipe filters on
  // the printed tau/dim/AV columns). That proxy reproduces every row here
  // except the five below, where the candidate fails the actual closure
  // condition (Bruhat order, three independent computations) or, for the E6
  // row, even the AV-column proxy itself.
  static const std::vector<std::pair<std::string, std::string>> errata = {
      {"e6:21:possible",
       "source lists {1, 21}; index 1 fails the moment-map filter "
       "(mu-rank(w_1) = 2 > 1 = AV-rank(w_21)), exactly the rule the source "
       "applies to the analogous candidates in rows 22-26"},
      {"e7:29:possible", "source lists {25, 29}; w_25 is not below w_29 in Bruhat order"},
      {"e7:31:possible", "source lists {23, 31}; w_23 is not below w_31 in Bruhat order"},
      {"e7:32:possible", "source lists {22, 32}; w_22 is not below w_32 in Bruhat order"},
      {"e7:35:possible", "source lists {19, 35}; w_19 is not below w_35 in Bruhat order"},
  };
  return errata;
}

}  // namespace cchw::fixtures
