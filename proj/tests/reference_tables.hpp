#pragma once

// Published coefficient tables, transcribed verbatim.  Each beta_j is a
// polynomial in lambda given by its coefficients in increasing powers.

#include <string>
#include <vector>

#include "unifd/scalar.hpp"

namespace reference {

using Poly = std::vector<std::string>;   // coefficients of lambda^0, lambda^1, ...
using Row = std::vector<Poly>;           // beta_0 .. beta_{N-1}

struct GeneratorTable {
  int d;
  std::vector<Row> rows;  // rows[p-1]
};

/// Backward-difference generators P_p(z) for d = 1, r = 0, p = 1..6, as
/// printed.  The p = 2 entry's last coefficient is printed as 3/2.
inline const std::vector<std::vector<std::string>> kBackwardDifference = {
    {"1", "-1"},
    {"3/2", "-2", "3/2"},
    {"11/6", "-3", "3/2", "-1/3"},
    {"25/12", "-4", "3", "-4/3", "1/4"},
    {"137/60", "-5", "5", "-10/3", "5/4", "-1/5"},
    {"147/60", "-6", "15/2", "-20/3", "15/4", "-6/5", "1/6"},
};

inline const GeneratorTable kBaseOrder1 = {
    1,
    {
        {{"1"}, {"-1"}},
        {{"3/2", "-1"}, {"-2", "2"}, {"1/2", "-1"}},
        {{"11/6", "-2", "1/2"}, {"-3", "5", "-3/2"}, {"3/2", "-4", "3/2"}, {"-1/3", "1", "-1/2"}},
        {{"25/12", "-35/12", "5/4", "-1/6"},
         {"-4", "26/3", "-9/2", "2/3"},
         {"3", "-19/2", "6", "-1"},
         {"-4/3", "14/3", "-7/2", "2/3"},
         {"1/4", "-11/12", "3/4", "-1/6"}},
        {{"137/60", "-15/4", "17/8", "-1/2", "1/24"},
         {"-5", "77/6", "-71/8", "7/3", "-5/24"},
         {"5", "-107/6", "59/4", "-13/3", "5/12"},
         {"-10/3", "13", "-49/4", "4", "-5/12"},
         {"5/4", "-61/12", "41/8", "-11/6", "5/24"},
         {"-1/5", "5/6", "-7/8", "1/3", "-1/24"}},
    }};

inline const GeneratorTable kBaseOrder2 = {
    2,
    {
        {{"1"}, {"-2"}, {"1"}},
        {{"2", "-1"}, {"-5", "3"}, {"4", "-3"}, {"-1", "1"}},
        {{"35/12", "-5/2", "1/2"},
         {"-26/3", "9", "-2"},
         {"19/2", "-12", "3"},
         {"-14/3", "7", "-2"},
         {"11/12", "-3/2", "1/2"}},
        {{"15/4", "-17/4", "3/2", "-1/6"},
         {"-77/6", "71/4", "-7", "5/6"},
         {"107/6", "-59/2", "13", "-5/3"},
         {"-13", "49/2", "-12", "5/3"},
         {"61/12", "-41/4", "11/2", "-5/6"},
         {"-5/6", "7/4", "-1", "1/6"}},
        {{"203/45", "-49/8", "35/12", "-7/12", "1/24"},
         {"-87/5", "29", "-31/2", "10/3", "-1/4"},
         {"117/4", "-461/8", "137/4", "-95/12", "5/8"},
         {"-254/9", "62", "-121/3", "10", "-5/6"},
         {"33/2", "-307/8", "107/4", "-85/12", "5/8"},
         {"-27/5", "13", "-19/2", "8/3", "-1/4"},
         {"137/180", "-15/8", "17/12", "-5/12", "1/24"}},
    }};

inline const GeneratorTable kBaseOrder3 = {
    3,
    {
        {{"1"}, {"-3"}, {"3"}, {"-1"}},
        {{"5/2", "-1"}, {"-9", "4"}, {"12", "-6"}, {"-7", "4"}, {"3/2", "-1"}},
        {{"17/4", "-3", "1/2"},
         {"-71/4", "14", "-5/2"},
         {"59/2", "-26", "5"},
         {"-49/2", "24", "-5"},
         {"41/4", "-11", "5/2"},
         {"-7/4", "2", "-1/2"}},
        {{"49/8", "-35/6", "7/4", "-1/6"},
         {"-29", "31", "-10", "1"},
         {"461/8", "-137/2", "95/4", "-5/2"},
         {"-62", "242/3", "-30", "10/3"},
         {"307/8", "-107/2", "85/4", "-5/2"},
         {"-13", "19", "-8", "1"},
         {"15/8", "-17/6", "5/4", "-1/6"}},
        {{"967/120", "-28/3", "23/6", "-2/3", "1/24"},
         {"-638/15", "111/2", "-295/12", "9/2", "-7/24"},
         {"3929/40", "-142", "135/2", "-13", "7/8"},
         {"-389/3", "1219/6", "-1235/12", "125/6", "-35/24"},
         {"2545/24", "-176", "565/6", "-20", "35/24"},
         {"-268/5", "185/2", "-207/4", "23/2", "-7/8"},
         {"1849/120", "-82/3", "95/6", "-11/3", "7/24"},
         {"-29/15", "7/2", "-25/12", "1/2", "-1/24"}},
    }};

struct CompactRow {
  int d, alpha, p;
  std::string r;
  std::vector<std::string> weights;
  std::string error;
  std::string name;
};

inline const std::vector<CompactRow> kCompactForms = {
    {1, 1, 3, "0", {"11/6", "-3", "3/2", "-1/3"}, "-1/4", "left"},
    {3, 3, 4, "3", {"-1/8", "1", "-13/8", "0", "13/8", "-1", "1/8"}, "-7/120", "central"},
    {2, 2, 4, "1", {"5/6", "-5/4", "-1/3", "7/6", "-1/2", "1/12"}, "13/180", "shifted"},
    {3, 3, 4, "6", {"-15/8", "13", "-307/8", "62", "-461/8", "29", "-49/8"}, "-29/15", "right"},
    {2, 2, 4, "3/2", {"3/16", "41/48", "-67/24", "19/8", "-35/48", "5/48"}, "341/5760", "staggered"},
};

inline const std::vector<std::string> kSampleLambdas = {"0", "1/2", "1", "3/2", "2"};

inline unifd::Rational eval_poly(const Poly& poly, const unifd::Rational& x) {
  unifd::Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + unifd::parse_rational(*it);
  return acc;
}

inline unifd::Rational q(const std::string& s) { return unifd::parse_rational(s); }

}  // namespace reference
