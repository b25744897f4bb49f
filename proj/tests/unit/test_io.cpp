#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "opnum/spectrum_io.hpp"

using namespace opnum;

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, std::nextafter(1.0, 2.0)}) {
    std::string s = format_double(x);
    EXPECT_EQ(std::stod(s), x) << s;
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(SpectrumCsv, BlockColumnWhenMerged) {
  SingularSpectrum s;
  s.values = {0.75, 0.25};
  s.stabilized = {true, false};
  s.block = {0, 3};
  s.tail_budget = 0.125;
  std::istringstream in(spectrum_csv(s));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,a_n,stabilized,tail_budget,block");
  std::getline(in, line);
  EXPECT_EQ(line, "1,0.75,true,0.125,0");
  std::getline(in, line);
  EXPECT_EQ(line, "2,0.25,false,0.125,3");
}
