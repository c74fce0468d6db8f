#include <gtest/gtest.h>

#include <sstream>

#include "ciskit/error.hpp"
#include "ciskit/io.hpp"
#include "ciskit/z4.hpp"
#include "oracles.hpp"

using namespace ciskit;

namespace {

Errc parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_any_matrix(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::InvalidArgument;
}

}  // namespace

TEST(CodeFile, RoundTrip) {
  const auto m = BitMatrix::from_strings({"100011", "010101", "001111"});
  std::ostringstream out;
  write_binary_matrix(out, m);
  EXPECT_EQ(out.str(), "bin 3 6\n100011\n010101\n001111\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_binary_matrix(in), m);
}

TEST(CodeFile, Rejects) {
  EXPECT_EQ(parse_error("bin 2 3\n101\n"), Errc::Parse);
  EXPECT_EQ(parse_error("bin 1 3\n1021\n"), Errc::Parse);
  EXPECT_EQ(parse_error("bin 1 3\n10a\n"), Errc::Parse);
  EXPECT_EQ(parse_error("matrix 1 3\n101\n"), Errc::Parse);
  EXPECT_EQ(parse_error("z4 1 2\n1 4\n"), Errc::Parse);
  EXPECT_EQ(parse_error("z4 1 2\n1\n"), Errc::Parse);
}

TEST(CodeFile, DataFiles) {
  const auto m = load_binary_matrix(oracle::data_path("len34.txt"));
  EXPECT_EQ(m.rows(), 17u);
  EXPECT_EQ(m.cols(), 34u);
  EXPECT_THROW(load_binary_matrix(oracle::data_path("missing.txt")), Error);
}

TEST(Z4File, RoundTrip) {
  const auto m = octacode().generator();
  std::ostringstream out;
  write_z4_matrix(out, m);
  EXPECT_EQ(out.str().rfind("z4 4 8\n", 0), 0u);
  std::istringstream in(out.str());
  auto any = read_any_matrix(in);
  ASSERT_TRUE(std::holds_alternative<Z4Matrix>(any));
  EXPECT_EQ(std::get<Z4Matrix>(any), m);
}

TEST(Sbox, RoundTrip) {
  const PermutationTable f(3, {3, 7, 0, 1, 2, 6, 5, 4});
  std::ostringstream out;
  write_sbox(out, f);
  EXPECT_EQ(out.str(), "n=3\n3\n7\n0\n1\n2\n6\n5\n4\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_sbox(in), f);
  std::istringstream bad("n=2\n0\n1\n1\n3\n");
  EXPECT_THROW(read_sbox(bad), Error);
}

TEST(Hex, RowsBigEndian) {
  const auto m = BitMatrix::from_strings({"100011", "010101"});
  EXPECT_EQ(rows_to_hex(m), "23,15");
  EXPECT_EQ(rows_from_hex("23,15", 6), m);
  EXPECT_THROW(rows_from_hex("2g", 6), Error);
  EXPECT_THROW(rows_from_hex("ff", 6), Error);
}
