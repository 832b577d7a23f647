#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "stabur/errors.hpp"
#include "stabur/io.hpp"

using namespace stabur;

TEST(InputDetection, GraphVersusGroup) {
  EXPECT_EQ(detect_input_kind("# header\n\n4\n0 1\n"), InputKind::kGraph);
  EXPECT_EQ(detect_input_kind("+XX\n+ZZ\n"), InputKind::kGroup);
  EXPECT_EQ(detect_input_kind("  # only comments\n-YX\n"), InputKind::kGroup);
}

TEST(GeneratorList, ParsesWithCommentsAndBlanks) {
  const auto gens = parse_generator_list("# bell\n\n+XX   # first\n  -ZZ\n");
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].str(), "+XX");
  EXPECT_EQ(gens[1].str(), "-ZZ");
  const auto g = parse_group("+XX\n-ZZ\n");
  EXPECT_EQ(format_generator_list(g), "+XX\n-ZZ\n");
}

TEST(GeneratorList, ErrorsCarryLineNumbers) {
  try {
    parse_generator_list("+XX\n\n+XQ\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u);
  }
  EXPECT_THROW(parse_generator_list("# nothing\n"), ParseError);
  EXPECT_THROW(parse_group("+XX\n+ZI\n"), ValidationError);
}

TEST(GraphFile, ParsesAndFormats) {
  const Graph g = parse_graph("# path\n3\n0 1\n\n1 2  # tail\n");
  EXPECT_EQ(g, Graph::path(3));
  EXPECT_EQ(format_graph(g), "3\n0 1\n1 2\n");
  EXPECT_EQ(parse_graph(format_graph(Graph::complete(5))), Graph::complete(5));
}

TEST(GraphFile, Errors) {
  try {
    parse_graph("3\n0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_graph("three\n"), ParseError);
  EXPECT_THROW(parse_graph("3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(Formatting, BitStringsAndReals) {
  EXPECT_EQ(bit_string(0b0110, 4), "0110");
  EXPECT_EQ(bit_string(1, 3), "100");
  EXPECT_EQ(format_real(0.0), "0");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(2.0), "2");
}

TEST(Formatting, AmplitudeCsv) {
  const auto table = amplitude_transform(Graph::from_edges(2, {{0, 1}}));
  EXPECT_EQ(amplitude_csv(table),
            "y,numerator,log2_den,sign\n00,1,1,1\n10,1,1,1\n01,1,1,1\n11,1,1,-1\n");
}

TEST(Files, ReadTextFile) {
  const auto path = std::filesystem::temp_directory_path() / "stabur_io_test.txt";
  {
    std::ofstream out(path);
    out << "+X\n";
  }
  EXPECT_EQ(read_text_file(path), "+X\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), Error);
}
