#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qhall/cartan.hpp"
#include "qhall/error.hpp"
#include "qhall/quiver_io.hpp"

using namespace qhall;

namespace {

std::string data(const std::string& name) { return std::string(QHALL_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CartanMatrix cm(std::vector<std::vector<long>> rows) { return CartanMatrix(IntMatrix::from_rows(rows)); }

}  // namespace

TEST(Cartan, RejectsInvalidMatrices) {
  EXPECT_THROW(cm({{3}}), Error);
  EXPECT_THROW(cm({{2, 1}, {-1, 2}}), Error);
  EXPECT_THROW(cm({{2, -1}, {0, 2}}), Error);
  // Not symmetrizable: the cycle product condition fails.
  EXPECT_THROW(cm({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), Error);
}

TEST(Cartan, Symmetrizers) {
  EXPECT_EQ(cm({{2, -1}, {-1, 2}}).symmetrizer(), (std::vector<long>{1, 1}));
  // B2 with a_12 = -1, a_21 = -2: d_1 a_12 = d_2 a_21 gives d = (2, 1).
  EXPECT_EQ(cm({{2, -1}, {-2, 2}}).symmetrizer(), (std::vector<long>{2, 1}));
  EXPECT_EQ(cm({{2, -3}, {-1, 2}}).symmetrizer(), (std::vector<long>{1, 3}));
}

TEST(Cartan, BlockConstructions) {
  const auto a1 = cm({{2}});
  EXPECT_EQ(c_pm(a1).entries(), IntMatrix::from_rows({{2, -2}, {-2, 2}}));
  EXPECT_EQ(c_2n(a1, 3).entries(), IntMatrix::from_rows({{2, -6}, {-6, 2}}));
  EXPECT_EQ(c_pm(a1).ids(), (std::vector<std::string>{"+×1", "-×1"}));
  const auto a2 = cm({{2, -1}, {-1, 2}});
  EXPECT_EQ(c_pm(a2).entries(), IntMatrix::from_rows({{2, -1, -2, 0}, {-1, 2, 0, -2}, {-2, 0, 2, -1}, {0, -2, -1, 2}}));
}

TEST(Cartan, GraphRoundTrip) {
  for (const auto& rows : std::vector<std::vector<std::vector<long>>>{
           {{2}}, {{2, -1}, {-1, 2}}, {{2, -1}, {-2, 2}}, {{2, -2}, {-2, 2}}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}) {
    const auto c = cm(rows);
    EXPECT_EQ(cartan_from_graph(graph_from_cartan(c)), c);
  }
}

TEST(Cartan, PmQuiverCommutesWithCartan) {
  for (const char* name : {"a1.json", "a2.json", "a3.json", "b2.json", "kronecker.json"}) {
    const auto q = load_quiver(data(name));
    EXPECT_EQ(cartan_from_graph(pm_quiver(q).graph()).entries(), c_pm(cartan_from_graph(q.graph())).entries()) << name;
  }
}

TEST(Cartan, RandomSymmetrizableMatrices) {
  std::mt19937 rng(3);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<long> d(static_cast<std::size_t>(n));
    for (auto& x : d) x = 1 + static_cast<long>(rng() % 3);
    // Build a_ij = -d_j * w_ij / g with symmetric w so d_i a_ij = d_j a_ji.
    IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      a(i, i) = 2;
      for (int j = i + 1; j < n; ++j) {
        const long w = static_cast<long>(rng() % 3);
        a(i, j) = -w * d[static_cast<std::size_t>(j)];
        a(j, i) = -w * d[static_cast<std::size_t>(i)];
      }
    }
    const CartanMatrix c(a);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_EQ(c.symmetrizer()[i] * a(i, j), c.symmetrizer()[j] * a(j, i));
    }
    EXPECT_EQ(c_pm(c), c_2n(c, 1));
  }
}

TEST(Cartan, ProductQuiverShape) {
  const auto a2 = load_quiver(data("a2.json"));
  const auto pm = pm_quiver(a2);
  EXPECT_EQ(pm.graph().ids, (std::vector<std::string>{"+×1", "+×2", "-×1", "-×2"}));
  EXPECT_EQ(pm.arrows().size(), 4u);
  EXPECT_TRUE(pm.acyclic());
}

TEST(Cartan, BorcherdsFromForm) {
  // Symmetric form of A2 gives back A2.
  const auto b = borcherds_from_form({{"1", 2, true}, {"2", 2, true}}, IntMatrix::from_rows({{2, -1}, {-1, 2}}));
  EXPECT_EQ(b.entries, IntMatrix::from_rows({{2, -1}, {-1, 2}}));
  EXPECT_THROW(borcherds_from_form({{"1", 4, true}, {"2", 2, true}}, IntMatrix::from_rows({{4, -1}, {-1, 2}})), Error);
  // An imaginary index keeps its (nonpositive) pairing.
  const auto im = borcherds_from_form({{"1", 2, true}, {"j", -2, false}}, IntMatrix::from_rows({{2, -2}, {-2, -2}}));
  EXPECT_EQ(im.entries, IntMatrix::from_rows({{2, -2}, {-2, -2}}));
}

TEST(QuiverIo, RoundTripIsByteIdentical) {
  for (const char* name : {"a1.json", "a2.json", "a3.json", "b2.json", "kronecker.json", "a1pm.json"}) {
    const std::string text = slurp(data(name));
    EXPECT_EQ(dump_canonical(quiver_to_json(load_quiver(data(name)))), text) << name;
  }
  EXPECT_EQ(quiver_to_json(pm_quiver(load_quiver(data("a1.json")))), nlohmann::json::parse(slurp(data("a1pm.json"))));
}

TEST(QuiverIo, MalformedInput) {
  EXPECT_THROW(quiver_from_json(nlohmann::json::parse(R"({"arrows": []})")), Error);
  EXPECT_THROW(quiver_from_json(nlohmann::json::parse(R"({"vertices":[{"id":"1","d":1},{"id":"2","d":1}],"arrows":[]})")), Error);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse("[1,2,3]")), Error);
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse("[2]")), IntMatrix::from_rows({{2}}));
}
