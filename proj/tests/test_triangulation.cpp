#include "sixj/error.hpp"
#include "sixj/triangulation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sixj;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

std::vector<Tetrahedron> sorted_tets(const Triangulation& t) {
  auto v = t.tetrahedra();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("pentachoron boundary") {
  const Triangulation p = pentachoron_boundary();
  CHECK(p.vertex_count() == 5);
  CHECK(p.edge_count() == 10);
  CHECK(p.face_count() == 10);
  CHECK(p.tet_count() == 5);
  CHECK(p.euler_characteristic() == 0);
  CHECK(p.tetrahedra()[0] == Tetrahedron{0, 1, 2, 3});
  for (const auto& f : p.faces()) CHECK(p.tets_containing(f).size() == 2);
  CHECK(p.has_edge(0, 4));
  CHECK(p.edge_index(4, 0) == p.edge_index(0, 4));
  CHECK(kind_of([&] { p.edge_index(0, 7); }) == ErrorKind::kIndex);
}

TEST_CASE("fixtures match the generated complexes") {
  const Triangulation p = load_triangulation_file(testing::data_path("s3_pentachoron.tri"));
  const Triangulation s = load_triangulation_file(testing::data_path("s3_subdivided.tri"));
  const Triangulation f = load_triangulation_file(testing::data_path("s3_flipped.tri"));
  CHECK(sorted_tets(p) == sorted_tets(pentachoron_boundary()));
  const Triangulation s2 = pachner_14(pentachoron_boundary(), 0);
  CHECK(sorted_tets(s) == sorted_tets(s2));
  CHECK(sorted_tets(f) == sorted_tets(pachner_23(s2, {0, 1, 2})));
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 14);
  CHECK(s.tet_count() == 8);
  CHECK(f.edge_count() == 15);
  CHECK(f.tet_count() == 9);
  CHECK(f.has_edge(4, 5));
}

TEST_CASE("validation") {
  auto tets = pentachoron_boundary().tetrahedra();
  tets.push_back({0, 1, 2, 5});
  CHECK(kind_of([&] { Triangulation{tets}; }) == ErrorKind::kNonClosed);

  // two pentachora glued at a single vertex: chi = -1
  const Triangulation p = pentachoron_boundary();
  std::vector<Tetrahedron> wedge = p.tetrahedra();
  for (auto t : p.tetrahedra()) {
    for (auto& v : t) v = v == 0 ? 0 : v + 4;
    wedge.push_back(t);
  }
  CHECK(kind_of([&] { Triangulation{wedge}; }) == ErrorKind::kEulerCharacteristic);

  CHECK(kind_of([] { Triangulation({{0, 0, 1, 2}}); }) == ErrorKind::kInvalidTriangulation);
  auto dup = pentachoron_boundary().tetrahedra();
  dup.push_back({3, 2, 1, 0});
  CHECK(kind_of([&] { Triangulation{dup}; }) == ErrorKind::kInvalidTriangulation);
}

TEST_CASE("parse errors") {
  const char* bad[] = {
      "",
      "1 2 3 4\n",
      "tets 2\n0 1 2 3\n",
      "tets 1\n0 1 2\n",
      "tets 1\n0 1 2 x\n",
      "tets 1\n0 1 2 4294967296\n",
      "tets 1\n0 1 2 -3\n",
      "tets 5\n1 2 3 4\n0 2 3 4\n0 1 3 4\n0 1 2 4\n0 1 2 3\n0 1 2 3\n",
      "tets five\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(kind_of([&] { load_triangulation(text); }) == ErrorKind::kParse);
  }
  CHECK(kind_of([] { load_triangulation_file("/nonexistent/file.tri"); }) == ErrorKind::kIo);
}

TEST_CASE("comments and whitespace") {
  const Triangulation t = load_triangulation(
      "# header\n\n tets   5  # count\n1 2 3 4\n0 2 3 4\n  0 1 3 4\n0 1 2 4 # last but one\n0 1 2 3\n");
  CHECK(t.tet_count() == 5);
}

TEST_CASE("text round trip") {
  const Triangulation f = load_triangulation_file(testing::data_path("s3_flipped.tri"));
  const Triangulation again = load_triangulation(f.to_text());
  CHECK(again.tetrahedra() == f.tetrahedra());
}

TEST_CASE("Pachner moves") {
  const Triangulation p = pentachoron_boundary();
  const Triangulation s = pachner_14(p, 0);
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 14);
  CHECK(s.tet_count() == 8);
  CHECK(s.euler_characteristic() == 0);
  CHECK(kind_of([&] { pachner_14(p, 5); }) == ErrorKind::kIndex);

  const auto flippable = flippable_faces(s);
  CHECK(flippable.size() == 4);
  CHECK(std::is_sorted(flippable.begin(), flippable.end()));
  const Triangulation f = pachner_23(s, flippable.front());
  CHECK(f.edge_count() == 15);
  CHECK(f.tet_count() == 9);

  // every face of the pentachoron has apexes joined by an edge already
  CHECK(flippable_faces(p).empty());
  CHECK(kind_of([&] { pachner_23(p, {0, 1, 2}); }) == ErrorKind::kFaceNotFlippable);
  CHECK(kind_of([&] { pachner_23(p, {0, 1, 7}); }) == ErrorKind::kFaceNotFlippable);
}

TEST_CASE("random move sequences keep the complex closed") {
  std::mt19937_64 rng(0x5eed41);
  Triangulation t = pentachoron_boundary();
  for (int step = 0; step < 20; ++step) {
    const auto faces = flippable_faces(t);
    if (!faces.empty() && rng() % 2) {
      t = pachner_23(t, faces[rng() % faces.size()]);
    } else {
      t = pachner_14(t, rng() % t.tet_count());
    }
    CHECK(t.euler_characteristic() == 0);
    for (const auto& f : t.faces()) CHECK(t.tets_containing(f).size() == 2);
  }
}
