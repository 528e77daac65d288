#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sixj {

using VertexId = std::uint32_t;
using Edge = std::array<VertexId, 2>;
using Face = std::array<VertexId, 3>;
using Tetrahedron = std::array<VertexId, 4>;

/// Closed simplicial 3-complex given by its tetrahedra.
///
/// Text format, one record per line:
///
///   # comment
///   tets N
///   v0 v1 v2 v3      (N lines, ids are integers below 2^32)
///
/// Every face must lie in exactly two tetrahedra and the Euler
/// characteristic must vanish.
class Triangulation {
 public:
  /// Validates; throws kInvalidTriangulation, kNonClosed or
  /// kEulerCharacteristic.
  explicit Triangulation(std::vector<Tetrahedron> tetrahedra);

  /// Tetrahedra with sorted vertices, in input order.
  const std::vector<Tetrahedron>& tetrahedra() const noexcept { return tets_; }
  /// Sorted lists of distinct simplices.
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  std::size_t tet_count() const noexcept { return tets_.size(); }
  long euler_characteristic() const;

  /// Index into edges(); throws kIndex if u-v is not an edge.
  std::size_t edge_index(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// Indices of the tetrahedra containing a face (sorted vertices).
  std::vector<std::size_t> tets_containing(const Face& face) const;

  std::string to_text() const;

 private:
  std::vector<Tetrahedron> tets_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

/// Throws kParse on malformed input, then validates as the constructor.
Triangulation load_triangulation(std::string_view text);

/// Throws kIo when the file cannot be read.
Triangulation load_triangulation_file(const std::filesystem::path& path);

/// Boundary of the 4-simplex on vertices 0..4.
Triangulation pentachoron_boundary();

/// Replaces one tetrahedron by four coned from a new vertex (largest id + 1).
/// Throws kIndex for an invalid tetrahedron index.
Triangulation pachner_14(const Triangulation& t, std::size_t tet_index);

/// Replaces the two tetrahedra sharing `face` by three around the edge
/// joining their apexes. Throws kFaceNotFlippable if the face is not shared
/// by exactly two tetrahedra or the apex edge already exists.
Triangulation pachner_23(const Triangulation& t, Face face);

/// Faces admitting a 2-3 move, in sorted order.
std::vector<Face> flippable_faces(const Triangulation& t);

}  // namespace sixj
