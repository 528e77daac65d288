#include "sixj/triangulation.hpp"

#include "sixj/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace sixj {
namespace {

std::array<Face, 4> faces_of(const Tetrahedron& t) {
  return {{{t[1], t[2], t[3]}, {t[0], t[2], t[3]}, {t[0], t[1], t[3]}, {t[0], t[1], t[2]}}};
}

std::string describe(const Face& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "}";
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view word, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": '" + std::string(word) + "' is not a nonnegative integer");
  }
  return value;
}

}  // namespace

Triangulation::Triangulation(std::vector<Tetrahedron> tetrahedra) : tets_(std::move(tetrahedra)) {
  if (tets_.empty()) throw Error(ErrorKind::kInvalidTriangulation, "triangulation has no tetrahedra");

  std::set<VertexId> vertices;
  std::set<Edge> edges;
  std::map<Face, int> face_count;
  std::set<Tetrahedron> seen;
  for (auto& t : tets_) {
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
      throw Error(ErrorKind::kInvalidTriangulation, "tetrahedron with a repeated vertex");
    }
    if (!seen.insert(t).second) throw Error(ErrorKind::kInvalidTriangulation, "duplicate tetrahedron");
    vertices.insert(t.begin(), t.end());
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) edges.insert({t[i], t[j]});
    }
    for (const Face& f : faces_of(t)) ++face_count[f];
  }
  for (const auto& [f, n] : face_count) {
    if (n != 2) {
      throw Error(ErrorKind::kNonClosed,
                  "face " + describe(f) + " lies in " + std::to_string(n) + " tetrahedra, expected 2");
    }
  }
  vertices_.assign(vertices.begin(), vertices.end());
  edges_.assign(edges.begin(), edges.end());
  for (const auto& [f, n] : face_count) faces_.push_back(f);

  if (euler_characteristic() != 0) {
    throw Error(ErrorKind::kEulerCharacteristic,
                "Euler characteristic is " + std::to_string(euler_characteristic()) + ", expected 0");
  }
}

long Triangulation::euler_characteristic() const {
  return long(vertices_.size()) - long(edges_.size()) + long(faces_.size()) - long(tets_.size());
}

std::size_t Triangulation::edge_index(VertexId u, VertexId v) const {
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw Error(ErrorKind::kIndex, "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return std::size_t(it - edges_.begin());
}

bool Triangulation::has_edge(VertexId u, VertexId v) const {
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::size_t> Triangulation::tets_containing(const Face& face) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tets_.size(); ++i) {
    const auto& t = tets_[i];
    if (std::includes(t.begin(), t.end(), face.begin(), face.end())) out.push_back(i);
  }
  return out;
}

std::string Triangulation::to_text() const {
  std::ostringstream out;
  out << "tets " << tets_.size() << '\n';
  for (const auto& t : tets_) out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  return out.str();
}

Triangulation load_triangulation(std::string_view text) {
  std::vector<Tetrahedron> tets;
  std::set<Tetrahedron> seen;
  std::size_t expected = 0;
  bool have_header = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!have_header) {
      if (words.size() != 2 || words[0] != "tets") {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected header 'tets N'");
      }
      const std::uint64_t n = parse_unsigned(words[1], line_no);
      if (n > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorKind::kParse, "tetrahedron count too large");
      }
      expected = std::size_t(n);
      have_header = true;
      continue;
    }
    if (tets.size() == expected) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": more than " +
                                         std::to_string(expected) + " tetrahedra");
    }
    if (words.size() != 4) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected four vertex ids");
    }
    Tetrahedron t{};
    for (std::size_t i = 0; i < 4; ++i) {
      const std::uint64_t id = parse_unsigned(words[i], line_no);
      if (id > std::numeric_limits<VertexId>::max()) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": vertex id exceeds 2^32 - 1");
      }
      t[i] = VertexId(id);
    }
    Tetrahedron key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": duplicate tetrahedron");
    }
    tets.push_back(t);
  }
  if (!have_header) throw Error(ErrorKind::kParse, "missing header 'tets N'");
  if (tets.size() != expected) {
    throw Error(ErrorKind::kParse, "expected " + std::to_string(expected) + " tetrahedra, found " +
                                       std::to_string(tets.size()));
  }
  return Triangulation(std::move(tets));
}

Triangulation load_triangulation_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  return load_triangulation(buffer.str());
}

Triangulation pentachoron_boundary() {
  std::vector<Tetrahedron> tets;
  for (VertexId skip = 5; skip-- > 0;) {
    Tetrahedron t{};
    for (VertexId v = 0, j = 0; v < 5; ++v) {
      if (v != skip) t[j++] = v;
    }
    tets.push_back(t);
  }
  return Triangulation(std::move(tets));
}

Triangulation pachner_14(const Triangulation& t, std::size_t tet_index) {
  if (tet_index >= t.tet_count()) {
    throw Error(ErrorKind::kIndex, "tetrahedron index " + std::to_string(tet_index) + " out of range");
  }
  const VertexId top = t.vertices().back();
  if (top == std::numeric_limits<VertexId>::max()) throw Error(ErrorKind::kIndex, "vertex ids exhausted");
  const VertexId cone = top + 1;

  std::vector<Tetrahedron> tets;
  for (std::size_t i = 0; i < t.tet_count(); ++i) {
    if (i != tet_index) tets.push_back(t.tetrahedra()[i]);
  }
  for (const Face& f : faces_of(t.tetrahedra()[tet_index])) tets.push_back({f[0], f[1], f[2], cone});
  return Triangulation(std::move(tets));
}

Triangulation pachner_23(const Triangulation& t, Face face) {
  std::sort(face.begin(), face.end());
  const auto owners = t.tets_containing(face);
  if (owners.size() != 2) throw Error(ErrorKind::kFaceNotFlippable, "face " + describe(face) + " is not in the complex");

  const auto apex = [&face](const Tetrahedron& tet) {
    for (VertexId v : tet) {
      if (std::find(face.begin(), face.end(), v) == face.end()) return v;
    }
    return tet[0];
  };
  const VertexId d = apex(t.tetrahedra()[owners[0]]);
  const VertexId e = apex(t.tetrahedra()[owners[1]]);
  if (d == e) throw Error(ErrorKind::kFaceNotFlippable, "apexes of face " + describe(face) + " coincide");
  if (t.has_edge(d, e)) {
    throw Error(ErrorKind::kFaceNotFlippable, "apex edge " + std::to_string(d) + "-" + std::to_string(e) +
                                                  " already exists; flipping " + describe(face) +
                                                  " would not be simplicial");
  }
  std::vector<Tetrahedron> tets;
  for (std::size_t i = 0; i < t.tet_count(); ++i) {
    if (i != owners[0] && i != owners[1]) tets.push_back(t.tetrahedra()[i]);
  }
  tets.push_back({face[0], face[1], d, e});
  tets.push_back({face[1], face[2], d, e});
  tets.push_back({face[0], face[2], d, e});
  return Triangulation(std::move(tets));
}

std::vector<Face> flippable_faces(const Triangulation& t) {
  std::vector<Face> out;
  for (const Face& f : t.faces()) {
    try {
      (void)pachner_23(t, f);
      out.push_back(f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kFaceNotFlippable) throw;
    }
  }
  return out;
}

}  // namespace sixj
