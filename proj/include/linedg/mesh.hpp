#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace linedg {

/// One mesh face. Local faces are numbered 0..3 counter-clockwise starting
/// from the edge (v0,v1); in the reference square face 0 lies on X2=0,
/// face 1 on X1=1, face 2 on X2=1, face 3 on X1=0.
struct Face {
  int elem_l = -1;
  int face_l = -1;
  int elem_r = -1;  // -1 for boundary faces
  int face_r = -1;
  // Interior faces of a conforming CCW mesh traverse the shared edge in
  // opposite directions, so the right face parameter is 1 minus the left one.
  bool reversed = true;
  int tag = -1;  // boundary tag; -1 on interior faces

  bool boundary() const { return elem_r < 0; }
};

struct QuadMesh {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 4>> elems;  // CCW vertex indices
  std::vector<Face> faces;
  std::vector<std::array<int, 4>> elem_face;  // face index per element side

  int num_elems() const { return static_cast<int>(elems.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_boundary_faces() const;
  double total_corner_area() const;  // straight-sided (bilinear) area
};

/// Direction (0 or 1) of the line that terminates on a local face.
inline int face_direction(int local_face) { return (local_face % 2 == 1) ? 0 : 1; }
/// 1 if the face sits at the + end (reference coordinate 1), else 0.
inline int face_is_plus_side(int local_face) { return (local_face == 1 || local_face == 2) ? 1 : 0; }
/// Local face holding the endpoint of a line in `dir` on side `side` (0=-,1=+).
inline int face_of(int dir, int side) {
  return dir == 0 ? (side ? 1 : 3) : (side ? 2 : 0);
}

/// Node indices (i + (p+1)*j) of a local face, ordered by the face parameter.
std::vector<int> face_node_indices(int p, int local_face);

/// Builds the face list and per-element face table from shared vertex pairs,
/// validating conformity and counter-clockwise orientation.
void build_faces(QuadMesh& mesh);

/// Reads the line-oriented text format: `nv ne nb`, nv vertex lines `x y`,
/// ne element lines `v0 v1 v2 v3` (0-based, CCW), nb lines `elem local_face tag`.
QuadMesh load_mesh(std::istream& in);
QuadMesh load_mesh(const std::string& path);
void save_mesh(const QuadMesh& mesh, const std::string& path);

/// Splits each quad into four by edge midpoints and centroid. Boundary tags
/// are inherited by the child faces.
QuadMesh refine_uniform(const QuadMesh& mesh);

/// Pairs boundary faces with tag_a against faces with tag_b under the given
/// translation, turning them into interior faces.
void make_periodic(QuadMesh& mesh, int tag_a, int tag_b, const Eigen::Vector2d& translation);

/// Per-element, per-direction upwinding signs for the LDG traces. The sign at
/// the minus side is always the negation of the plus side, and the two
/// elements adjacent to an interior face store opposite signs for it.
struct SwitchAssignment {
  std::vector<std::array<std::int8_t, 2>> plus_sign;  // per element, per direction

  int sign(int elem, int dir, int side) const {
    const int s = plus_sign[elem][dir];
    return side ? s : -s;
  }
  int sign_at_face(int elem, int local_face) const {
    return sign(elem, face_direction(local_face), face_is_plus_side(local_face));
  }
};

/// Assigns switches by tracing global lines of elements: faces are processed
/// in ascending index order and the first face of each untouched line gets the
/// sign +1 on its left element.
SwitchAssignment assign_switches(const QuadMesh& mesh);

/// Brute-force validation of both switch invariants; returns the number of
/// violations (0 for a correct assignment).
int count_switch_violations(const QuadMesh& mesh, const SwitchAssignment& sw);

}  // namespace linedg
