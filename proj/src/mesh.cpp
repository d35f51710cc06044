#include "linedg/mesh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "linedg/errors.hpp"

namespace linedg {

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

void check_ccw(const QuadMesh& mesh, int e) {
  const auto& q = mesh.elems[e];
  for (int c = 0; c < 4; ++c) {
    const Eigen::Vector2d& v0 = mesh.vertices[q[c]];
    const Eigen::Vector2d& v1 = mesh.vertices[q[(c + 1) % 4]];
    const Eigen::Vector2d& v3 = mesh.vertices[q[(c + 3) % 4]];
    if (cross2(v1 - v0, v3 - v0) <= 0.0)
      throw config_error("mesh: element " + std::to_string(e) +
                         " is not counter-clockwise (corner " + std::to_string(c) + ")");
  }
}

}  // namespace

int QuadMesh::num_boundary_faces() const {
  int n = 0;
  for (const auto& f : faces) n += f.boundary() ? 1 : 0;
  return n;
}

double QuadMesh::total_corner_area() const {
  double area = 0.0;
  for (const auto& q : elems) {
    const auto& a = vertices[q[0]];
    const auto& b = vertices[q[1]];
    const auto& c = vertices[q[2]];
    const auto& d = vertices[q[3]];
    area += 0.5 * (cross2(b - a, c - a) + cross2(c - a, d - a));
  }
  return area;
}

std::vector<int> face_node_indices(int p, int local_face) {
  std::vector<int> idx(p + 1);
  for (int k = 0; k <= p; ++k) {
    int i = 0, j = 0;
    switch (local_face) {
      case 0: i = k; j = 0; break;
      case 1: i = p; j = k; break;
      case 2: i = p - k; j = p; break;
      case 3: i = 0; j = p - k; break;
      default: throw std::invalid_argument("face_node_indices: bad local face");
    }
    idx[k] = i + (p + 1) * j;
  }
  return idx;
}

void build_faces(QuadMesh& mesh) {
  mesh.faces.clear();
  mesh.elem_face.assign(mesh.elems.size(), {-1, -1, -1, -1});
  for (int e = 0; e < mesh.num_elems(); ++e) check_ccw(mesh, e);

  // Edge key -> (elem, local face, directed pair) occurrences.
  struct Occ {
    int elem, lface, va, vb;
  };
  std::map<std::pair<int, int>, std::vector<Occ>> edges;
  for (int e = 0; e < mesh.num_elems(); ++e) {
    for (int f = 0; f < 4; ++f) {
      const int va = mesh.elems[e][f];
      const int vb = mesh.elems[e][(f + 1) % 4];
      edges[{std::min(va, vb), std::max(va, vb)}].push_back({e, f, va, vb});
    }
  }

  for (const auto& [key, occ] : edges) {
    if (occ.size() > 2)
      throw config_error("mesh: edge (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ") shared by " +
                         std::to_string(occ.size()) + " elements (non-conforming)");
    Face face;
    if (occ.size() == 1) {
      face.elem_l = occ[0].elem;
      face.face_l = occ[0].lface;
      face.tag = 0;
    } else {
      const Occ& a = occ[0].elem <= occ[1].elem ? occ[0] : occ[1];
      const Occ& b = occ[0].elem <= occ[1].elem ? occ[1] : occ[0];
      if (a.va == b.va)
        throw config_error("mesh: elements " + std::to_string(a.elem) + " and " +
                           std::to_string(b.elem) +
                           " traverse a shared edge in the same direction");
      face.elem_l = a.elem;
      face.face_l = a.lface;
      face.elem_r = b.elem;
      face.face_r = b.lface;
      face.reversed = true;
    }
    const int id = static_cast<int>(mesh.faces.size());
    mesh.faces.push_back(face);
    mesh.elem_face[face.elem_l][face.face_l] = id;
    if (!face.boundary()) mesh.elem_face[face.elem_r][face.face_r] = id;
  }
}

QuadMesh load_mesh(std::istream& in) {
  QuadMesh mesh;
  int nv = 0, ne = 0, nb = 0;
  if (!(in >> nv >> ne >> nb)) throw config_error("mesh: failed to read header `nv ne nb`");
  mesh.vertices.resize(nv);
  for (int i = 0; i < nv; ++i)
    if (!(in >> mesh.vertices[i].x() >> mesh.vertices[i].y()))
      throw config_error("mesh: failed to read vertex " + std::to_string(i));
  mesh.elems.resize(ne);
  for (int e = 0; e < ne; ++e) {
    for (int c = 0; c < 4; ++c) {
      if (!(in >> mesh.elems[e][c]))
        throw config_error("mesh: failed to read element " + std::to_string(e));
      if (mesh.elems[e][c] < 0 || mesh.elems[e][c] >= nv)
        throw config_error("mesh: element " + std::to_string(e) + " has vertex index out of range");
    }
  }
  build_faces(mesh);
  for (int b = 0; b < nb; ++b) {
    int e = 0, lf = 0, tag = 0;
    if (!(in >> e >> lf >> tag))
      throw config_error("mesh: failed to read boundary tag line " + std::to_string(b));
    if (e < 0 || e >= ne || lf < 0 || lf > 3)
      throw config_error("mesh: boundary tag line " + std::to_string(b) + " out of range");
    const int fid = mesh.elem_face[e][lf];
    if (!mesh.faces[fid].boundary())
      throw config_error("mesh: tagged face (" + std::to_string(e) + "," +
                         std::to_string(lf) + ") is not a boundary face");
    mesh.faces[fid].tag = tag;
  }
  return mesh;
}

QuadMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("mesh: cannot open '" + path + "'");
  return load_mesh(in);
}

void save_mesh(const QuadMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw config_error("mesh: cannot write '" + path + "'");
  out.precision(17);
  std::vector<const Face*> bfaces;
  for (const auto& f : mesh.faces)
    if (f.boundary()) bfaces.push_back(&f);
  out << mesh.num_vertices() << " " << mesh.num_elems() << " " << bfaces.size() << "\n";
  for (const auto& v : mesh.vertices) out << v.x() << " " << v.y() << "\n";
  for (const auto& q : mesh.elems)
    out << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
  for (const Face* f : bfaces) out << f->elem_l << " " << f->face_l << " " << f->tag << "\n";
}

QuadMesh refine_uniform(const QuadMesh& mesh) {
  QuadMesh out;
  out.vertices = mesh.vertices;
  std::map<std::pair<int, int>, int> edge_mid;
  auto midpoint = [&](int a, int b) {
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = edge_mid.find(key);
    if (it != edge_mid.end()) return it->second;
    const int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back(0.5 * (mesh.vertices[a] + mesh.vertices[b]));
    edge_mid.emplace(key, id);
    return id;
  };

  std::map<std::pair<int, int>, int> child_edge_tag;  // sorted child edge -> tag
  for (const auto& f : mesh.faces) {
    if (!f.boundary()) continue;
    const int va = mesh.elems[f.elem_l][f.face_l];
    const int vb = mesh.elems[f.elem_l][(f.face_l + 1) % 4];
    const int m = midpoint(va, vb);
    child_edge_tag[{std::min(va, m), std::max(va, m)}] = f.tag;
    child_edge_tag[{std::min(m, vb), std::max(m, vb)}] = f.tag;
  }

  for (const auto& q : mesh.elems) {
    const int m01 = midpoint(q[0], q[1]);
    const int m12 = midpoint(q[1], q[2]);
    const int m23 = midpoint(q[2], q[3]);
    const int m30 = midpoint(q[3], q[0]);
    const int c = static_cast<int>(out.vertices.size());
    out.vertices.push_back(0.25 * (mesh.vertices[q[0]] + mesh.vertices[q[1]] +
                                   mesh.vertices[q[2]] + mesh.vertices[q[3]]));
    out.elems.push_back({q[0], m01, c, m30});
    out.elems.push_back({m01, q[1], m12, c});
    out.elems.push_back({c, m12, q[2], m23});
    out.elems.push_back({m30, c, m23, q[3]});
  }
  build_faces(out);
  for (auto& f : out.faces) {
    if (!f.boundary()) continue;
    const int va = out.elems[f.elem_l][f.face_l];
    const int vb = out.elems[f.elem_l][(f.face_l + 1) % 4];
    auto it = child_edge_tag.find({std::min(va, vb), std::max(va, vb)});
    if (it != child_edge_tag.end()) f.tag = it->second;
  }
  return out;
}

void make_periodic(QuadMesh& mesh, int tag_a, int tag_b, const Eigen::Vector2d& translation) {
  std::vector<int> fa, fb;
  for (int i = 0; i < mesh.num_faces(); ++i) {
    if (!mesh.faces[i].boundary()) continue;
    if (mesh.faces[i].tag == tag_a) fa.push_back(i);
    if (mesh.faces[i].tag == tag_b) fb.push_back(i);
  }
  if (fa.size() != fb.size())
    throw config_error("make_periodic: tag " + std::to_string(tag_a) + " has " +
                       std::to_string(fa.size()) + " faces but tag " + std::to_string(tag_b) +
                       " has " + std::to_string(fb.size()));

  auto endpoints = [&](int fid) {
    const Face& f = mesh.faces[fid];
    const int va = mesh.elems[f.elem_l][f.face_l];
    const int vb = mesh.elems[f.elem_l][(f.face_l + 1) % 4];
    return std::make_pair(mesh.vertices[va], mesh.vertices[vb]);
  };

  double h = 0.0;
  for (int fid : fa) {
    auto [a0, a1] = endpoints(fid);
    h = std::max(h, (a1 - a0).norm());
  }
  const double tol = 1e-8 * std::max(h, translation.norm());

  std::vector<bool> used(fb.size(), false);
  std::vector<Face> merged;
  for (int ia = 0; ia < static_cast<int>(fa.size()); ++ia) {
    auto [a0, a1] = endpoints(fa[ia]);
    const Eigen::Vector2d ta0 = a0 + translation;
    const Eigen::Vector2d ta1 = a1 + translation;
    int match = -1;
    bool reversed = true;
    for (int ib = 0; ib < static_cast<int>(fb.size()); ++ib) {
      if (used[ib]) continue;
      auto [b0, b1] = endpoints(fb[ib]);
      if ((ta0 - b1).norm() < tol && (ta1 - b0).norm() < tol) {
        match = ib;
        reversed = true;
        break;
      }
      if ((ta0 - b0).norm() < tol && (ta1 - b1).norm() < tol) {
        match = ib;
        reversed = false;
        break;
      }
    }
    if (match < 0)
      throw config_error("make_periodic: no partner for face " + std::to_string(fa[ia]));
    used[match] = true;
    const Face& A = mesh.faces[fa[ia]];
    const Face& B = mesh.faces[fb[match]];
    Face f;
    f.elem_l = A.elem_l;
    f.face_l = A.face_l;
    f.elem_r = B.elem_l;
    f.face_r = B.face_l;
    f.reversed = reversed;
    f.tag = -1;
    merged.push_back(f);
  }

  // Rebuild the face list without the paired boundary faces.
  std::vector<bool> drop(mesh.num_faces(), false);
  for (int fid : fa) drop[fid] = true;
  for (int fid : fb) drop[fid] = true;
  std::vector<Face> faces;
  for (int i = 0; i < mesh.num_faces(); ++i)
    if (!drop[i]) faces.push_back(mesh.faces[i]);
  faces.insert(faces.end(), merged.begin(), merged.end());
  mesh.faces = std::move(faces);
  mesh.elem_face.assign(mesh.elems.size(), {-1, -1, -1, -1});
  for (int i = 0; i < mesh.num_faces(); ++i) {
    const Face& f = mesh.faces[i];
    mesh.elem_face[f.elem_l][f.face_l] = i;
    if (!f.boundary()) mesh.elem_face[f.elem_r][f.face_r] = i;
  }
}

SwitchAssignment assign_switches(const QuadMesh& mesh) {
  SwitchAssignment sw;
  sw.plus_sign.assign(mesh.elems.size(), {0, 0});

  // Sets the switch of (elem, dir) so that the face `lface` carries `sign`
  // on this element's side, then walks to the opposite face.
  auto set_and_cross = [&](int elem, int lface, int sign) -> std::pair<int, int> {
    const int dir = face_direction(lface);
    const int plus = face_is_plus_side(lface) ? sign : -sign;
    if (sw.plus_sign[elem][dir] != 0) {
      if (sw.plus_sign[elem][dir] != plus)
        throw std::logic_error("assign_switches: inconsistent line traversal");
      return {-1, -1};  // line already closed (cycle)
    }
    sw.plus_sign[elem][dir] = static_cast<std::int8_t>(plus);
    const int opposite = face_of(dir, face_is_plus_side(lface) ? 0 : 1);
    return {mesh.elem_face[elem][opposite], opposite};
  };

  auto other_side = [&](const Face& f, int elem, int lface) -> std::pair<int, int> {
    if (f.elem_l == elem && f.face_l == lface) return {f.elem_r, f.face_r};
    return {f.elem_l, f.face_l};
  };

  // Walks one direction of a global line, entering `elem` through `lface`
  // with the given element-side sign, until a boundary or the cycle closes.
  auto sweep = [&](int elem, int lface, int sign) {
    while (elem >= 0) {
      auto [next_fid, next_lface] = set_and_cross(elem, lface, sign);
      if (next_fid < 0) break;
      const Face& nf = mesh.faces[next_fid];
      if (nf.boundary()) break;
      const int here = -sign;  // this element's side of the far face
      auto [nbr, nbr_face] = other_side(nf, elem, next_lface);
      elem = nbr;
      lface = nbr_face;
      sign = -here;  // neighbor side carries the opposite sign
    }
  };

  for (int fid = 0; fid < mesh.num_faces(); ++fid) {
    const Face& f0 = mesh.faces[fid];
    const int dir_l = face_direction(f0.face_l);
    if (sw.plus_sign[f0.elem_l][dir_l] != 0) continue;  // line already processed

    // Seed: +1 on the left element's side of this face, then sweep both ways.
    sweep(f0.elem_l, f0.face_l, 1);
    if (!f0.boundary()) sweep(f0.elem_r, f0.face_r, -1);
  }

  // Directions never touched by any face sweep (single element strips).
  for (auto& s : sw.plus_sign) {
    if (s[0] == 0) s[0] = 1;
    if (s[1] == 0) s[1] = 1;
  }
  return sw;
}

int count_switch_violations(const QuadMesh& mesh, const SwitchAssignment& sw) {
  int bad = 0;
  for (int e = 0; e < mesh.num_elems(); ++e)
    for (int dir = 0; dir < 2; ++dir)
      if (sw.sign(e, dir, 0) != -sw.sign(e, dir, 1)) ++bad;
  for (const Face& f : mesh.faces) {
    if (f.boundary()) continue;
    if (sw.sign_at_face(f.elem_l, f.face_l) != -sw.sign_at_face(f.elem_r, f.face_r)) ++bad;
  }
  return bad;
}

}  // namespace linedg
