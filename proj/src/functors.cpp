#include "affq/functors.hpp"

#include <algorithm>

namespace affq {

std::string module_class_name(ModuleClass c) {
  switch (c) {
    case ModuleClass::preprojective: return "preprojective";
    case ModuleClass::regular_homogeneous: return "regular-homogeneous";
    case ModuleClass::regular_inhomogeneous: return "regular-inhomogeneous";
    case ModuleClass::preinjective: return "preinjective";
  }
  return "?";
}

Representation simple_rep(const Quiver& q, const Field& f, int i) {
  if (i < 0 || i >= q.n()) throw ParseError("vertex index out of range");
  Representation m = zero_rep(q, f);
  m.dims[i] = 1;
  for (std::size_t w = 0; w < q.arrows.size(); ++w) {
    const auto& a = q.arrows[w];
    m.maps[w] = Matrix(f, static_cast<int>(m.dims[a.head]), static_cast<int>(m.dims[a.tail]));
  }
  return m;
}

Representation reflection_plus(const Representation& m, int i) {
  const Quiver& q = m.quiver;
  if (!q.is_sink(i)) throw ParseError("reflection_plus needs a sink");
  std::vector<int> in_arrows;
  std::vector<int> off;
  int stacked = 0;
  for (int w = 0; w < static_cast<int>(q.arrows.size()); ++w)
    if (q.arrows[w].head == i) {
      in_arrows.push_back(w);
      off.push_back(stacked);
      stacked += static_cast<int>(m.dims[q.arrows[w].tail]);
    }
  Matrix collect(m.field, static_cast<int>(m.dims[i]), stacked);
  for (std::size_t k = 0; k < in_arrows.size(); ++k) {
    const Matrix& x = m.maps[in_arrows[k]];
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) collect.set(r, off[k] + c, x.get(r, c));
  }
  const Matrix kernel = collect.kernel_basis();

  Representation out;
  out.quiver = reflect_quiver(q, i);
  out.field = m.field;
  out.dims = m.dims;
  out.dims[i] = kernel.cols();
  out.maps = m.maps;
  for (std::size_t k = 0; k < in_arrows.size(); ++k) {
    const int w = in_arrows[k];
    const int t = q.arrows[w].tail;
    out.maps[w] = kernel.submatrix(off[k], 0, static_cast<int>(m.dims[t]), kernel.cols());
  }
  out.validate();
  return out;
}

Representation reflection_minus(const Representation& m, int i) {
  const Quiver& q = m.quiver;
  if (!q.is_source(i)) throw ParseError("reflection_minus needs a source");
  std::vector<int> out_arrows;
  std::vector<int> off;
  int stacked = 0;
  for (int w = 0; w < static_cast<int>(q.arrows.size()); ++w)
    if (q.arrows[w].tail == i) {
      out_arrows.push_back(w);
      off.push_back(stacked);
      stacked += static_cast<int>(m.dims[q.arrows[w].head]);
    }
  Matrix spread(m.field, stacked, static_cast<int>(m.dims[i]));
  for (std::size_t k = 0; k < out_arrows.size(); ++k) {
    const Matrix& x = m.maps[out_arrows[k]];
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) spread.set(off[k] + r, c, x.get(r, c));
  }
  const Matrix proj = spread.cokernel_projection();

  Representation out;
  out.quiver = reflect_quiver(q, i);
  out.field = m.field;
  out.dims = m.dims;
  out.dims[i] = proj.rows();
  out.maps = m.maps;
  for (std::size_t k = 0; k < out_arrows.size(); ++k) {
    const int w = out_arrows[k];
    const int h = q.arrows[w].head;
    out.maps[w] = proj.submatrix(0, off[k], proj.rows(), static_cast<int>(m.dims[h]));
  }
  out.validate();
  return out;
}

Representation coxeter_plus(const Representation& m) {
  const auto seq = admissible_sink_sequence(m.quiver);
  Representation cur = m;
  for (int i : seq) cur = reflection_plus(cur, i);
  if (cur.quiver != m.quiver) throw InternalError("Coxeter composite left the quiver");
  return cur;
}

Representation coxeter_minus(const Representation& m) {
  auto seq = admissible_sink_sequence(m.quiver);
  std::reverse(seq.begin(), seq.end());  // reversed sink sequence = source sequence
  Representation cur = m;
  for (int i : seq) cur = reflection_minus(cur, i);
  if (cur.quiver != m.quiver) throw InternalError("Coxeter composite left the quiver");
  return cur;
}

Representation projective_rep(const Quiver& q, const Field& f, int v) {
  const auto seq = admissible_sink_sequence(q);
  const int r =
      static_cast<int>(std::find(seq.begin(), seq.end(), v) - seq.begin());
  // quiver chain Q_k = reflect at seq[0..k-1]
  std::vector<Quiver> chain = {q};
  for (int k = 0; k < r; ++k) chain.push_back(reflect_quiver(chain.back(), seq[k]));
  Representation cur = simple_rep(chain[r], f, v);
  for (int k = r - 1; k >= 0; --k) cur = reflection_minus(cur, seq[k]);
  if (cur.quiver != q) throw InternalError("projective construction left the quiver");
  return cur;
}

Representation injective_rep(const Quiver& q, const Field& f, int v) {
  const auto seq = admissible_sink_sequence(q);
  const int r =
      static_cast<int>(std::find(seq.begin(), seq.end(), v) - seq.begin());
  std::vector<Quiver> chain = {q};
  for (int k = 0; k <= r; ++k) chain.push_back(reflect_quiver(chain.back(), seq[k]));
  Representation cur = simple_rep(chain[r + 1], f, v);
  for (int k = r + 1; k < static_cast<int>(seq.size()); ++k) cur = reflection_plus(cur, seq[k]);
  if (cur.quiver != q) throw InternalError("injective construction left the quiver");
  return cur;
}

}  // namespace affq
