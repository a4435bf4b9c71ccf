#include "qhall/species.hpp"

#include <numeric>

#include "qhall/error.hpp"

namespace qhall {

FqMatrix companion_matrix(const FiniteField& f, const FPoly& m) {
  const int d = static_cast<int>(m.size()) - 1;
  FqMatrix c(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = f.neg(m[static_cast<std::size_t>(i)]);
  return c;
}

FqMatrix poly_of_matrix(const FiniteField& f, const std::vector<FElem>& p, const FqMatrix& c) {
  const int d = c.rows();
  FqMatrix acc(d, d);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = mul(f, acc, c);
    for (int k = 0; k < d; ++k) acc(k, k) = f.add(acc(k, k), p[i]);
  }
  return acc;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<FElem> digits(long code, long q, int d) {
  std::vector<FElem> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    v[static_cast<std::size_t>(i)] = static_cast<FElem>(code % q);
    code /= q;
  }
  return v;
}

VertexField make_vertex_field(const FiniteField& f, int d) {
  VertexField vf;
  vf.degree = d;
  vf.modulus = extension_modulus(f, d);
  vf.companion = companion_matrix(f, vf.modulus);
  vf.order = ipow(f.order(), d);
  for (int t = 0; t < d; ++t) {
    std::vector<FElem> xt(static_cast<std::size_t>(t + 1), 0);
    xt[static_cast<std::size_t>(t)] = 1;
    const FqMatrix power = poly_of_matrix(f, xt, vf.companion);
    for (FElem b : f.prime_field_basis()) vf.additive_basis.push_back(scale(f, b, power));
  }
  const FqMatrix id = FqMatrix::identity(d);
  for (long code = 1; code < vf.order; ++code) {
    const FqMatrix g = poly_of_matrix(f, digits(code, f.order(), d), vf.companion);
    FqMatrix x = g;
    long ord = 1;
    while (x != id && ord < vf.order) {
      x = mul(f, x, g);
      ++ord;
    }
    if (ord == vf.order - 1) {
      vf.primitive = g;
      return vf;
    }
  }
  fail(Errc::Internal, "no primitive element found");
}

// Coordinates of the first root in L (given by companion cl) of the monic polynomial m.
std::vector<FElem> find_root(const FiniteField& f, const FqMatrix& cl, const FPoly& m, const FPoly& l_modulus) {
  const int l = cl.rows();
  if (m == l_modulus) {
    std::vector<FElem> x(static_cast<std::size_t>(l), 0);
    if (l > 1) {
      x[1] = 1;
      return x;
    }
  }
  const long count = ipow(f.order(), l);
  for (long code = 0; code < count; ++code) {
    const auto a = digits(code, f.order(), l);
    const FqMatrix ra = poly_of_matrix(f, a, cl);
    std::vector<FElem> mc(m.begin(), m.end());
    if (poly_of_matrix(f, mc, ra).is_zero()) return a;
  }
  fail(Errc::Internal, "modulus has no root in the composite field");
}

}  // namespace

SpeciesSpec::SpeciesSpec(ValuedQuiver quiver, long q) : quiver_(std::move(quiver)), field_(q) {
  if (!quiver_.acyclic()) fail(Errc::InvalidInput, "species requires an acyclic quiver");
  const auto& g = quiver_.graph();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const long d = g.d_vertex[i];
    if (d < 1 || d > 4) fail(Errc::FieldTableMiss, "vertex extension degree " + std::to_string(d) + " out of range");
    vertices_.push_back(make_vertex_field(field_, static_cast<int>(d)));
  }
  for (const Arrow& a : quiver_.arrows()) {
    ArrowSpec as;
    as.src = a.src;
    as.tgt = a.tgt;
    const long ds = g.d_vertex[a.src];
    const long dt = g.d_vertex[a.tgt];
    const long l = std::lcm(ds, dt);
    // Source-side dimension of the bimodule is d_{src,tgt} over k_src, i.e.
    // d_{src,tgt} * d_src over k; it must be a whole number of copies of L.
    const long kdim = quiver_.src_val(a) * ds;
    if (kdim % l != 0 || kdim / l < 1 || quiver_.dst_val(a) * dt != kdim) {
      fail(Errc::UnsupportedValuation, "valuation (" + std::to_string(quiver_.src_val(a)) + "," +
                                           std::to_string(quiver_.dst_val(a)) +
                                           ") is not a multiple of the composite field");
    }
    as.copies = static_cast<int>(kdim / l);
    as.ext_degree = static_cast<int>(l);
    as.modulus = extension_modulus(field_, as.ext_degree);
    const FqMatrix cl = companion_matrix(field_, as.modulus);
    for (int t = 0; t < as.ext_degree; ++t) {
      std::vector<FElem> xt(static_cast<std::size_t>(t + 1), 0);
      xt[static_cast<std::size_t>(t)] = 1;
      as.basis_mult.push_back(poly_of_matrix(field_, xt, cl));
    }
    const auto& vs = vertices_[a.src];
    const auto& vt = vertices_[a.tgt];
    const auto theta_s = find_root(field_, cl, vs.modulus, as.modulus);
    const auto theta_t = find_root(field_, cl, vt.modulus, as.modulus);
    const FqMatrix rs = poly_of_matrix(field_, theta_s, cl);
    as.tgt_theta = poly_of_matrix(field_, theta_t, cl);
    as.src_embed = FqMatrix(as.ext_degree, vs.degree);
    std::vector<FElem> e1(static_cast<std::size_t>(as.ext_degree), 0);
    e1[0] = 1;
    FqMatrix power = FqMatrix::identity(as.ext_degree);
    for (int t = 0; t < vs.degree; ++t) {
      const auto colv = apply(field_, power, e1);
      for (int r = 0; r < as.ext_degree; ++r) as.src_embed(r, t) = colv[static_cast<std::size_t>(r)];
      power = mul(field_, power, rs);
    }
    arrows_.push_back(std::move(as));
  }
}

FqMatrix SpeciesSpec::vertex_structure(std::size_t i, int n) const { return repeat_diag(vertices_.at(i).companion, n); }

FqMatrix SpeciesSpec::arrow_theta(std::size_t h, int n) const { return repeat_diag(arrows_.at(h).tgt_theta, n); }

FqMatrix SpeciesSpec::mult_matrix(std::size_t h, const std::vector<FElem>& a) const {
  const auto& as = arrows_.at(h);
  FqMatrix r(as.ext_degree, as.ext_degree);
  for (int t = 0; t < as.ext_degree; ++t) {
    const FElem c = a[static_cast<std::size_t>(t)];
    if (c != 0) r = add(field_, r, scale(field_, c, as.basis_mult[static_cast<std::size_t>(t)]));
  }
  return r;
}

FqMatrix SpeciesSpec::lift(std::size_t h, const FqMatrix& f) const {
  const auto& as = arrows_.at(h);
  const int d = vertices_[as.src].degree;
  const int l = as.ext_degree;
  const int n = f.rows() / d;
  const int m = f.cols() / d;
  FqMatrix out(n * l, m * l);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) {
      // A k_src-linear block equals p(C); its first column is p's coordinates.
      std::vector<FElem> first(static_cast<std::size_t>(d));
      bool nonzero = false;
      for (int k = 0; k < d; ++k) {
        first[static_cast<std::size_t>(k)] = f(r * d + k, c * d);
        nonzero = nonzero || first[static_cast<std::size_t>(k)] != 0;
      }
      if (!nonzero) continue;
      out.set_block(r * l, c * l, mult_matrix(h, apply(field_, as.src_embed, first)));
    }
  }
  return out;
}

FqMatrix SpeciesSpec::scalar_embed(std::size_t h, int n, int t) const {
  const auto& as = arrows_.at(h);
  return repeat_diag(mul(field_, as.basis_mult.at(static_cast<std::size_t>(t)), as.src_embed), n);
}

SpeciesPtr species_from_quiver(const ValuedQuiver& quiver, long field_order) {
  return std::make_shared<const SpeciesSpec>(quiver, field_order);
}

long tensor_algebra_dim(const SpeciesSpec& s) {
  // paths[i] = total k-dimension of tensor products along paths ending at i,
  // counted as k_i-dimension times d_i. Work with k_tgt-dimensions:
  // dim_{k_t}(M_h ⊗_{k_s} X) = dim_{k_t}(M_h) * dim_{k_s}(X).
  const auto& q = s.quiver();
  const std::size_t n = s.size();
  std::vector<long> ending(n, 1);  // the trivial path e_i has dim 1 over k_i
  // Acyclic: relax n times in arrow order.
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<long> next(n, 1);
    for (const Arrow& a : q.arrows()) next[a.tgt] += q.dst_val(a) * ending[a.src];
    ending = std::move(next);
  }
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) total += ending[i] * s.degree(i);
  return total;
}

}  // namespace qhall
