#include "qhall/rep.hpp"

#include <map>
#include <sstream>

#include "qhall/error.hpp"

namespace qhall {

DimVec operator+(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) fail(Errc::DimMismatch, "dimension vectors of different length");
  DimVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

int total(const DimVec& d) {
  int t = 0;
  for (int x : d) t += x;
  return t;
}

int k_total(const SpeciesSpec& s, const DimVec& d) {
  int t = 0;
  for (std::size_t i = 0; i < d.size(); ++i) t += d[i] * s.degree(i);
  return t;
}

std::string to_string(const DimVec& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s;
}

DimVec parse_dimvec(const std::string& text) {
  DimVec d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      d.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::InvalidInput, "bad dimension vector '" + text + "'");
    }
  }
  if (d.empty()) fail(Errc::InvalidInput, "empty dimension vector");
  return d;
}

std::pair<int, int> arrow_shape(const SpeciesSpec& s, const DimVec& dims, std::size_t h) {
  const auto& a = s.arrows().at(h);
  return {dims.at(a.tgt) * s.degree(a.tgt), dims.at(a.src) * a.ext_degree};
}

std::size_t tuple_length(const SpeciesSpec& s, const DimVec& dims) {
  std::size_t len = 0;
  for (std::size_t h = 0; h < s.arrows().size(); ++h) {
    const auto [r, c] = arrow_shape(s, dims, h);
    len += static_cast<std::size_t>(s.arrows()[h].copies * r * c);
  }
  return len;
}

QuiverRep::QuiverRep(SpeciesPtr species, DimVec dims, std::vector<std::vector<FqMatrix>> maps)
    : species_(std::move(species)), dims_(std::move(dims)), maps_(std::move(maps)) {
  const auto& s = *species_;
  if (dims_.size() != s.size()) fail(Errc::DimMismatch, "dimension vector length differs from vertex count");
  for (int x : dims_) {
    if (x < 0) fail(Errc::InvalidInput, "negative dimension");
  }
  if (maps_.size() != s.arrows().size()) fail(Errc::DimMismatch, "wrong number of arrow maps");
  const auto& f = s.field();
  for (std::size_t h = 0; h < maps_.size(); ++h) {
    const auto& as = s.arrows()[h];
    if (maps_[h].size() != static_cast<std::size_t>(as.copies)) fail(Errc::DimMismatch, "wrong number of bimodule copies");
    const auto [r, c] = arrow_shape(s, dims_, h);
    const FqMatrix jt = s.vertex_structure(as.tgt, dims_[as.tgt]);
    const FqMatrix th = s.arrow_theta(h, dims_[as.src]);
    for (const auto& phi : maps_[h]) {
      if (phi.rows() != r || phi.cols() != c) fail(Errc::DimMismatch, "arrow matrix has the wrong shape");
      if (mul(f, jt, phi) != mul(f, phi, th)) fail(Errc::InvalidInput, "arrow map is not linear over the target field");
    }
  }
}

QuiverRep QuiverRep::zero(SpeciesPtr species, DimVec dims) {
  return from_tuple(species, dims, std::vector<FElem>(tuple_length(*species, dims), 0));
}

QuiverRep QuiverRep::from_tuple(SpeciesPtr species, DimVec dims, const std::vector<FElem>& tuple) {
  const auto& s = *species;
  if (dims.size() != s.size()) fail(Errc::DimMismatch, "dimension vector length differs from vertex count");
  if (tuple.size() != tuple_length(s, dims)) fail(Errc::DimMismatch, "tuple length mismatch");
  std::vector<std::vector<FqMatrix>> maps;
  std::size_t pos = 0;
  for (std::size_t h = 0; h < s.arrows().size(); ++h) {
    const auto [r, c] = arrow_shape(s, dims, h);
    std::vector<FqMatrix> copies;
    for (int k = 0; k < s.arrows()[h].copies; ++k) {
      FqMatrix m(r, c);
      for (auto& x : m.data()) x = tuple[pos++];
      copies.push_back(std::move(m));
    }
    maps.push_back(std::move(copies));
  }
  return QuiverRep(std::move(species), std::move(dims), std::move(maps));
}

std::vector<FElem> QuiverRep::tuple() const {
  std::vector<FElem> t;
  for (const auto& copies : maps_) {
    for (const auto& m : copies) t.insert(t.end(), m.data().begin(), m.data().end());
  }
  return t;
}

QuiverRep simple_rep(SpeciesPtr species, std::size_t vertex) {
  DimVec d(species->size(), 0);
  d.at(vertex) = 1;
  return QuiverRep::zero(std::move(species), d);
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.species_ptr() != b.species_ptr()) fail(Errc::InvalidInput, "direct sum across species");
  const auto& s = a.species();
  std::vector<std::vector<FqMatrix>> maps;
  for (std::size_t h = 0; h < s.arrows().size(); ++h) {
    std::vector<FqMatrix> copies;
    for (int c = 0; c < s.arrows()[h].copies; ++c) {
      const auto& x = a.map(h, c);
      const auto& y = b.map(h, c);
      FqMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
      m.set_block(0, 0, x);
      m.set_block(x.rows(), x.cols(), y);
      copies.push_back(std::move(m));
    }
    maps.push_back(std::move(copies));
  }
  return QuiverRep(a.species_ptr(), a.dims() + b.dims(), std::move(maps));
}

std::strong_ordering IsoClassId::operator<=>(const IsoClassId& o) const {
  if (auto c = total(dims) <=> total(o.dims); c != 0) return c;
  if (auto c = dims <=> o.dims; c != 0) return c;
  return canonical <=> o.canonical;
}

std::string IsoClassId::to_string() const {
  static const char* hex = "0123456789abcdef";
  std::string s = qhall::to_string(dims) + ":";
  for (unsigned char ch : canonical) {
    s += hex[ch >> 4];
    s += hex[ch & 15];
  }
  return s;
}

IsoClassId IsoClassId::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::InvalidInput, "class id needs the form dims:hex");
  IsoClassId id;
  id.dims = parse_dimvec(text.substr(0, colon));
  const std::string hex = text.substr(colon + 1);
  if (hex.size() % 2) fail(Errc::InvalidInput, "odd-length hex in class id");
  auto nib = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    fail(Errc::InvalidInput, "bad hex digit in class id");
  };
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    id.canonical.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
  }
  return id;
}

namespace {

// Matrix of a linear map given by its action on unit vectors.
template <class Fn>
FqMatrix probe(int n_in, int n_out, Fn&& fn) {
  FqMatrix m(n_out, n_in);
  std::vector<FElem> e(static_cast<std::size_t>(n_in), 0);
  for (int k = 0; k < n_in; ++k) {
    e[static_cast<std::size_t>(k)] = 1;
    const auto out = fn(e);
    for (int r = 0; r < n_out; ++r) m(r, k) = out[static_cast<std::size_t>(r)];
    e[static_cast<std::size_t>(k)] = 0;
  }
  return m;
}

void append(std::vector<FElem>& out, const FqMatrix& m) { out.insert(out.end(), m.data().begin(), m.data().end()); }

}  // namespace

int hom_dim(const QuiverRep& m, const QuiverRep& n) {
  if (m.species_ptr() != n.species_ptr()) fail(Errc::InvalidInput, "hom between different species");
  const auto& s = m.species();
  const auto& f = s.field();
  const std::size_t nv = s.size();
  std::vector<int> offset(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) offset[i + 1] = offset[i] + n.k_dim(i) * m.k_dim(i);
  const int unknowns = offset[nv];
  if (unknowns == 0) return 0;

  std::vector<FqMatrix> jm, jn;
  for (std::size_t i = 0; i < nv; ++i) {
    jm.push_back(m.vertex_structure(i));
    jn.push_back(n.vertex_structure(i));
  }
  auto constraints = [&](const std::vector<FElem>& x) {
    std::vector<FqMatrix> fs;
    for (std::size_t i = 0; i < nv; ++i) {
      FqMatrix fi(n.k_dim(i), m.k_dim(i));
      std::copy(x.begin() + offset[i], x.begin() + offset[i + 1], fi.data().begin());
      fs.push_back(std::move(fi));
    }
    std::vector<FElem> out;
    for (std::size_t i = 0; i < nv; ++i) append(out, sub(f, mul(f, jn[i], fs[i]), mul(f, fs[i], jm[i])));
    for (std::size_t h = 0; h < s.arrows().size(); ++h) {
      const auto& as = s.arrows()[h];
      const FqMatrix lifted = s.lift(h, fs[as.src]);
      for (int c = 0; c < as.copies; ++c) {
        append(out, sub(f, mul(f, fs[as.tgt], m.map(h, c)), mul(f, n.map(h, c), lifted)));
      }
    }
    return out;
  };
  const auto n_out = static_cast<int>(constraints(std::vector<FElem>(static_cast<std::size_t>(unknowns), 0)).size());
  const FqMatrix sys = probe(unknowns, n_out, constraints);
  return unknowns - rank(f, sys);
}

long euler_form(const SpeciesSpec& s, const DimVec& a, const DimVec& b) {
  if (a.size() != s.size() || b.size() != s.size()) fail(Errc::DimMismatch, "dimension vector length");
  long e = 0;
  for (std::size_t i = 0; i < s.size(); ++i) e += static_cast<long>(a[i]) * b[i] * s.degree(i);
  for (const auto& as : s.arrows()) {
    e -= static_cast<long>(a[as.src]) * b[as.tgt] * as.copies * as.ext_degree;
  }
  return e;
}

int ext_dim(const QuiverRep& m, const QuiverRep& n) {
  const long e = hom_dim(m, n) - euler_form(m.species(), m.dims(), n.dims());
  if (e < 0) fail(Errc::NegativeExt, "negative Ext dimension " + std::to_string(e));
  return static_cast<int>(e);
}

mpz_class ext_self_card(const QuiverRep& m) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m.species().q()), static_cast<unsigned long>(ext_dim(m, m)));
  return r;
}

namespace {

struct Operator {
  std::size_t from;
  std::size_t to;
  FqMatrix mat;
};

struct SubspaceData {
  Span span;
  std::vector<FElem> key;
};

std::vector<FElem> key_of(const FiniteField& f, const Span& s) {
  std::vector<FElem> k;
  k.push_back(static_cast<FElem>(s.rank()));
  append(k, s.basis(f));
  return k;
}

}  // namespace

std::vector<Submodule> submodules(const QuiverRep& m, const Caps& caps) {
  const auto& s = m.species();
  const auto& f = s.field();
  const std::size_t nv = s.size();
  const int total_dim = m.k_total();
  if (total_dim > caps.enum_dim) {
    fail(Errc::CapExceeded, "submodule enumeration at k-dimension " + std::to_string(total_dim) + " exceeds cap " +
                                std::to_string(caps.enum_dim));
  }
  std::vector<int> off(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) off[i + 1] = off[i] + m.k_dim(i);

  std::vector<Operator> ops;
  for (std::size_t i = 0; i < nv; ++i) {
    if (s.degree(i) > 1 && m.dims()[i] > 0) ops.push_back({i, i, m.vertex_structure(i)});
  }
  for (std::size_t h = 0; h < s.arrows().size(); ++h) {
    const auto& as = s.arrows()[h];
    if (m.dims()[as.src] == 0 || m.dims()[as.tgt] == 0) continue;
    for (int c = 0; c < as.copies; ++c) {
      for (int t = 0; t < as.ext_degree; ++t) {
        ops.push_back({as.src, as.tgt, mul(f, m.map(h, c), s.scalar_embed(h, m.dims()[as.src], t))});
      }
    }
  }

  // Closure of the span of `seed` (a homogeneous vector at vertex `at`).
  auto closure = [&](std::vector<FElem> seed, std::size_t at) {
    Span span(total_dim);
    std::vector<std::pair<std::size_t, std::vector<FElem>>> queue;
    auto push = [&](std::size_t i, const std::vector<FElem>& local) {
      std::vector<FElem> w(static_cast<std::size_t>(total_dim), 0);
      std::copy(local.begin(), local.end(), w.begin() + off[i]);
      if (span.insert(f, w)) queue.emplace_back(i, local);
    };
    push(at, seed);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto [i, v] = queue[k];
      for (const auto& op : ops) {
        if (op.from == i) push(op.to, apply(f, op.mat, v));
      }
    }
    return span;
  };

  // Distinct cyclic submodules generated by homogeneous vectors.
  std::map<std::vector<FElem>, Span> cyclic;
  const long q = s.q();
  for (std::size_t i = 0; i < nv; ++i) {
    const int n = m.k_dim(i);
    long count = 1;
    for (int k = 0; k < n; ++k) count *= q;
    for (long code = 1; code < count; ++code) {
      std::vector<FElem> v(static_cast<std::size_t>(n));
      long c = code;
      for (int k = 0; k < n; ++k) {
        v[static_cast<std::size_t>(k)] = static_cast<FElem>(c % q);
        c /= q;
      }
      // Only vectors whose leading nonzero entry is 1: scalar multiples span the same closure.
      int lead = n - 1;
      while (v[static_cast<std::size_t>(lead)] == 0) --lead;
      if (v[static_cast<std::size_t>(lead)] != 1) continue;
      Span sp = closure(std::move(v), i);
      auto key = key_of(f, sp);
      cyclic.emplace(std::move(key), std::move(sp));
    }
  }

  std::vector<SubspaceData> found;
  std::map<std::vector<FElem>, std::size_t> seen;
  {
    Span zero(total_dim);
    auto key = key_of(f, zero);
    seen.emplace(key, 0);
    found.push_back({std::move(zero), std::move(key)});
  }
  std::vector<FqMatrix> cyclic_bases;
  for (const auto& [key, sp] : cyclic) cyclic_bases.push_back(sp.basis(f));
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& cb : cyclic_bases) {
      Span sum = found[k].span;
      bool grew = false;
      for (int r = 0; r < cb.rows(); ++r) grew = sum.insert(f, cb.row(r)) || grew;
      if (!grew) continue;
      auto key = key_of(f, sum);
      if (seen.count(key)) continue;
      seen.emplace(key, found.size());
      found.push_back({std::move(sum), std::move(key)});
      if (found.size() > caps.max_submodules) {
        fail(Errc::CapExceeded, "more than " + std::to_string(caps.max_submodules) + " submodules");
      }
    }
  }

  std::vector<Submodule> out;
  out.reserve(found.size());
  for (const auto& [key, index] : seen) {
    const Span& span = found[index].span;
    const FqMatrix basis = span.basis(f);
    Submodule sm{QuiverRep::zero(m.species_ptr(), m.dims()), QuiverRep::zero(m.species_ptr(), m.dims()), {}};
    DimVec sub_dims(nv, 0), quo_dims(nv, 0);
    std::vector<FqMatrix> change;  // P_i, columns = adapted k-basis of V_i
    std::vector<FqMatrix> change_inv;
    for (std::size_t i = 0; i < nv; ++i) {
      const int n = m.k_dim(i);
      const int d = s.degree(i);
      const FqMatrix j = m.vertex_structure(i);
      std::vector<std::vector<FElem>> local_rows;
      for (int r = 0; r < basis.rows(); ++r) {
        std::vector<FElem> w(basis.data().begin() + r * total_dim + off[i], basis.data().begin() + r * total_dim + off[i + 1]);
        bool nz = false;
        for (auto x : w) nz = nz || x != 0;
        if (nz) local_rows.push_back(std::move(w));
      }
      sm.basis.push_back(from_rows(local_rows, n));
      Span acc(n);
      std::vector<std::vector<FElem>> cols;
      int chosen = 0;
      auto take = [&](std::vector<FElem> u) {
        if (acc.contains(f, u)) return false;
        for (int t = 0; t < d; ++t) {
          acc.insert(f, u);
          cols.push_back(u);
          u = apply(f, j, u);
        }
        return true;
      };
      for (const auto& u : local_rows) chosen += take(u) ? 1 : 0;
      sub_dims[i] = chosen;
      for (int r = 0; r < m.dims()[i]; ++r) {
        std::vector<FElem> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(r * d)] = 1;
        take(std::move(e));
      }
      quo_dims[i] = m.dims()[i] - chosen;
      const FqMatrix p = from_rows(cols, n).transpose();
      auto inv = inverse(f, p);
      if (!inv) fail(Errc::Internal, "adapted basis is singular");
      change.push_back(p);
      change_inv.push_back(*inv);
    }
    std::vector<std::vector<FqMatrix>> sub_maps, quo_maps;
    for (std::size_t h = 0; h < s.arrows().size(); ++h) {
      const auto& as = s.arrows()[h];
      const FqMatrix lifted = s.lift(h, change[as.src]);
      const int rt = sub_dims[as.tgt] * s.degree(as.tgt);
      const int cs = sub_dims[as.src] * as.ext_degree;
      std::vector<FqMatrix> sc, qc;
      for (int c = 0; c < as.copies; ++c) {
        const FqMatrix phi = mul(f, mul(f, change_inv[as.tgt], m.map(h, c)), lifted);
        if (!phi.block(rt, 0, phi.rows() - rt, cs).is_zero()) fail(Errc::Internal, "submodule is not closed");
        sc.push_back(phi.block(0, 0, rt, cs));
        qc.push_back(phi.block(rt, cs, phi.rows() - rt, phi.cols() - cs));
      }
      sub_maps.push_back(std::move(sc));
      quo_maps.push_back(std::move(qc));
    }
    sm.module = QuiverRep(m.species_ptr(), sub_dims, std::move(sub_maps));
    sm.quotient = QuiverRep(m.species_ptr(), quo_dims, std::move(quo_maps));
    out.push_back(std::move(sm));
  }
  return out;
}

}  // namespace qhall
