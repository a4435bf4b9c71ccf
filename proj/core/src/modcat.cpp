#include "qhall/modcat.hpp"

#include <algorithm>

#include "qhall/error.hpp"

namespace qhall {

struct ModuleCategory::Table {
  DimVec dims;
  int dim = 0;                      // dimension of the solution space
  std::size_t len = 0;              // tuple length
  std::vector<std::vector<FElem>> basis;  // reduced echelon rows
  std::vector<std::size_t> pivots;
  std::vector<std::uint32_t> class_of;    // by coordinate index
  std::vector<ClassInfo> classes;
};

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::string canonical_bytes(const std::vector<FElem>& tuple, long q) {
  std::string s;
  for (FElem x : tuple) {
    if (q > 256) s.push_back(static_cast<char>(x >> 8));
    s.push_back(static_cast<char>(x & 0xff));
  }
  return s;
}

mpz_class gl_order(long field_order, int n) {
  mpz_class big_q = field_order;
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), big_q.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class r = 1, qt = 1;
  for (int t = 0; t < n; ++t) {
    r *= qn - qt;
    qt *= big_q;
  }
  return r;
}

}  // namespace

ModuleCategory::ModuleCategory(SpeciesPtr species, Caps caps) : species_(std::move(species)), caps_(caps) {
  if (!species_) fail(Errc::InvalidInput, "null species");
}

ModuleCategory::~ModuleCategory() = default;

mpz_class ModuleCategory::group_order(const DimVec& d) const {
  mpz_class r = 1;
  for (std::size_t i = 0; i < d.size(); ++i) r *= gl_order(species_->vertex(i).order, d[i]);
  return r;
}

const ModuleCategory::Table& ModuleCategory::table(const DimVec& d) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(d);
    if (it != tables_.end()) return *it->second;
  }
  const auto& s = *species_;
  const auto& f = s.field();
  if (d.size() != s.size()) fail(Errc::DimMismatch, "dimension vector length differs from vertex count");
  const int kt = k_total(s, d);
  if (kt > caps_.enum_dim) {
    fail(Errc::CapExceeded, "class enumeration at k-dimension " + std::to_string(kt) + " exceeds cap " +
                                std::to_string(caps_.enum_dim));
  }
  auto t = std::make_unique<Table>();
  t->dims = d;
  t->len = tuple_length(s, d);

  // Solution space: per arrow copy, phi with J_tgt phi = phi (I ⊗ R(theta_tgt)).
  std::size_t offset = 0;
  for (std::size_t h = 0; h < s.arrows().size(); ++h) {
    const auto& as = s.arrows()[h];
    const auto [r, c] = arrow_shape(s, d, h);
    const int cells = r * c;
    FqMatrix local_basis(0, cells);
    if (cells > 0) {
      const FqMatrix jt = s.vertex_structure(as.tgt, d[as.tgt]);
      const FqMatrix th = s.arrow_theta(h, d[as.src]);
      FqMatrix sys(cells, cells);
      for (int k = 0; k < cells; ++k) {
        FqMatrix e(r, c);
        e.data()[static_cast<std::size_t>(k)] = 1;
        const FqMatrix img = sub(f, mul(f, jt, e), mul(f, e, th));
        for (int row = 0; row < cells; ++row) sys(row, k) = img.data()[static_cast<std::size_t>(row)];
      }
      local_basis = nullspace(f, sys);
    }
    for (int copy = 0; copy < as.copies; ++copy) {
      for (int b = 0; b < local_basis.rows(); ++b) {
        std::vector<FElem> v(t->len, 0);
        std::size_t piv = t->len;
        for (int k = 0; k < cells; ++k) {
          v[offset + static_cast<std::size_t>(k)] = local_basis(b, k);
          if (piv == t->len && local_basis(b, k) != 0) piv = offset + static_cast<std::size_t>(k);
        }
        t->basis.push_back(std::move(v));
        t->pivots.push_back(piv);
      }
      offset += static_cast<std::size_t>(cells);
    }
  }
  t->dim = static_cast<int>(t->basis.size());
  const long q = s.q();
  std::uint64_t count = 1;
  for (int k = 0; k < t->dim; ++k) {
    count *= static_cast<std::uint64_t>(q);
    if (count > caps_.max_tuples) {
      fail(Errc::CapExceeded, "tuple space q^" + std::to_string(t->dim) + " exceeds cap " + std::to_string(caps_.max_tuples));
    }
  }
  const int dim = t->dim;
  auto coords_of = [&](const std::vector<FElem>& tuple) {
    std::vector<FElem> c(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) c[static_cast<std::size_t>(k)] = tuple[t->pivots[static_cast<std::size_t>(k)]];
    return c;
  };
  auto tuple_of = [&](const std::vector<FElem>& c) {
    std::vector<FElem> v(t->len, 0);
    for (int k = 0; k < dim; ++k) {
      const FElem a = c[static_cast<std::size_t>(k)];
      if (a == 0) continue;
      const auto& b = t->basis[static_cast<std::size_t>(k)];
      for (std::size_t x = 0; x < v.size(); ++x) {
        if (b[x]) v[x] = f.add(v[x], f.mul(a, b[x]));
      }
    }
    return v;
  };

  // Group generators as dim x dim matrices on coordinates.
  std::vector<std::vector<FElem>> gens;
  for (std::size_t v = 0; v < s.size(); ++v) {
    const int n = d[v];
    if (n == 0) continue;
    const auto& vf = s.vertex(v);
    const int dv = vf.degree;
    std::vector<FqMatrix> gl;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (r == c) continue;
        for (const auto& a : vf.additive_basis) {
          FqMatrix g = FqMatrix::identity(n * dv);
          g.set_block(r * dv, c * dv, a);
          gl.push_back(std::move(g));
        }
      }
    }
    if (vf.primitive != FqMatrix::identity(dv)) {
      FqMatrix g = FqMatrix::identity(n * dv);
      g.set_block(0, 0, vf.primitive);
      gl.push_back(std::move(g));
    }
    for (const auto& g : gl) {
      const FqMatrix g_inv = *inverse(f, g);
      std::vector<FqMatrix> right(s.arrows().size());
      for (std::size_t h = 0; h < s.arrows().size(); ++h) {
        if (s.arrows()[h].src == v) right[h] = s.lift(h, g_inv);
      }
      std::vector<FElem> m(static_cast<std::size_t>(dim * dim), 0);
      for (int k = 0; k < dim; ++k) {
        QuiverRep rep = QuiverRep::from_tuple(species_, d, t->basis[static_cast<std::size_t>(k)]);
        std::vector<FElem> img;
        for (std::size_t h = 0; h < s.arrows().size(); ++h) {
          const auto& as = s.arrows()[h];
          for (int c = 0; c < as.copies; ++c) {
            FqMatrix phi = rep.map(h, c);
            if (as.tgt == v) phi = mul(f, g, phi);
            if (as.src == v) phi = mul(f, phi, right[h]);
            img.insert(img.end(), phi.data().begin(), phi.data().end());
          }
        }
        const auto ck = coords_of(img);
        for (int r = 0; r < dim; ++r) m[static_cast<std::size_t>(r * dim + k)] = ck[static_cast<std::size_t>(r)];
      }
      gens.push_back(std::move(m));
    }
  }

  // Orbits. Index puts coordinate 0 most significant, so index order equals
  // lexicographic order of tuples and the first index met in an orbit is its
  // canonical form.
  t->class_of.assign(count, kUnset);
  std::vector<FElem> c(static_cast<std::size_t>(dim)), c2(static_cast<std::size_t>(dim));
  auto decode = [&](std::uint64_t idx, std::vector<FElem>& out) {
    for (int k = dim - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = static_cast<FElem>(idx % static_cast<std::uint64_t>(q));
      idx /= static_cast<std::uint64_t>(q);
    }
  };
  auto encode = [&](const std::vector<FElem>& in) {
    std::uint64_t idx = 0;
    for (int k = 0; k < dim; ++k) idx = idx * static_cast<std::uint64_t>(q) + in[static_cast<std::size_t>(k)];
    return idx;
  };
  std::vector<std::uint64_t> queue;
  std::vector<std::uint64_t> orbit_sizes;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (t->class_of[start] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(orbit_sizes.size());
    queue.clear();
    queue.push_back(start);
    t->class_of[start] = cls;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      decode(queue[head], c);
      for (const auto& m : gens) {
        for (int r = 0; r < dim; ++r) {
          FElem acc = 0;
          const FElem* row = &m[static_cast<std::size_t>(r * dim)];
          for (int k = 0; k < dim; ++k) {
            if (row[k] && c[static_cast<std::size_t>(k)]) acc = f.add(acc, f.mul(row[k], c[static_cast<std::size_t>(k)]));
          }
          c2[static_cast<std::size_t>(r)] = acc;
        }
        const std::uint64_t next = encode(c2);
        if (t->class_of[next] == kUnset) {
          t->class_of[next] = cls;
          queue.push_back(next);
        }
      }
    }
    orbit_sizes.push_back(queue.size());
    decode(start, c);
    const auto tuple = tuple_of(c);
    ClassInfo ci{IsoClassId{d, canonical_bytes(tuple, q)}, QuiverRep::from_tuple(species_, d, tuple), queue.size(), 0};
    t->classes.push_back(std::move(ci));
  }
  const mpz_class g = group_order(d);
  for (auto& ci : t->classes) {
    ci.aut_order = g / mpz_class(static_cast<unsigned long>(ci.orbit_size));
    if (ci.aut_order * ci.orbit_size != g) fail(Errc::Internal, "orbit size does not divide the group order");
  }

  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = tables_.emplace(d, std::move(t));
  return *it->second;
}

const std::vector<ClassInfo>& ModuleCategory::iso_classes(const DimVec& d) const { return table(d).classes; }

IsoClassId ModuleCategory::classify(const QuiverRep& m) const {
  if (m.species_ptr() != species_) fail(Errc::InvalidInput, "module of another species");
  const Table& t = table(m.dims());
  const auto tuple = m.tuple();
  std::uint64_t idx = 0;
  for (int k = 0; k < t.dim; ++k) idx = idx * static_cast<std::uint64_t>(species_->q()) + tuple[t.pivots[static_cast<std::size_t>(k)]];
  return t.classes.at(t.class_of.at(idx)).id;
}

const ClassInfo& ModuleCategory::info(const IsoClassId& id) const {
  if (id.dims.size() != species_->size()) fail(Errc::UnknownClass, "class id " + id.to_string() + " has wrong arity");
  for (int x : id.dims) {
    if (x < 0) fail(Errc::UnknownClass, "negative dimension in class id");
  }
  const auto& cls = table(id.dims).classes;
  auto it = std::lower_bound(cls.begin(), cls.end(), id, [](const ClassInfo& c, const IsoClassId& x) { return c.id < x; });
  if (it == cls.end() || it->id != id) fail(Errc::UnknownClass, "unknown class " + id.to_string());
  return *it;
}

IsoClassId ModuleCategory::zero_class() const { return iso_classes(DimVec(species_->size(), 0)).front().id; }

mpz_class ModuleCategory::aut_order(const QuiverRep& m) const { return info(classify(m)).aut_order; }

HallTable ModuleCategory::hall_table_from(const QuiverRep& gamma_rep) const {
  const int kt = gamma_rep.k_total();
  if (kt > caps_.canon_dim) {
    fail(Errc::CapExceeded, "Hall numbers at k-dimension " + std::to_string(kt) + " exceed cap " +
                                std::to_string(caps_.canon_dim));
  }
  HallTable out;
  for (const auto& sm : submodules(gamma_rep, caps_)) {
    ++out[{classify(sm.quotient), classify(sm.module)}];
  }
  return out;
}

const HallTable& ModuleCategory::hall_table(const IsoClassId& gamma) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = hall_.find(gamma);
    if (it != hall_.end()) return *it->second;
  }
  auto table_ptr = std::make_unique<HallTable>(hall_table_from(info(gamma).rep));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = hall_.emplace(gamma, std::move(table_ptr));
  return *it->second;
}

std::vector<ClassInfo> iso_classes(const ModuleCategory& cat, const DimVec& d) { return cat.iso_classes(d); }

long hall_number(const ModuleCategory& cat, const IsoClassId& gamma, const IsoClassId& alpha, const IsoClassId& beta) {
  if (gamma.dims != alpha.dims + beta.dims) fail(Errc::DimMismatch, "dims(gamma) != dims(alpha) + dims(beta)");
  cat.info(alpha);
  cat.info(beta);
  const auto& t = cat.hall_table(gamma);
  auto it = t.find({alpha, beta});
  return it == t.end() ? 0 : it->second;
}

}  // namespace qhall
