#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qhall/rep.hpp"

namespace qhall {

struct ClassInfo {
  IsoClassId id;
  QuiverRep rep;  ///< the canonical (lexicographically minimal) tuple
  std::uint64_t orbit_size = 0;
  mpz_class aut_order;
};

/// Hall numbers g^gamma_{alpha,beta} for one gamma, keyed by (alpha, beta).
using HallTable = std::map<std::pair<IsoClassId, IsoClassId>, long>;

/// Module category of a species with lazily built, cached class tables.
/// Cached values are never modified once inserted; access is thread-safe.
class ModuleCategory {
 public:
  explicit ModuleCategory(SpeciesPtr species, Caps caps = {});
  ~ModuleCategory();
  ModuleCategory(const ModuleCategory&) = delete;
  ModuleCategory& operator=(const ModuleCategory&) = delete;

  const SpeciesSpec& species() const noexcept { return *species_; }
  const SpeciesPtr& species_ptr() const noexcept { return species_; }
  const Caps& caps() const noexcept { return caps_; }

  /// Classes of dimension vector d sorted by id. Throws CapExceeded.
  const std::vector<ClassInfo>& iso_classes(const DimVec& d) const;
  IsoClassId classify(const QuiverRep& m) const;
  /// Throws UnknownClass.
  const ClassInfo& info(const IsoClassId& id) const;
  const QuiverRep& representative(const IsoClassId& id) const { return info(id).rep; }
  IsoClassId zero_class() const;

  /// |prod GL_{n_i}(k_i)|
  mpz_class group_order(const DimVec& d) const;
  mpz_class aut_order(const QuiverRep& m) const;

  /// Hall numbers for gamma, computed from the given representative (or the
  /// canonical one). Cached per gamma when the canonical representative is used.
  const HallTable& hall_table(const IsoClassId& gamma) const;
  HallTable hall_table_from(const QuiverRep& gamma_rep) const;

 private:
  struct Table;
  const Table& table(const DimVec& d) const;

  SpeciesPtr species_;
  Caps caps_;
  mutable std::mutex mutex_;
  mutable std::map<DimVec, std::unique_ptr<Table>> tables_;
  mutable std::map<IsoClassId, std::unique_ptr<HallTable>> hall_;
};

std::vector<ClassInfo> iso_classes(const ModuleCategory& cat, const DimVec& d);
long hall_number(const ModuleCategory& cat, const IsoClassId& gamma, const IsoClassId& alpha, const IsoClassId& beta);
inline mpz_class aut_order(const ModuleCategory& cat, const QuiverRep& m) { return cat.aut_order(m); }

}  // namespace qhall
