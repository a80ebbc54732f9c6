#include "spinverlinde/levels.hpp"

#include <fmt/format.h>

#include "spinverlinde/errors.hpp"

namespace spinverlinde::levels {

namespace {

long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

void require(bool ok, Lattice lattice, long long value, const char* why) {
  if (!ok) {
    throw LevelError(fmt::format("{} level {} is invalid: {}", to_string(lattice), value, why));
  }
}

}  // namespace

std::string to_string(Lattice lattice) {
  switch (lattice) {
    case Lattice::so3: return "SO3";
    case Lattice::su2: return "SU2";
    case Lattice::bhmv: return "BHMV";
    case Lattice::bm: return "BM";
  }
  return "?";
}

template <Lattice L>
Level<L>::Level(long long value) : value_(value) {
  if constexpr (L == Lattice::bhmv) {
    require(value > 0, L, value, "must be positive");
  } else if constexpr (L == Lattice::bm) {
    require(value > 0, L, value, "must be positive");
    require(value % 8 == 0, L, value, "must be a multiple of 8");
  }
}

template class Level<Lattice::so3>;
template class Level<Lattice::su2>;
template class Level<Lattice::bhmv>;
template class Level<Lattice::bm>;

Lattice lattice_of(const LevelValue& level) {
  return std::visit([](const auto& l) { return std::decay_t<decltype(l)>::lattice; }, level);
}

long long value_of(const LevelValue& level) {
  return std::visit([](const auto& l) { return l.value(); }, level);
}

LevelValue make_level(Lattice lattice, long long value) {
  switch (lattice) {
    case Lattice::so3: return So3Level(value);
    case Lattice::su2: return Su2Level(value);
    case Lattice::bhmv: return BhmvLevel(value);
    case Lattice::bm: return BmLevel(value);
  }
  throw LevelError("unknown lattice");
}

Su2Level beta_pullback(So3Level level) { return Su2Level(2 * level.value()); }

BhmvLevel bhmv_from_su2(Su2Level level) {
  require(level.value() >= 0, Lattice::su2, level.value(), "BHMV index needs k >= 0");
  return BhmvLevel(2 * (level.value() + 2));
}

Su2Level su2_from_bhmv(BhmvLevel level) {
  require(level.value() % 2 == 0, Lattice::bhmv, level.value(), "odd p has no SU2 level");
  require(level.value() >= 4, Lattice::bhmv, level.value(), "p < 4 has no SU2 level");
  return Su2Level(level.value() / 2 - 2);
}

BmLevel bm_from_so3(So3Level level) {
  require(level.value() > 0 && mod(level.value(), 2) == 1, Lattice::so3, level.value(),
          "only odd positive SO3 levels pair with BM levels");
  return BmLevel(4 * (level.value() + 1));
}

So3Level so3_from_bm(BmLevel level) { return So3Level(level.value() / 4 - 1); }

BhmvLevel as_bhmv(BmLevel level) { return BhmvLevel(level.value()); }

So3Level metaplectic_shift(So3Level level) { return So3Level(level.value() + 1); }

Su2Level metaplectic_shift(Su2Level level) { return Su2Level(level.value() + 2); }

LevelValue metaplectic_shift(const LevelValue& level) {
  if (const auto* so3 = std::get_if<So3Level>(&level)) return metaplectic_shift(*so3);
  if (const auto* su2 = std::get_if<Su2Level>(&level)) return metaplectic_shift(*su2);
  throw LevelError(fmt::format("no metaplectic shift on the {} lattice", to_string(lattice_of(level))));
}

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

Parity grading_parity(int w2) {
  if (w2 != 0 && w2 != 1) throw std::invalid_argument(fmt::format("w2 must be 0 or 1, got {}", w2));
  return w2 == 1 ? Parity::odd : Parity::even;
}

std::vector<TableFinding> validate_columns(const std::vector<CorrespondenceColumn>& columns) {
  std::vector<TableFinding> findings;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto& col = columns[i];
    // Residue of p = 2(k+2) mod 8 depends only on k mod 4.
    const long long implied_bhmv = mod(bhmv_from_su2(Su2Level(col.su2_mod4)).value(), 8);
    bool ok = implied_bhmv == col.bhmv_mod8;
    std::string message =
        fmt::format("SU2 k = {} mod 4 gives p = 2(k+2) = {} mod 8; table lists {}", col.su2_mod4,
                    implied_bhmv, col.bhmv_mod8);
    if (col.so3_mod2) {
      const long long implied_su2 = mod(beta_pullback(So3Level(*col.so3_mod2)).value(), 4);
      const bool so3_ok = implied_su2 == col.su2_mod4;
      ok = ok && so3_ok;
      message += fmt::format("; SO3 k = {} mod 2 pulls back to {} mod 4", *col.so3_mod2, implied_su2);
    }
    findings.push_back(TableFinding{i, ok, std::move(message)});
  }
  return findings;
}

CorrespondenceTable correspondence_table() {
  CorrespondenceTable table;
  table.columns = {
      {0, 2, 1, std::string("spin structure")},
      {4, 0, 0, std::string("Z/2-bundle")},
      {2, 1, std::nullopt, std::nullopt},
      {6, 3, std::nullopt, std::nullopt},
  };
  table.findings = validate_columns(table.columns);
  for (const auto& f : table.findings) {
    if (table.columns[f.column].structure && !f.consistent) {
      throw LevelError("correspondence table failed validation: " + f.message);
    }
  }
  return table;
}

}  // namespace spinverlinde::levels
