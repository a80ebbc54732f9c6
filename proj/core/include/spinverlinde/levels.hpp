#pragma once

// Level lattices and the conversions between them.
//
//   SO3   integer multiples of the SO(3) generator 1
//   SU2   integer multiples of the SU(2) generator 1'
//   BHMV  the positive index p of the combinatorial TQFTs
//   BM    BHMV indices p = 0 mod 8 carrying the spin refinement
//
// Each lattice is its own type, so adding an SO3 level to an SU2 level does
// not compile; moving between lattices goes through a named conversion.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spinverlinde::levels {

enum class Lattice { so3, su2, bhmv, bm };

std::string to_string(Lattice lattice);

template <Lattice L>
class Level {
 public:
  /// Throws LevelError when `value` is outside the lattice's admissible set.
  explicit Level(long long value);

  static constexpr Lattice lattice = L;
  long long value() const { return value_; }

  friend auto operator<=>(const Level&, const Level&) = default;

 private:
  long long value_;
};

using So3Level = Level<Lattice::so3>;
using Su2Level = Level<Lattice::su2>;
using BhmvLevel = Level<Lattice::bhmv>;
using BmLevel = Level<Lattice::bm>;

/// Additive structure exists only inside the two cohomological lattices.
inline So3Level operator+(So3Level a, So3Level b) { return So3Level(a.value() + b.value()); }
inline Su2Level operator+(Su2Level a, Su2Level b) { return Su2Level(a.value() + b.value()); }

/// Runtime-tagged level, for inputs whose lattice is only known at run time.
using LevelValue = std::variant<So3Level, Su2Level, BhmvLevel, BmLevel>;

Lattice lattice_of(const LevelValue& level);
long long value_of(const LevelValue& level);
LevelValue make_level(Lattice lattice, long long value);

/// Pullback along SU(2) -> SO(3): k * 1 maps to 2k * 1'.
Su2Level beta_pullback(So3Level level);

/// p = 2(k + 2).
BhmvLevel bhmv_from_su2(Su2Level level);
/// k = p/2 - 2; throws LevelError for odd p or p < 4.
Su2Level su2_from_bhmv(BhmvLevel level);

/// p = 4(k + 1) = 8m for odd k = 2m - 1; even k is rejected.
BmLevel bm_from_so3(So3Level level);
/// k = p/4 - 1.
So3Level so3_from_bm(BmLevel level);
BhmvLevel as_bhmv(BmLevel level);

/// Level shift from the half-form correction: SO3 k -> k + 1, SU2 k' -> k' + 2.
So3Level metaplectic_shift(So3Level level);
Su2Level metaplectic_shift(Su2Level level);
/// Throws LevelError for BHMV and BM values.
LevelValue metaplectic_shift(const LevelValue& level);

enum class Parity { even = 0, odd = 1 };
std::string to_string(Parity parity);

/// Grading of the Pfaffian line on the w2 component at the shifted level.
Parity grading_parity(int w2);

struct CorrespondenceColumn {
  int bhmv_mod8;
  int su2_mod4;
  std::optional<int> so3_mod2;
  std::optional<std::string> structure;

  friend bool operator==(const CorrespondenceColumn&, const CorrespondenceColumn&) = default;
};

struct TableFinding {
  std::size_t column;
  bool consistent;
  std::string message;
};

struct CorrespondenceTable {
  std::vector<CorrespondenceColumn> columns;
  /// Result of checking every column against p = 2(k + 2) and beta_pullback.
  std::vector<TableFinding> findings;
};

/// The four-column table of level residues and the topological structure
/// each column corresponds to. Columns that carry a structure must validate
/// (LevelError otherwise); the bare residue columns are checked and their
/// findings reported without failing.
CorrespondenceTable correspondence_table();

/// Checks every column of `columns`; exposed for testing tampered tables.
std::vector<TableFinding> validate_columns(const std::vector<CorrespondenceColumn>& columns);

}  // namespace spinverlinde::levels
