#include "varlam/error.hpp"
#include "varlam/variadic.hpp"

namespace varlam {

const std::vector<VariadicEntry>& library() {
  using O = OracleKind;
  static const std::vector<VariadicEntry> entries = {
      {"VarI", O::Family, "I"},
      {"VarK", O::Family, "K"},
      {"VarS", O::Family, "S"},
      {"VarB", O::Family, "B"},
      {"VarC", O::Family, "C"},
      {"VarBalt", O::Family, "B"},
      {"VarCalt", O::Family, "C"},
      {"VarSel", O::Family, "Sel", true},
      {"VarProj", O::Family, "Proj", true},
      {"VarTup", O::Family, "NtupMaker"},
      {"Apply", O::Laws, ""},
      {"VarRightApp", O::Family, "RightApplicator"},
      {"VarExtend", O::Laws, ""},
      {"Catenate", O::Laws, ""},
      {"Iota", O::Iota, ""},
      {"VarRev", O::Family, "R"},
      {"VarMap", O::Family, "Map"},
      {"VarPhi", O::FixedPoint, "Phi", true, CheckMode::Observational},
      {"VarPsi", O::FixedPoint, "Psi", true, CheckMode::Observational},
      {"VarM", O::Family, "M", true},
      {"Ystar", O::FixedPoint, "", false, CheckMode::Observational},
      {"YstarCurried", O::FixedPoint, "", false, CheckMode::Observational},
      {"VarMakeX", O::OnePoint, ""},
  };
  return entries;
}

const VariadicEntry& library_entry(const std::string& name) {
  for (const auto& e : library())
    if (e.name == name) return e;
  throw Error(ErrorCode::UnboundName, "no variadic entry named " + name);
}

}  // namespace varlam
