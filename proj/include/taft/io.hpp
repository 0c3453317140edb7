#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "taft/compare.hpp"
#include "taft/grothendieck.hpp"

namespace taft {

// ---- JSON emitters ---------------------------------------------------------
// Numbers are emitted as {"conductor": N, "coeffs": [[num, den], ...]} with
// the coefficient of zeta_N^k at position k, reduced modulo the N-th
// cyclotomic polynomial, in lowest terms with positive denominators.
// Integers that do not fit in 64 bits fall back to decimal strings.
nlohmann::json to_json(const CycNum& x);
nlohmann::json to_json(const DoubleElt& x);
nlohmann::json to_json(const CycMatrix& m);
nlohmann::json to_json(const FusionRing& r);
nlohmann::json to_json(const StableRing& r);
nlohmann::json to_json(const FusionDatum& fd);
nlohmann::json to_json(const MalleDatum& md);
nlohmann::json to_json(const CompareReport& rep);
nlohmann::json to_json(const CheckReport& rep);
nlohmann::json decomposition_to_json(const std::map<Weight, long>& mult);

// ---- JSON parsers (inverses of the emitters) -------------------------------
CycNum cyc_from_json(const nlohmann::json& j);
DoubleElt double_elt_from_json(const Algebra& alg, const nlohmann::json& j);
CycMatrix matrix_from_json(const nlohmann::json& j);
FusionRing ring_from_json(const nlohmann::json& j);
FusionDatum datum_from_json(const nlohmann::json& j);
MalleDatum malle_from_json(const nlohmann::json& j);
CompareReport compare_from_json(const nlohmann::json& j);
CheckReport check_from_json(const nlohmann::json& j);
std::map<Weight, long> decomposition_from_json(const nlohmann::json& j);

// ---- LaTeX emitters --------------------------------------------------------
// Numbers print as combinations of zeta powers with exponents in
// {0, ..., N-1} after reduction; rational coefficients use \frac.
std::string latex(const CycNum& x);
std::string latex_matrix(const CycMatrix& m);
std::string latex_table(const FusionRing& r);   // multiplication table
std::string latex_table(const StableRing& r);
std::string latex_datum(const FusionDatum& fd);  // S as a matrix, T as a list
std::string latex_datum(const MalleDatum& md);

// ---- Plain-text emitters ---------------------------------------------------
std::string text(const FusionRing& r);
std::string text(const StableRing& r);
std::string text(const FusionDatum& fd);
std::string text(const MalleDatum& md);
std::string text(const CompareReport& rep);
std::string text(const CheckReport& rep);
std::string text(const std::map<Weight, long>& mult);

}  // namespace taft
