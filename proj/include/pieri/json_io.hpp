#pragma once

#include <string>

#include "json.hpp"
#include "pieri/betti.hpp"
#include "pieri/classical.hpp"
#include "pieri/complex.hpp"
#include "pieri/linear.hpp"

namespace pieri {

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymmetricPolynomial& f);
SymmetricPolynomial symmetric_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const EquivariantComplex& c);
EquivariantComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EquivariantBettiTable& t);
EquivariantBettiTable equivariant_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const EquivariantDecomposition& d);
nlohmann::json to_json(const BottResult& r);
nlohmann::json to_json(const SheafPieriTerms& t);
nlohmann::json to_json(const LinearMap& m);
nlohmann::json to_json(const EulerCheck& e);

}  // namespace pieri
