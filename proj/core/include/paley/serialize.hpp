#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "paley/census.hpp"
#include "paley/ffield.hpp"
#include "paley/mds.hpp"
#include "paley/parity.hpp"
#include "paley/random_model.hpp"

// JSON shapes for machine-readable reports. Counts are decimal strings
// (they outgrow any native integer); probabilities and exact bounds are
// "num/den" strings plus a double convenience field.

namespace paley {

std::string to_string(const mpz_class& z);
std::string to_string(const mpq_class& q);

// {"p": .., "e": .., "modulus": [low..high]}; modulus omitted for e = 1.
nlohmann::json field_descriptor(const FiniteField& f);

nlohmann::json census_row_json(const FiniteField& f, const CensusReport& report,
                               const CensusRow& row);

nlohmann::json coeven_json(const FiniteField& f, const CoevenCount& count,
                           const std::string& method);

nlohmann::json bound_json(const BoundReport& rep);

nlohmann::json weil_json(const FiniteField& f,
                         const std::vector<uint32_t>& w_set, uint32_t n_power,
                         const WeilReport& rep);

nlohmann::json grs_code_json(const FiniteField& f, const GrsCode& code,
                             bool self_dual, bool mds, uint32_t distance);
GrsCode grs_code_from_json(const nlohmann::json& j);

// "q length k" header line, then k generator rows of canonical element
// indices.
void write_generator_text(std::ostream& os, const GrsCode& code);

nlohmann::json coeven_pairs_json(const FiniteField& f,
                                 const CoevenPairCensus& census);

nlohmann::json random_model_json(const RandomModelReport& rep);

}  // namespace paley
