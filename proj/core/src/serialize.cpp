#include "paley/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "paley/error.hpp"

namespace paley {

using nlohmann::json;

std::string to_string(const mpz_class& z) { return z.get_str(); }
std::string to_string(const mpq_class& q) { return q.get_str(); }

json field_descriptor(const FiniteField& f) {
  json j{{"p", f.p()}, {"e", f.e()}};
  if (f.e() > 1) j["modulus"] = f.modulus();
  return j;
}

json census_row_json(const FiniteField& f, const CensusReport& report,
                     const CensusRow& row) {
  json j{
      {"q", report.q},
      {"kind", to_string(report.kind)},
      {"field", field_descriptor(f)},
      {"r", row.r},
      {"total", to_string(row.total)},
      {"truncated", row.truncated},
  };
  if (row.mode == CensusMode::exhaustive) {
    j["mode"] = "exhaustive";
    j["even"] = std::to_string(row.counts.even);
    j["odd"] = std::to_string(row.counts.odd);
    j["mixed"] = std::to_string(row.counts.mixed);
  } else {
    j["mode"] = "sampled";
    j["samples"] = row.samples;
    j["seed"] = report.seed;
    const double s = double(row.samples);
    auto put = [&](const char* name, uint64_t hits) {
      const double frac = double(hits) / s;
      j[std::string(name) + "_hits"] = hits;
      j[std::string(name) + "_fraction"] = frac;
      j[std::string(name) + "_stderr"] =
          std::sqrt(std::max(frac * (1.0 - frac), 0.0) / s);
      // Rounded count estimate: total * hits / samples.
      mpz_class est = row.total * long(hits);
      est += long(row.samples / 2);
      est /= long(row.samples);
      j[std::string(name) + "_estimate"] = to_string(est);
    };
    put("even", row.counts.even);
    put("odd", row.counts.odd);
    put("mixed", row.counts.mixed);
  }
  return j;
}

json coeven_json(const FiniteField& f, const CoevenCount& count,
                 const std::string& method) {
  return json{
      {"q", f.q()},
      {"field", field_descriptor(f)},
      {"count", to_string(count.count)},
      {"dimension", count.dimension},
      {"method", method},
  };
}

json bound_json(const BoundReport& rep) {
  return json{
      {"n", rep.n},
      {"theta", rep.theta},
      {"bound", to_string(rep.bound_value)},
      {"bound_decimal", rep.bound_value.get_d()},
      {"entropy_rhs", rep.entropy_rhs},
  };
}

json weil_json(const FiniteField& f, const std::vector<uint32_t>& w_set,
               uint32_t n_power, const WeilReport& rep) {
  return json{
      {"q", f.q()},
      {"field", field_descriptor(f)},
      {"w", w_set},
      {"n", n_power},
      {"lhs", rep.lhs},
      {"bound", rep.bound},
      {"ok", rep.ok},
  };
}

json grs_code_json(const FiniteField& f, const GrsCode& code, bool self_dual,
                   bool mds, uint32_t distance) {
  std::vector<std::vector<uint32_t>> rows(code.k);
  for (uint32_t r = 0; r < code.k; ++r) {
    rows[r].resize(code.length());
    for (uint32_t c = 0; c < code.length(); ++c) rows[r][c] = code.gen(r, c);
  }
  return json{
      {"q", code.q},
      {"field", field_descriptor(f)},
      {"n", code.length()},
      {"k", code.k},
      {"extended", code.extended},
      {"lambda", code.lambda},
      {"alphas", code.alphas},
      {"v", code.v},
      {"generator", rows},
      {"self_dual", self_dual},
      {"mds", mds},
      {"d", distance},
  };
}

GrsCode grs_code_from_json(const json& j) {
  GrsCode code;
  try {
    code.q = j.at("q").get<uint32_t>();
    code.k = j.at("k").get<uint32_t>();
    code.extended = j.at("extended").get<bool>();
    code.lambda = j.value("lambda", 1u);
    code.alphas = j.at("alphas").get<std::vector<uint32_t>>();
    code.v = j.at("v").get<std::vector<uint32_t>>();
    code.n_eval = uint32_t(code.alphas.size());
    const auto rows = j.at("generator").get<std::vector<std::vector<uint32_t>>>();
    if (rows.size() != code.k)
      fail(ErrorKind::ParseError, "generator row count != k");
    code.generator.reserve(std::size_t(code.k) * code.length());
    for (const auto& row : rows) {
      if (row.size() != code.length())
        fail(ErrorKind::ParseError, "generator row length != code length");
      code.generator.insert(code.generator.end(), row.begin(), row.end());
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad code record: ") + e.what());
  }
  return code;
}

void write_generator_text(std::ostream& os, const GrsCode& code) {
  os << code.q << ' ' << code.length() << ' ' << code.k << '\n';
  for (uint32_t r = 0; r < code.k; ++r) {
    for (uint32_t c = 0; c < code.length(); ++c) {
      if (c) os << ' ';
      os << code.gen(r, c);
    }
    os << '\n';
  }
}

json coeven_pairs_json(const FiniteField& f, const CoevenPairCensus& census) {
  return json{
      {"q", f.q()},
      {"field", field_descriptor(f)},
      {"count", to_string(census.count)},
      {"method", census.method},
      {"witnesses", census.witnesses},
  };
}

json random_model_json(const RandomModelReport& rep) {
  json j{
      {"kind", rep.digraph ? "digraph" : "graph"},
      {"n", rep.n},
      {"r", rep.r},
      {"p", to_string(rep.p)},
      {"closed_form", to_string(rep.closed_form)},
      {"closed_form_decimal", rep.closed_form.get_d()},
  };
  if (rep.trials > 0) {
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["mc_mean"] = rep.mc_mean;
    j["mc_stderr"] = rep.mc_stderr;
    j["two_level"] = rep.two_level;
    if (rep.two_level) j["subset_samples"] = rep.subset_samples;
  }
  return j;
}

}  // namespace paley
